"""A pair groupoid has the homology of a single point.

The retraction of pair(2) onto one of its units is similar to the identity,
and the similarity produces an explicit chain homotopy.  Convolution on a
pair groupoid is ordinary matrix multiplication.
"""

from groupoid_homology.algebra import GroupoidFunction, convolve
from groupoid_homology.groupoid import EtaleFunctor, pair_groupoid, unit_groupoid
from groupoid_homology.moore import groupoid_homology, similarity_chain_homotopy

point = groupoid_homology(unit_groupoid(1), 2)
for n in (2, 3, 4):
    h = groupoid_homology(pair_groupoid(n), 2)
    print(f"pair({n}):", [str(x) for x in h.groups], "same as a point:", h == point)

g = pair_groupoid(2)
identity = EtaleFunctor.identity(g)
collapse = EtaleFunctor.from_arrow_map(g, g, [0, 0, 0, 0])
# theta(x) is the arrow from x to the unit 0
homotopy = similarity_chain_homotopy(identity, collapse, {0: 0, 3: 1}, 2)
print("\nchain homotopy identity holds in every degree:", homotopy.failures() == [])
for n, h in enumerate(homotopy.h):
    print(f"  h[{n}] = {h.tolist()}")

a = GroupoidFunction(g, [1, 2, 3, 4])  # [[1, 2], [3, 4]] read row by row
b = GroupoidFunction(g, [0, 1, 1, 0])
print("\n[[1,2],[3,4]] * [[0,1],[1,0]] =", convolve(g, a, b).values)
