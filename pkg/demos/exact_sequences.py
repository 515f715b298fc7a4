"""Long exact sequences for a subgroupoid and for a cover by two open pieces."""

from groupoid_homology.groupoid import (
    cyclic_group_table,
    disjoint_union,
    group_groupoid,
    orbits,
    pair_groupoid,
    unit_groupoid,
)
from groupoid_homology.sequences import MvCover, mv_les, snake_les, subgroupoid_ses, uct_naturality_check, verify_exactness


def show(les, title):
    print(title)
    for node in les.nodes:
        print(f"  {node.tag:>8}[{node.degree}]  {node.group}")
    print("  exact:", not verify_exactness(les), "\n")


# Z/2 sitting inside Z/4 as the even residues
z4 = group_groupoid(cyclic_group_table(4))
ses = subgroupoid_ses(z4, [0, 2], 2)
show(snake_les(ses, 2), "subgroupoid {0, 2} of Z/4")
print("universal coefficient squares commute for Z/2:", not uct_naturality_check(ses, "Z/2"), "\n")

# three components; the two pieces overlap in the middle one
g = disjoint_union([group_groupoid(cyclic_group_table(2)), pair_groupoid(2), unit_groupoid(1)])
left, middle, right = orbits(g)
cover = MvCover(g, set(left) | set(middle), set(middle) | set(right))
show(mv_les(cover, 2), "Mayer-Vietoris for Z/2 + pair(2) + point")
