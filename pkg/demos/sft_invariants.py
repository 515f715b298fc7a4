"""Homology of shifts of finite type, straight from adjacency matrices.

H0 is the cokernel of 1 - A^T and H1 its kernel, so two small matrices
already give different answers.  Changing coefficients goes through the
universal coefficient sequence.
"""

from groupoid_homology.sft import SftSpec, sft_disjoint_union, sft_homology, sft_homology_with_coefficients

specs = {
    "A": SftSpec.from_rows([[2, 1], [1, 0]]),
    "B": SftSpec.from_rows([[2, 1], [1, 2]]),
    "C": SftSpec.from_rows([[3]]),
}

for name, spec in specs.items():
    h = sft_homology(spec)
    det = spec.bowen_franks_matrix().determinant()
    print(f"{name}: H0 = {h[0]}, H1 = {h[1]}   (det(1 - A^T) = {det})")

union = sft_disjoint_union(list(specs.values()))
print(f"\ndisjoint union: H0 = {union[0]}, H1 = {union[1]}")

print("\nwith finite coefficients:")
for coeff in ("Z/2", "Z/3", "Z/4"):
    h0, h1 = (sft_homology_with_coefficients(list(specs.values()), coeff, n) for n in (0, 1))
    print(f"  {coeff:>4}: H0 = {h0}, H1 = {h1}")
