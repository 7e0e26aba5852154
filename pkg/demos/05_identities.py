"""A tour of the exact identities the library verifies wholesale.

Zigzag ribbons count alternating permutations; slim shapes reduce the
excited count to a principal Schur value; rectangles with attached rotated
copies preserve hook multisets; and the skew count expands through the
Littlewood-Richardson coefficients.
"""

from math import comb

from skewtab import (
    Partition,
    catalan,
    dual_hook_products,
    euler_number,
    hlf_count,
    jacobi_trudi_count,
    lr_coefficient,
    parse_shape,
    regev_vershik_shape,
    rv_hook_identity_check,
    schur_principal,
    slim_xi_checks,
    staircase,
    xi_determinant,
    zigzag,
)
from skewtab.shapes import SkewShape, partitions_of

print("zigzag ribbons: e = Euler number, excited count = Catalan number")
for k in range(1, 7):
    shape = zigzag(k)
    print(f"  k={k}: e = {jacobi_trudi_count(shape):>9} = E_{2*k+1},"
          f"  xi = {xi_determinant(shape):>4} = C_{k}")
    assert jacobi_trudi_count(shape) == euler_number(2 * k + 1)
    assert xi_determinant(shape) == catalan(k)

print("\nslim shapes: the excited count is a principal Schur value")
rep = slim_xi_checks(parse_shape("7,6,5/2,1"))
print(f"  (7,6,5)/(2,1): xi = {rep.xi} = 2^C(3,2), ratio to ell^m/hooks = {rep.ratio}")
for ell in (3, 5, 8):
    assert schur_principal(staircase(ell), ell) == 2 ** comb(ell, 2)
print("  staircase inner: xi = 2^C(ell,2) for every slim outer shape")

print("\ndual hooks: prod h(x) <= prod (i+j-1), equality exactly on rectangles")
for parts in ((2, 1), (3, 3), (4, 2, 1)):
    h, hstar = dual_hook_products(Partition(parts))
    print(f"  {parts}: {h} <= {hstar}" + ("  (rectangle, equal)" if h == hstar else ""))

print("\nrectangle with two attached rotated copies: hook multiset splits")
sigma, rows, cols = Partition([2, 1]), 3, 3
assert rv_hook_identity_check(sigma, rows, cols)
shape = regev_vershik_shape(sigma, rows, cols)
s, t = sigma.size, rows * cols
e = jacobi_trudi_count(shape)
floor = comb(s + t, s) * hlf_count(sigma) * hlf_count(Partition([cols] * rows))
print(f"  sigma={list(sigma)}, {rows}x{cols}: e = {e} >= C({s+t},{s})*e(sigma)*e(rect) = {floor}")

print("\nLittlewood-Richardson expansion of a skew count")
lam, mu = Partition([4, 3, 1]), Partition([2, 1])
total = 0
for parts in partitions_of(lam.size - mu.size):
    c = lr_coefficient(lam, mu, Partition(parts))
    if c:
        print(f"  c^lam_(mu,{parts}) = {c}, f^{parts} = {hlf_count(Partition(parts))}")
        total += c * hlf_count(Partition(parts))
print(f"  sum = {total} = e(lam/mu) = {jacobi_trudi_count(SkewShape(lam, mu))}")
