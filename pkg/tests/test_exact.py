from fractions import Fraction
from math import comb, factorial

import pytest

from skewtab.errors import CapExceeded
from skewtab.exact import (
    brute_force_count,
    catalan,
    double_superfactorial,
    dual_hook_products,
    euler_number,
    factorials,
    hlf_count,
    jacobi_trudi_count,
    lr_coefficient,
    naive_hlf,
    odd_double_factorial,
    rv_hook_identity_check,
    schur_principal,
    super_doublefactorial,
    superfactorial,
)
from skewtab.shapes import Partition, SkewShape, partitions_of, subpartitions, zigzag


def test_factorial_families():
    assert superfactorial(3) == 12
    assert superfactorial(0) == 1
    assert super_doublefactorial(2) == 3
    assert double_superfactorial(2) == 6
    assert odd_double_factorial(3) == 15
    assert [odd_double_factorial(n) for n in range(5)] == [1, 1, 3, 15, 105]
    assert factorials("superfactorial", 4) == 288
    with pytest.raises(ValueError):
        factorials("nope", 1)
    # defining recurrences
    for n in range(1, 12):
        assert superfactorial(n) == superfactorial(n - 1) * factorial(n)
        assert double_superfactorial(n) == double_superfactorial(n - 1) * factorial(2 * n - 1)
        assert super_doublefactorial(n) == super_doublefactorial(n - 1) * odd_double_factorial(n)


def test_hlf_count():
    assert hlf_count(Partition([2, 2])) == 2
    assert hlf_count(Partition([1])) == 1
    assert hlf_count(Partition()) == 1
    # square closed form: n! * Phi(k-1)^2 / Phi(2k-1)
    for k in range(1, 6):
        lam = Partition([k] * k)
        closed = factorial(k * k) * superfactorial(k - 1) ** 2 // superfactorial(2 * k - 1)
        assert hlf_count(lam) == closed


def test_naive_hlf():
    assert naive_hlf(SkewShape([4, 4, 3, 2], [2, 1])) == 1260
    lam = Partition([3, 2])
    assert naive_hlf(SkewShape(lam)) == hlf_count(lam)
    # hooks of (2,2) at the three skew cells are 2, 2, 1
    assert naive_hlf(SkewShape([2, 2], [1])) == Fraction(3, 2)


def test_jacobi_trudi():
    assert jacobi_trudi_count(SkewShape([4, 4, 3, 2], [2, 1])) == 3060
    assert jacobi_trudi_count(SkewShape([2, 2], [1])) == 2
    assert jacobi_trudi_count(SkewShape([1], [1])) == 1
    for m in range(1, 9):
        for parts in partitions_of(m):
            lam = Partition(parts)
            assert jacobi_trudi_count(SkewShape(lam)) == hlf_count(lam)


def test_brute_force():
    assert brute_force_count(SkewShape([4, 4, 3, 2], [2, 1])) == 3060
    assert brute_force_count(SkewShape([1])) == 1
    assert brute_force_count(zigzag(2)) == 16
    with pytest.raises(CapExceeded):
        brute_force_count(SkewShape([5] * 5), cap=24)


def test_oracle_agreement_small(small_connected_shapes):
    for shape in small_connected_shapes:
        assert jacobi_trudi_count(shape) == brute_force_count(shape)


def test_euler_numbers():
    assert [euler_number(n) for n in range(8)] == [1, 1, 1, 2, 5, 16, 61, 272]
    assert euler_number(5) == brute_force_count(zigzag(2))
    assert euler_number(7) == brute_force_count(zigzag(3))
    with pytest.raises(CapExceeded):
        euler_number(50, cap=10)


def test_catalan():
    assert [catalan(m) for m in range(6)] == [1, 1, 2, 5, 14, 42]


def test_lr_examples():
    assert lr_coefficient([2, 1], [1], [1, 1]) == 1
    assert lr_coefficient([3, 2, 1], [], [3, 2, 1]) == 1
    for parts in partitions_of(5):
        assert lr_coefficient(parts, (), parts) == 1
    assert lr_coefficient([2, 2], [1], [3]) == 0  # column condition unsatisfiable
    with pytest.raises(ValueError):
        lr_coefficient([2, 1], [1], [1])


def test_lr_consistency_identity():
    # sum over nu of c^lam_{mu nu} * f^nu equals the skew count
    for m in range(1, 7):
        for parts in partitions_of(m):
            lam = Partition(parts)
            for mu in subpartitions(lam):
                n = lam.size - mu.size
                if n == 0:
                    continue
                total = sum(
                    lr_coefficient(lam, mu, Partition(np)) * hlf_count(Partition(np))
                    for np in partitions_of(n)
                )
                assert total == jacobi_trudi_count(SkewShape(lam, mu))


def test_schur_principal():
    assert schur_principal(Partition([2, 1]), 3) == 8
    assert schur_principal(Partition([1]), 7) == 7
    assert schur_principal(Partition([2, 1]), 1) == 0
    assert schur_principal(Partition([2, 1, 1]), 2) == 0


def test_dual_hook_products():
    assert dual_hook_products(Partition([2, 1])) == (3, 4)
    assert dual_hook_products(Partition([1])) == (1, 1)
    h, hs = dual_hook_products(Partition([3, 3]))
    assert h == hs
    for m in range(1, 13):
        for parts in partitions_of(m):
            nu = Partition(parts)
            h, hs = dual_hook_products(nu)
            assert h <= hs
            assert (h == hs) == (len(set(nu.parts)) == 1)


def test_hook_length_sum_identity():
    # both hook sums equal n + sum C(nu_i, 2) + sum C(nu'_j, 2)
    for m in range(1, 13):
        for parts in partitions_of(m):
            nu = Partition(parts)
            expect = (
                m
                + sum(comb(p, 2) for p in nu.parts)
                + sum(comb(q, 2) for q in nu.conjugate().parts)
            )
            assert sum(nu.hooks().values()) == expect
            assert sum(i + j - 1 for i, j in nu.cells()) == expect


def test_rv_hook_identity():
    assert rv_hook_identity_check(Partition(), 2, 3)
    assert rv_hook_identity_check(Partition([2, 2]), 2, 2)  # sigma = tau
    assert rv_hook_identity_check(Partition([1]), 2, 2)
    assert rv_hook_identity_check(Partition([3, 1]), 2, 3)
