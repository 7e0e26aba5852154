from fractions import Fraction
from math import comb, factorial

import pytest

from skewtab.errors import CapExceeded
from skewtab.exact import brute_force_count, naive_hlf, schur_principal
from skewtab.excited import (
    border_strip_decomposition,
    enumerate_excited,
    flagged_tableaux_count,
    is_excited_diagram,
    macmahon_xi,
    macmahon_xi_superfactorial,
    min_max_term,
    nhlf_count,
    paths_from_diagram,
    proctor_xi,
    proctor_xi_superfactorial,
    row_flags,
    slim_xi_checks,
    xi_bounds,
    xi_determinant,
)
from skewtab.shapes import (
    Cell,
    Partition,
    SkewShape,
    inverted_thick_hook,
    slim_stripe,
    staircase,
    thick_ribbon,
    zigzag,
)

GOLDEN = SkewShape([4, 4, 3, 2], [2, 1])


def test_enumerate_golden():
    diagrams = enumerate_excited(GOLDEN)
    assert len(diagrams) == 5
    assert diagrams[0] == tuple(sorted(GOLDEN.inner.cells()))
    assert len(set(diagrams)) == 5
    for d in diagrams:
        assert is_excited_diagram(GOLDEN, d)


def test_enumerate_small():
    diagrams = enumerate_excited(SkewShape([2, 2], [1]))
    assert [tuple(d) for d in diagrams] == [((1, 1),), ((2, 2),)]
    assert enumerate_excited(SkewShape([3, 2, 1])) == [()]
    with pytest.raises(CapExceeded):
        enumerate_excited(SkewShape([8, 8, 8, 8], [4, 4, 4, 4]), mu_cap=10)
    with pytest.raises(CapExceeded):
        enumerate_excited(GOLDEN, xi_cap=3)


def test_diagram_characterization():
    # wrong diagonal count
    assert not is_excited_diagram(GOLDEN, [(1, 1), (1, 2)])
    # right diagonals, broken order relation is impossible to fake with 3 cells
    assert is_excited_diagram(GOLDEN, [(1, 1), (1, 2), (2, 1)])


def test_characterization_enumerates_the_same_set(small_connected_shapes):
    # third route: move positions independently along each diagonal and keep
    # the sets passing the characterization; must equal the BFS enumeration
    from itertools import product

    for shape in small_connected_shapes[::11]:
        lam, mu = shape.outer, shape.inner
        per_cell = []
        for i, j in sorted(mu.cells()):
            spots = []
            t = 0
            while (i + t, j + t) in lam:
                spots.append(Cell(i + t, j + t))
                t += 1
            per_cell.append(spots)
        count = sum(
            1
            for combo in product(*per_cell)
            if len(set(combo)) == len(combo) and is_excited_diagram(shape, combo)
        )
        assert count == len(enumerate_excited(shape))


def test_row_flags_golden():
    assert row_flags(GOLDEN) == [2, 3]


def test_xi_determinant():
    assert xi_determinant(GOLDEN) == 5
    assert xi_determinant(SkewShape([3, 2, 1])) == 1
    assert xi_determinant(SkewShape([5, 4, 4, 1], [2, 1])) == 8
    assert len(enumerate_excited(SkewShape([5, 4, 4, 1], [2, 1]))) == 8


def test_xi_det_matches_enumeration(small_connected_shapes):
    for shape in small_connected_shapes:
        assert xi_determinant(shape) == len(enumerate_excited(shape))


def test_flagged_cross_check(small_connected_shapes):
    for shape in small_connected_shapes[::7]:
        assert flagged_tableaux_count(shape) == xi_determinant(shape)
    assert flagged_tableaux_count(GOLDEN) == 5


def test_nhlf_count():
    assert nhlf_count(GOLDEN) == 3060
    assert nhlf_count(SkewShape([3, 2, 1], [1])) == 16
    lam = Partition([4, 2, 1])
    from skewtab.exact import hlf_count

    assert nhlf_count(SkewShape(lam)) == hlf_count(lam)


def test_min_max_term():
    lo, hi = min_max_term(GOLDEN)
    assert hi == naive_hlf(GOLDEN) / factorial(GOLDEN.size)
    assert lo <= hi
    shape = SkewShape([3, 2])
    lo, hi = min_max_term(shape)
    assert lo == hi == Fraction(1, shape.hook_product())
    lo, hi = min_max_term(SkewShape([2, 2], [1]))
    assert hi == Fraction(1, 4)  # inner at (1,1) leaves free hooks 2, 2, 1
    assert lo == Fraction(1, 12)  # inner at (2,2) leaves free hooks 3, 2, 2
    assert factorial(3) * (hi + lo) == 2  # the two terms assemble the count


def test_border_strips():
    strips = border_strip_decomposition(GOLDEN)
    assert len(strips) == 4
    assert sum(len(s) for s in strips) == GOLDEN.size
    assert len(border_strip_decomposition(zigzag(3))) == 1
    assert len(border_strip_decomposition(SkewShape([2, 2], [1]))) == 1


def test_paths_from_diagram():
    shape = SkewShape([2, 2], [1])
    fam = paths_from_diagram(shape, [(2, 2)])
    assert fam.support == {(1, 1), (1, 2), (2, 1)}
    fam0 = paths_from_diagram(shape, [(1, 1)])
    assert fam0.support == {(1, 2), (2, 1), (2, 2)}
    assert fam.endpoints() == fam0.endpoints()
    with pytest.raises(ValueError):
        paths_from_diagram(shape, [(1, 2)])


def test_paths_injective_and_fixed_endpoints():
    shape = SkewShape([5, 4, 4, 1], [2, 1])
    diagrams = enumerate_excited(shape)
    families = [paths_from_diagram(shape, d) for d in diagrams]
    supports = {fam.support for fam in families}
    assert len(supports) == len(diagrams) == 8
    endpoints = {fam.endpoints() for fam in families}
    assert len(endpoints) == 1  # start/end cells do not depend on the diagram
    for fam in families:
        assert sum(len(p) for p in fam.paths) == shape.outer.size - shape.inner.size


def test_xi_bounds(small_connected_shapes):
    lo, hi = xi_bounds(SkewShape([2, 2], [1]))
    assert lo == 4 and lo >= 2
    assert xi_bounds(SkewShape([3, 3], [3, 3])) == (1, 1)
    for shape in small_connected_shapes:
        b2, bpoly = xi_bounds(shape)
        xi = xi_determinant(shape)
        assert xi <= b2 and xi <= bpoly
    b2, bpoly = xi_bounds(GOLDEN)
    assert b2 >= 5 and bpoly >= 5


def test_proctor():
    assert proctor_xi(2) == 2
    assert proctor_xi_superfactorial(2) == 2
    assert proctor_xi(4) == len(enumerate_excited(thick_ribbon(4)))
    for k in (2, 4, 6, 8):
        assert proctor_xi(k) == proctor_xi_superfactorial(k)
    with pytest.raises(ValueError):
        proctor_xi(3)


def test_macmahon():
    assert macmahon_xi(1) == 2
    assert macmahon_xi(1) == len(enumerate_excited(inverted_thick_hook(1)))
    assert macmahon_xi(2) == 20
    assert macmahon_xi(2) == len(enumerate_excited(inverted_thick_hook(2)))
    for k in range(1, 9):
        assert macmahon_xi(k) == macmahon_xi_superfactorial(k)


def test_zigzag_catalan_offset():
    # with the (k-1,...,1) staircase convention the excited count of the odd
    # zigzag is the k-th Catalan number, pinned here by direct enumeration
    from skewtab.exact import catalan

    for k in range(1, 6):
        shape = zigzag(k)
        assert len(enumerate_excited(shape)) == catalan(k)
        assert xi_determinant(shape) == catalan(k)


def test_slim_checks():
    rep = slim_xi_checks(SkewShape([7, 6, 5], [2, 1]))
    assert rep.xi == 8 and rep.staircase_power_ok
    rep1 = slim_xi_checks(SkewShape([9, 8, 7, 6], [1]))
    assert rep1.xi == 4  # single-cell inner slides down the main diagonal
    rep2 = slim_xi_checks(SkewShape([12, 11, 10, 9], staircase(4)))
    assert rep2.xi == 2 ** comb(4, 2) == 64
    assert rep2.xi == schur_principal(staircase(4), 4)
    with pytest.raises(ValueError):
        slim_xi_checks(SkewShape([4, 4, 3, 2], [2, 1]))


def test_slim_stripe_family():
    for ell in (2, 3, 4):
        rep = slim_xi_checks(slim_stripe(ell))
        assert rep.staircase_power_ok


def test_nhlf_equals_brute(small_connected_shapes):
    for shape in small_connected_shapes[::5]:
        assert nhlf_count(shape) == brute_force_count(shape)


def test_thick_ribbon_hook_product_closed_form():
    # for even k the skew hooks of delta_2k/delta_k multiply to
    # ((2k-1)!!)^k * (1!! 3!! ... (2k-3)!!)
    from skewtab.exact import odd_double_factorial, super_doublefactorial

    for k in (2, 4, 6):
        shape = thick_ribbon(k)
        closed = odd_double_factorial(k) ** k * super_doublefactorial(k - 1)
        assert shape.hook_product() == closed


def test_inverted_hook_identities():
    # the single-cell-wide inverted hooks have binomial counts on the nose
    from fractions import Fraction as F
    from math import comb, factorial

    from skewtab.exact import jacobi_trudi_count, naive_hlf
    from skewtab.shapes import inverted_hook

    for k in range(1, 6):
        shape = inverted_hook(k)
        assert shape.size == 2 * k + 1
        assert jacobi_trudi_count(shape) == comb(2 * k, k)
        assert xi_determinant(shape) == comb(2 * k, k)
        assert naive_hlf(shape) == F(factorial(2 * k + 1), factorial(k + 1) ** 2)


def test_oracles_extend_to_disconnected_shapes():
    # the determinant, the hook sum and the excited determinant all remain
    # valid without connectivity (e.g. corner-to-corner rectangle pairs)
    from skewtab.exact import jacobi_trudi_count
    from skewtab.shapes import Partition, SkewShape, partitions_of, subpartitions

    checked = 0
    for m in range(1, 8):
        for parts in partitions_of(m):
            lam = Partition(parts)
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                if shape.size == 0 or shape.is_connected():
                    continue
                checked += 1
                jt = jacobi_trudi_count(shape)
                assert jt == brute_force_count(shape) == nhlf_count(shape)
                assert xi_determinant(shape) == len(enumerate_excited(shape))
    assert checked > 100
