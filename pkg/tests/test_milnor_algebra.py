import math
import random

import pytest

from singlink import (
    DegenerateDegreeError,
    InexactDivisionError,
    PoincareSeries,
    WeightSystem,
    WrongDimensionError,
    characteristic_divisor,
    count_monomials,
    genus_branch_curve,
    graded_dim,
    hodge_numbers,
    middle_betti,
    middle_betti_hodge,
    poincare_series,
    signature,
)


def truncated_series(weights, degree, top):
    """Independent route: multiply the closed product as power series.

    1/(t^w - 1) has no series at 0, but the full product does: expand each
    factor (t^{d-w} - 1) * (1 + t^w + t^{2w} + ...) * (-1) ... equivalently
    compute (1 - t^{d-w}) / (1 - t^w) = sum_{j} t^{jw} truncated, factor by
    factor, which is exact for a complete intersection.
    """
    series = [0] * (top + 1)
    series[0] = 1
    for w in weights:
        # multiply by 1 - t^{d-w}
        nxt = list(series)
        for k in range(degree - w, top + 1):
            nxt[k] -= series[k - (degree - w)]
        # divide by 1 - t^w: cumulative sum with stride w
        for k in range(w, top + 1):
            nxt[k] += nxt[k - w]
        series = nxt
    return tuple(series)


def test_series_of_the_reference_links(f60, f256_1, f256_2):
    for f, mu in ((f60, 86), (f256_1, 255), (f256_2, 255)):
        s = poincare_series(f.system)
        assert s.total() == mu
        assert s.top == sum(f.system.degree - 2 * wi for wi in f.system.weights)
        assert s.coefficients == s.coefficients[::-1]


def test_series_matches_truncated_power_series_expansion():
    rng = random.Random(2718)
    seen = 0
    while seen < 25:
        ws = tuple(rng.randint(1, 10) for _ in range(rng.randint(2, 4)))
        if math.gcd(*ws) != 1:
            continue
        degree = math.lcm(*ws) * rng.randint(1, 2)
        if degree <= max(ws):
            continue
        w = WeightSystem(ws, degree)
        s = poincare_series(w)
        assert s.coefficients == truncated_series(ws, degree, s.top)
        seen += 1


def test_series_rejects_degree_not_above_every_weight():
    with pytest.raises(DegenerateDegreeError):
        poincare_series(WeightSystem((2, 1, 1, 1), 2))
    with pytest.raises(DegenerateDegreeError):
        poincare_series(WeightSystem((5, 1), 5))


def test_series_raises_on_data_with_no_algebra():
    # (2, 3) at degree 7: the closed product is not a polynomial
    with pytest.raises(InexactDivisionError):
        poincare_series(WeightSystem((2, 3), 7))


def test_poincare_series_validation():
    with pytest.raises(ValueError):
        PoincareSeries(())
    with pytest.raises(ValueError):
        PoincareSeries((1, -1, 1))
    with pytest.raises(ValueError):
        PoincareSeries((1, 2, 2))
    s = PoincareSeries((1, 2, 1))
    assert s.top == 2
    assert s.total() == 4
    assert s.coefficient(1) == 2
    assert s.coefficient(3) == 0
    assert s.coefficient(-1) == 0


def test_graded_dims_of_the_degree_60_link(f60):
    w = f60.system
    assert graded_dim(w, 59) == 2
    assert graded_dim(w, -1) == 0
    assert graded_dim(w, 119) == 0
    assert graded_dim(w, 0) == 1


def test_graded_dim_of_the_second_degree_256_link(f256_2):
    assert graded_dim(f256_2.system, 255) == 1


def test_graded_dim_matches_monomial_count_in_low_degrees():
    rng = random.Random(515)
    seen = 0
    while seen < 20:
        ws = tuple(rng.randint(1, 9) for _ in range(rng.randint(2, 4)))
        if math.gcd(*ws) != 1:
            continue
        degree = math.lcm(*ws) * 2
        if degree <= max(ws):
            continue
        w = WeightSystem(ws, degree)
        # below every partial degree d - w_i the Jacobian ideal is empty
        cutoff = min(degree - wi for wi in ws)
        for k in range(cutoff):
            assert graded_dim(w, k) == count_monomials(ws, k), (ws, degree, k)
        seen += 1


def test_hodge_numbers_of_the_reference_links(f60, f256_1, f256_2):
    assert hodge_numbers(f60.system) == {(0, 2): 0, (1, 1): 2, (2, 0): 0}
    assert hodge_numbers(f256_1.system) == {(0, 2): 0, (1, 1): 1, (2, 0): 0}
    assert hodge_numbers(f256_2.system) == {(0, 2): 0, (1, 1): 1, (2, 0): 0}


def test_hodge_route_agrees_with_divisor_route_for_middle_betti():
    rng = random.Random(99)
    seen = 0
    while seen < 20:
        ws = tuple(rng.randint(1, 9) for _ in range(rng.randint(2, 4)))
        if math.gcd(*ws) != 1:
            continue
        degree = math.lcm(*ws) * rng.randint(2, 3)
        w = WeightSystem(ws, degree)
        assert middle_betti_hodge(w) == middle_betti(characteristic_divisor(w))
        seen += 1


def test_hodge_numbers_of_the_quintic_threefold():
    w = WeightSystem((1, 1, 1, 1), 5)
    assert hodge_numbers(w) == {(0, 2): 4, (1, 1): 44, (2, 0): 4}
    assert middle_betti_hodge(w) == 52
    with pytest.raises(WrongDimensionError):
        hodge_numbers(WeightSystem((1,), 2))


def test_signature_values():
    assert signature(WeightSystem((9, 15, 17, 20), 60)) == -1
    assert signature(WeightSystem((11, 49, 69, 128), 256)) == 0
    assert signature(WeightSystem((13, 35, 81, 128), 256)) == 0
    assert signature(WeightSystem((1, 1, 1, 1), 2)) == 0
    with pytest.raises(WrongDimensionError):
        signature(WeightSystem((1, 1, 1), 3))


def test_signature_is_one_minus_betti_below_the_anticanonical_degree():
    # d < |w| kills the outer Hodge numbers, leaving tau = 1 - b2
    for ws, d in (
        ((9, 15, 17, 20), 60),
        ((11, 49, 69, 128), 256),
        ((13, 35, 81, 128), 256),
        ((1, 1, 1, 1), 2),
        ((2, 2, 1, 3), 5),
    ):
        w = WeightSystem(ws, d)
        assert d < w.total
        h = hodge_numbers(w)
        assert h[(0, 2)] == 0 and h[(2, 0)] == 0
        assert signature(w) == 1 - middle_betti_hodge(w)


def test_genus_of_the_branch_curves():
    assert genus_branch_curve(WeightSystem((9, 15, 17), 60)) == 0
    assert genus_branch_curve(WeightSystem((11, 49, 69), 256)) == 0
    assert genus_branch_curve(WeightSystem((13, 35, 81), 256)) == 0
    with pytest.raises(WrongDimensionError):
        genus_branch_curve(WeightSystem((9, 15, 17, 20), 60))


def test_genus_counts_monomials_below_the_partial_degrees():
    rng = random.Random(47)
    seen = 0
    while seen < 20:
        ws = tuple(rng.randint(1, 9) for _ in range(3))
        if math.gcd(*ws) != 1:
            continue
        degree = math.lcm(*ws) * 2
        if degree <= max(ws):
            continue
        w = WeightSystem(ws, degree)
        g = genus_branch_curve(w)
        assert g == count_monomials(ws, degree - sum(ws))
        seen += 1
