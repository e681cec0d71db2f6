"""Graded dimensions of the Milnor algebra and what they buy downstream.

For a quasi-homogeneous isolated singularity the Milnor algebra (the
coordinate ring modulo the partials) is a graded complete intersection cut
out in degrees d - w_i, so its Poincare series is the closed product

    P(t) = prod_i (t^{d - w_i} - 1) / (t^{w_i} - 1)

a symmetric polynomial with top degree T = sum_i (d - 2 w_i) and P(1) equal
to the Milnor number.  Every consumer here is a coefficient lookup:
primitive Hodge numbers h^{i, n-i-1} at (i+1)d - |w|, the surface signature,
and the genus of the branch curve of a z3-power split.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ._intpoly import div_binomial, mul_binomial
from .errors import (
    ConsistencyError,
    DegenerateDegreeError,
    WrongDimensionError,
)
from .monodromy import _milnor_fraction
from .weights import WeightSystem, count_monomials


@dataclass(frozen=True)
class PoincareSeries:
    """Dense graded dimensions p_0 ... p_T, validated symmetric."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a Poincare series has at least the degree-0 entry")
        if any(c < 0 for c in coeffs):
            raise ValueError("graded dimensions cannot be negative")
        if coeffs != coeffs[::-1]:
            raise ValueError("graded dimensions are not symmetric about T/2")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def top(self) -> int:
        """Socle degree T."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k <= self.top:
            return self.coefficients[k]
        return 0

    def total(self) -> int:
        """P(1), the dimension of the whole algebra."""
        return sum(self.coefficients)


@lru_cache(maxsize=None)
def _series_coefficients(weights: tuple[int, ...], degree: int) -> tuple[int, ...]:
    coeffs = [1]
    for w in weights:
        coeffs = mul_binomial(coeffs, degree - w)
    for w in weights:
        coeffs = div_binomial(coeffs, w)
    return tuple(coeffs)


def poincare_series(w: WeightSystem) -> PoincareSeries:
    """Exact Poincare series of the Milnor algebra.

    Requires d > w_i for every i (each partial derivative nonconstant).
    May raise InexactDivision for degree data that is quasi-homogeneous on
    paper but belongs to no isolated singularity (the closed product is
    then not a polynomial).
    """
    if any(w.degree <= wi for wi in w.weights):
        raise DegenerateDegreeError(
            f"degree {w.degree} does not exceed every weight in {w.weights}"
        )
    series = PoincareSeries(_series_coefficients(w.weights, w.degree))
    if series.total() != _milnor_fraction(w):
        raise ConsistencyError(
            f"series total {series.total()} differs from the Milnor product"
        )
    return series


def graded_dim(w: WeightSystem, k: int) -> int:
    """dim of the Milnor algebra in weighted degree k; 0 outside [0, T]."""
    return poincare_series(w).coefficient(k)


def hodge_numbers(w: WeightSystem) -> dict[tuple[int, int], int]:
    """Primitive Hodge numbers of the middle fiber cohomology.

    h^{i, n-i-1} is the graded dimension at (i+1)d - |w|, for i = 0 .. n-1
    with n+1 = number of variables.
    """
    n = w.nvars - 1
    if n < 1:
        raise WrongDimensionError("at least two variables are required")
    return {
        (i, n - i - 1): graded_dim(w, (i + 1) * w.degree - w.total)
        for i in range(n)
    }


def middle_betti_hodge(w: WeightSystem) -> int:
    """Middle Betti number of the link as a sum of Hodge numbers."""
    return sum(hodge_numbers(w).values())


def signature(w: WeightSystem) -> int:
    """Signature of the Milnor fiber intersection form, surface case only.

    tau = 1 + 2 dim M_{d-|w|} - dim M_{2d-|w|} for four variables.
    """
    if w.nvars != 4:
        raise WrongDimensionError(
            f"signature needs exactly 4 variables, got {w.nvars}"
        )
    return 1 + 2 * graded_dim(w, w.degree - w.total) - graded_dim(
        w, 2 * w.degree - w.total
    )


def genus_branch_curve(w3: WeightSystem) -> int:
    """Genus of the curve a surface branches over in a z3-power split.

    g = dim M_{d - |w'|} for the three remaining weights w'.  Below the
    least partial degree the Jacobian ideal is empty, so the dimension must
    agree with the raw monomial count; that cross-check runs whenever it
    applies.
    """
    if w3.nvars != 3:
        raise WrongDimensionError(
            f"branch-curve genus needs exactly 3 weights, got {w3.nvars}"
        )
    k = w3.degree - w3.total
    g = graded_dim(w3, k)
    if k < min(w3.degree - wi for wi in w3.weights):
        raw = count_monomials(w3.weights, k)
        if g != raw:
            raise ConsistencyError(
                f"graded dimension {g} at degree {k} differs from the "
                f"monomial count {raw} below the least partial degree"
            )
    return g
