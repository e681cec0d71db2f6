"""Monodromy of the Milnor fibration from weight data alone.

For a quasi-homogeneous polynomial with an isolated singularity, both the
Milnor number and the characteristic polynomial of the monodromy depend
only on the rational ratios d/w_i.  Writing each ratio as u_i/v_i in lowest
terms,

    mu = prod_i (d/w_i - 1)
    div Delta(t) = prod_i (Lambda_{u_i} / v_i - 1)

with the product taken in the divisor ring.  The divisor's coefficients
must come out integral; the exponent of Lambda_j is then the exponent of
(t^j - 1) in a factored form of Delta, which expands to exact integer
coefficients.

bp_oracle is a deliberately independent second route for exponent sums
f = z_0^{a_0} + ... + z_n^{a_n}: it enumerates the monodromy eigenvalues as
exact rotation numbers and assembles the product of cyclotomic polynomials
with its own arithmetic helpers, sharing no failure mode with the divisor
pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from ._intpoly import div_binomial, mul_binomial
from .divisor import Divisor, lambda_of
from .errors import (
    BoundExceededError,
    ConsistencyError,
    DegenerateDegreeError,
    IntegralityViolationError,
    NonIntegralCoefficientError,
    NonIntegralMilnorNumberError,
)
from .weights import WeightSystem


def _milnor_fraction(w: WeightSystem) -> Fraction:
    if w.degree < max(w.weights):
        raise DegenerateDegreeError(
            f"degree {w.degree} is below the largest weight {max(w.weights)}"
        )
    return math.prod(
        (Fraction(w.degree, wi) - 1 for wi in w.weights), start=Fraction(1)
    )


def milnor_number(w: WeightSystem) -> int:
    """The exact product prod(d/w_i - 1), asserted a positive integer."""
    mu = _milnor_fraction(w)
    if mu.denominator != 1 or mu <= 0:
        raise NonIntegralMilnorNumberError(
            f"Milnor product {mu} is not a positive integer; "
            "the weight data is inconsistent with an isolated singularity link"
        )
    return int(mu)


def characteristic_divisor(w: WeightSystem) -> Divisor:
    """Divisor of the monodromy characteristic polynomial."""
    mu = _milnor_fraction(w)
    acc = lambda_of(1)
    for wi in w.weights:
        ratio = Fraction(w.degree, wi)
        acc = acc * (lambda_of(ratio.numerator) / ratio.denominator - 1)
    if not acc.is_integral():
        bad = {n: c for n, c in acc.terms.items() if c.denominator != 1}
        raise IntegralityViolationError(
            f"characteristic divisor has fractional coefficients {bad}; "
            "the weight data is inconsistent with an isolated singularity link"
        )
    if acc.degree() != mu:
        raise ConsistencyError(
            f"divisor degree {acc.degree()} differs from Milnor product {mu}"
        )
    return acc


@dataclass(frozen=True)
class FactoredCharPoly:
    """Delta(t) = prod (t^j - 1)^{e_j}, as a sorted (j, e_j) tuple."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted((int(j), int(e)) for j, e in self.factors if e))
        if any(j < 1 for j, _ in canon):
            raise ValueError("factor exponents t^j - 1 need j >= 1")
        if len({j for j, _ in canon}) != len(canon):
            raise ValueError("duplicate factor index")
        object.__setattr__(self, "factors", canon)
        if self.degree() < 0:
            raise ValueError("factored form has negative total degree")

    def degree(self) -> int:
        return sum(j * e for j, e in self.factors)

    def as_mapping(self) -> dict[int, int]:
        return dict(self.factors)

    def pretty(self) -> str:
        """Numerator over denominator, largest factor first."""

        def fmt(j: int, e: int) -> str:
            base = "(t-1)" if j == 1 else f"(t^{j}-1)"
            return base if e == 1 else f"{base}^{e}"

        num = [fmt(j, e) for j, e in sorted(self.factors, reverse=True) if e > 0]
        den = [fmt(j, -e) for j, e in sorted(self.factors, reverse=True) if e < 0]
        top = "".join(num) if num else "1"
        return f"{top} / {''.join(den)}" if den else top


@dataclass(frozen=True)
class ExpandedPoly:
    """Dense exact integer coefficients, constant term first."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs or coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def multiplicity_at_one(self) -> int:
        """Exponent of (t - 1), by repeated exact division."""
        coeffs = list(self.coefficients)
        count = 0
        while len(coeffs) > 1 and sum(coeffs) == 0:
            coeffs = div_binomial(coeffs, 1)
            count += 1
        return count


def to_factored(divisor: Divisor) -> FactoredCharPoly:
    """Reinterpret an integral divisor sum a_j Lambda_j as prod (t^j - 1)^{a_j}."""
    if not divisor.is_integral():
        bad = {n: c for n, c in divisor.terms.items() if c.denominator != 1}
        raise NonIntegralCoefficientError(f"divisor is not integral at {bad}")
    return FactoredCharPoly(tuple((n, int(c)) for n, c in divisor.terms.items()))


def expand(p: FactoredCharPoly) -> ExpandedPoly:
    """Multiply the numerator binomials, then divide the denominators exactly."""
    coeffs = [1]
    for j, e in p.factors:
        for _ in range(max(e, 0)):
            coeffs = mul_binomial(coeffs, j)
    for j, e in p.factors:
        for _ in range(max(-e, 0)):
            coeffs = div_binomial(coeffs, j)
    return ExpandedPoly(tuple(coeffs))


def middle_betti(divisor: Divisor) -> int:
    """Multiplicity of the eigenvalue 1: the divisor's coefficient sum."""
    if not divisor.is_integral():
        bad = {n: c for n, c in divisor.terms.items() if c.denominator != 1}
        raise NonIntegralCoefficientError(f"divisor is not integral at {bad}")
    b = divisor.unit_coefficient()
    if b < 0:
        raise IntegralityViolationError(f"root 1 has negative multiplicity {b}")
    return int(b)


# -- independent Brieskorn-Pham oracle -----------------------------------
#
# Everything below is used only to cross-check the divisor pipeline and is
# kept self-contained on purpose: its own cyclotomic table, its own exact
# division, its own multiplication.

def bp_oracle(a: Sequence[int], bound: int = 5000) -> ExpandedPoly:
    """Characteristic polynomial for f = sum z_i^{a_i}, by root enumeration.

    Each eigenvalue is a product of nontrivial a_i-th roots of unity,
    tracked as an exact rotation number k/L with L = lcm(a); grouping by
    exact order gives the multiset of cyclotomic factors.
    """
    exps = [int(x) for x in a]
    if not exps or any(x < 2 for x in exps):
        raise ValueError("all exponents must be >= 2")
    total = math.prod(x - 1 for x in exps)
    if total > bound:
        raise BoundExceededError(f"degree {total} exceeds the oracle bound {bound}")
    big_l = math.lcm(*exps)
    counts: dict[int, int] = {0: 1}
    for x in exps:
        step = big_l // x
        nxt: dict[int, int] = {}
        for r, c in counts.items():
            for k in range(1, x):
                key = (r + k * step) % big_l
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    by_order: dict[int, dict[int, int]] = {}
    for r, c in counts.items():
        g = math.gcd(r, big_l)
        order = big_l // g
        by_order.setdefault(order, {})[r // g if g else 0] = c
    factors: list[list[int]] = []
    for order, residues in sorted(by_order.items()):
        expected = (
            {0}
            if order == 1
            else {x for x in range(1, order) if math.gcd(x, order) == 1}
        )
        if set(residues) != expected or len(set(residues.values())) != 1:
            raise ConsistencyError(
                f"roots of order {order} do not fill Galois orbits evenly: {residues}"
            )
        factors.extend([_cyclotomic(order)] * next(iter(residues.values())))
    return ExpandedPoly(tuple(_product_tree(factors)))


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, constant first."""
    if n == 1:
        return [-1, 1]
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_div(poly, _cyclotomic(d))
    return poly


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    """Schoolbook exact division for the oracle's own use."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], den[-1])
        if r:
            raise ConsistencyError("cyclotomic division is not exact")
        out[k] = q
        for i, c in enumerate(den):
            num[k + i] -= q * c
    if any(num):
        raise ConsistencyError("cyclotomic division leaves a remainder")
    return out


def _product_tree(factors: list[list[int]]) -> list[int]:
    """Balanced product of many small integer polynomials."""
    if not factors:
        return [1]
    layer = list(factors)
    while len(layer) > 1:
        nxt = [
            _kronecker_mul(layer[i], layer[i + 1])
            for i in range(0, len(layer) - 1, 2)
        ]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def _kronecker_mul(p: list[int], q: list[int]) -> list[int]:
    """Exact polynomial product via one big-integer multiplication.

    Coefficients are packed in a base large enough that balanced digits
    recover the (possibly negative) convolution exactly.
    """
    limit = min(len(p), len(q)) * max(map(abs, p)) * max(map(abs, q))
    base = 1 << (2 * limit).bit_length()
    packed_p = 0
    for c in reversed(p):
        packed_p = packed_p * base + c
    packed_q = 0
    for c in reversed(q):
        packed_q = packed_q * base + c
    packed = packed_p * packed_q
    out = []
    for _ in range(len(p) + len(q) - 1):
        digit = packed % base
        if digit > base // 2:
            digit -= base
        out.append(digit)
        packed = (packed - digit) // base
    if packed:
        raise ConsistencyError("packed product decoding did not terminate")
    return out
