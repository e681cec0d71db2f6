"""Weight systems and weighted-homogeneous polynomial supports.

A weight system assigns a positive integer weight w_i to each coordinate
z_i and fixes a degree d.  A polynomial f is quasi-homogeneous for the
system when every monomial z^a satisfies sum_i a_i*w_i = d, equivalently
f(l^w0 z0, ..., l^wn zn) = l^d f(z).  Weights are kept normalized,
gcd(w_0, ..., w_n) = 1; inputs violating this are rejected, never rescaled,
since rescaling changes the degree and would mask user errors.

Polynomials are carried as bare monomial supports (sets of exponent
vectors).  No invariant computed anywhere in this package depends on
coefficient values, only on the support, provided the coefficients are
generic; reports state that assumption explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DegenerateDegreeError,
    EmptySubsetError,
    LengthMismatchError,
    NonPositiveWeightError,
    NotNormalizedError,
    NotQuasiHomogeneousError,
)

Exponents = tuple[int, ...]


def validate_weights(weights: Iterable[int]) -> tuple[int, ...]:
    """Check positivity and normalization; return the weights as a tuple."""
    ws = tuple(int(w) for w in weights)
    if not ws:
        raise NonPositiveWeightError("empty weight sequence")
    for w in ws:
        if w < 1:
            raise NonPositiveWeightError(f"weight {w} is not positive")
    g = math.gcd(*ws)
    if g != 1:
        raise NotNormalizedError(g)
    return ws


@dataclass(frozen=True)
class WeightSystem:
    """Normalized positive weights together with a positive degree."""

    weights: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", validate_weights(self.weights))
        object.__setattr__(self, "degree", int(self.degree))
        if self.degree < 1:
            raise DegenerateDegreeError(f"degree {self.degree} is not positive")

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> int:
        """|w| = sum of the weights."""
        return sum(self.weights)


def weighted_degree(exponents: Sequence[int], w: WeightSystem | Sequence[int]) -> int:
    """Weighted degree sum a_i * w_i of an exponent vector."""
    ws = w.weights if isinstance(w, WeightSystem) else tuple(w)
    if len(exponents) != len(ws):
        raise LengthMismatchError(
            f"exponent vector has length {len(exponents)}, weights have length {len(ws)}"
        )
    return sum(a * wi for a, wi in zip(exponents, ws))


@dataclass(frozen=True)
class WeightedPolynomial:
    """A monomial support set that is quasi-homogeneous for its weight system.

    The support may be empty: restriction to a coordinate subspace uses the
    empty polynomial to encode f|_S = 0.
    """

    support: frozenset[Exponents]
    system: WeightSystem

    def __post_init__(self) -> None:
        support = frozenset(tuple(int(a) for a in m) for m in self.support)
        object.__setattr__(self, "support", support)
        degrees = set()
        for m in support:
            if len(m) != self.system.nvars:
                raise LengthMismatchError(
                    f"monomial {m} has {len(m)} exponents, expected {self.system.nvars}"
                )
            if any(a < 0 for a in m):
                raise ValueError(f"monomial {m} has a negative exponent")
            degrees.add(weighted_degree(m, self.system))
        if degrees and degrees != {self.system.degree}:
            raise NotQuasiHomogeneousError(degrees)

    @property
    def nvars(self) -> int:
        return self.system.nvars

    @property
    def sorted_support(self) -> tuple[Exponents, ...]:
        """Support in canonical (lexicographic) order."""
        return tuple(sorted(self.support))


def quasi_degree(monomials: Iterable[Sequence[int]], weights: Sequence[int]) -> WeightedPolynomial:
    """Build a WeightedPolynomial, inferring the degree from the monomials."""
    support = frozenset(tuple(int(a) for a in m) for m in monomials)
    if not support:
        raise EmptySubsetError("a polynomial needs at least one monomial")
    ws = validate_weights(weights)
    degrees = {weighted_degree(m, ws) for m in support}
    if len(degrees) != 1:
        raise NotQuasiHomogeneousError(degrees)
    system = WeightSystem(ws, degrees.pop())
    return WeightedPolynomial(support, system)


def is_well_formed_space(w: WeightSystem) -> bool:
    """True iff deleting any single weight leaves gcd 1."""
    ws = w.weights
    return all(
        math.gcd(*(ws[j] for j in range(len(ws)) if j != i)) == 1
        for i in range(len(ws))
    )


def divisibility_condition(w: WeightSystem) -> bool:
    """True iff the gcd of every delete-two weight subset divides the degree."""
    ws = w.weights
    if len(ws) < 3:
        return True
    for i, j in combinations(range(len(ws)), 2):
        rest = [ws[k] for k in range(len(ws)) if k not in (i, j)]
        if w.degree % math.gcd(*rest) != 0:
            return False
    return True


def restrict(f: WeightedPolynomial, subset: Iterable[int]) -> WeightedPolynomial:
    """Keep exactly the monomials supported inside the index subset."""
    s = set(subset)
    if not s:
        raise EmptySubsetError("restriction needs a nonempty index subset")
    if not s <= set(range(f.nvars)):
        raise ValueError(f"subset {sorted(s)} is not within 0..{f.nvars - 1}")
    kept = frozenset(
        m for m in f.support if all(a == 0 for i, a in enumerate(m) if i not in s)
    )
    return WeightedPolynomial(kept, f.system)


def count_monomials(weights: Sequence[int], k: int) -> int:
    """Number of exponent vectors of weighted degree exactly k.

    Exact integer dynamic programming, one weight at a time.
    """
    ws = [int(w) for w in weights]
    if any(w < 1 for w in ws):
        raise NonPositiveWeightError("weights must be positive")
    if k < 0:
        return 0
    table = [0] * (k + 1)
    table[0] = 1
    for w in ws:
        for degree in range(w, k + 1):
            table[degree] += table[degree - w]
    return table[k]


def missing_variables(f: WeightedPolynomial) -> tuple[int, ...]:
    """Indices of variables appearing in no monomial.

    A variable absent from every monomial makes an isolated singularity at
    the origin impossible; callers surface this as a necessary-condition
    check, not a proof of isolatedness.
    """
    return tuple(
        i for i in range(f.nvars) if all(m[i] == 0 for m in f.support)
    )
