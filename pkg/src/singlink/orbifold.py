"""Singular strata of the ambient weighted projective space and the link.

A coordinate subset S with m_S = gcd(w_i : i in S) > 1 marks a singular
stratum of the weighted projective space.  What the quotient singularities
do to the hypersurface depends on whether the open stratum is disjoint
from it, meets it, or lies inside it; for vertices and coordinate edges
this is decided exactly from the monomial support:

  vertex {i}: the point lies on the hypersurface iff no monomial is a pure
    power of z_i;
  edge {i, j}: the restriction to the two variables either vanishes
    identically (contained), is a single monomial, never zero when both
    coordinates are (disjoint), or has two or more monomials and then has
    zeros in the two-torus for any nonzero coefficients (meets).  Factoring
    a shared monomial out of the restriction does not change its number of
    terms, so the two-term rule needs no preliminary stripping.

The orbifold order of the link is the lcm of m_S over strata the
hypersurface touches.  Higher-dimensional strata (subsets of three or more
variables, which only a non-well-formed ambient space produces, or five or
more variables total) would need torus point counts beyond these rules and
are refused.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import UnsupportedDimensionError, WrongDimensionError
from .weights import (
    WeightedPolynomial,
    WeightSystem,
    divisibility_condition,
    is_well_formed_space,
    restrict,
)

DISJOINT = "disjoint"
MEETS = "meets"
CONTAINED = "contained"

TORSION_FREE = "torsion_free"
TORSION_UNKNOWN = "unknown"


@dataclass(frozen=True)
class Fano:
    """Sign and value of |w| - d; positive means anticanonically positive."""

    is_fano: bool
    index: int


@dataclass(frozen=True)
class Stratum:
    indices: tuple[int, ...]
    isotropy_order: int
    incidence: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(sorted(int(i) for i in self.indices)))
        if self.isotropy_order < 2:
            raise ValueError("strata are listed only for isotropy order > 1")
        if self.incidence not in (DISJOINT, MEETS, CONTAINED):
            raise ValueError(f"unknown incidence {self.incidence!r}")


def fano(w: WeightSystem) -> Fano:
    index = w.total - w.degree
    return Fano(is_fano=index > 0, index=index)


def _vertex_incidence(f: WeightedPolynomial, i: int) -> str:
    return CONTAINED if not restrict(f, {i}).support else DISJOINT


def _edge_incidence(f: WeightedPolynomial, i: int, j: int) -> str:
    g = restrict(f, {i, j}).support
    if not g:
        return CONTAINED
    return DISJOINT if len(g) == 1 else MEETS


def singular_strata(f: WeightedPolynomial) -> tuple[Stratum, ...]:
    """All strata with isotropy order > 1, with exact incidence.

    Supports up to four variables; incidence rules exist for vertices and
    edges only, so a larger subset with nontrivial gcd (possible only when
    the ambient space is not well formed) is refused too.
    """
    if f.nvars > 4:
        raise UnsupportedDimensionError(
            f"incidence rules cover at most 4 variables, got {f.nvars}"
        )
    ws = f.system.weights
    out: list[Stratum] = []
    for size in range(1, f.nvars):
        for subset in combinations(range(f.nvars), size):
            m = math.gcd(*(ws[i] for i in subset))
            if m == 1:
                continue
            if size == 1:
                inc = _vertex_incidence(f, subset[0])
            elif size == 2:
                inc = _edge_incidence(f, *subset)
            else:
                raise UnsupportedDimensionError(
                    f"subset {subset} of {size} variables has gcd {m} > 1; "
                    "incidence rules cover vertices and edges only "
                    "(the ambient space is not well formed)"
                )
            out.append(Stratum(subset, m, inc))
    return tuple(out)


def orbifold_order(f: WeightedPolynomial) -> int:
    """lcm of isotropy orders over strata the hypersurface touches."""
    orders = [
        s.isotropy_order
        for s in singular_strata(f)
        if s.incidence in (MEETS, CONTAINED)
    ]
    return math.lcm(*orders) if orders else 1


def pair_well_formed(f: WeightedPolynomial) -> bool:
    """No singular stratum of complex codimension 2 lies inside the hypersurface.

    Codimension 2 in the ambient space means subsets of nvars - 2 indices
    (edges for four variables).
    """
    return not any(
        s.incidence == CONTAINED and len(s.indices) == f.nvars - 2
        for s in singular_strata(f)
    )


def torsion_status(f: WeightedPolynomial) -> str:
    """Randell's criterion: well-formedness forces torsion-free H2.

    Four-variable links only.  When the criterion's hypotheses fail the
    status is unknown, never a torsion claim.
    """
    if f.nvars != 4:
        raise WrongDimensionError(
            f"torsion status needs exactly 4 variables, got {f.nvars}"
        )
    w = f.system
    if is_well_formed_space(w) and divisibility_condition(w) and pair_well_formed(f):
        return TORSION_FREE
    return TORSION_UNKNOWN
