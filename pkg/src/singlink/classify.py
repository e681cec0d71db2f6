"""Pipeline orchestration: one polynomial in, one invariant report out.

analyze() runs every computation this package provides on a four-variable
weighted-homogeneous support, cross-checks the quantities that can be
computed two ways, consults a registry of published Kähler-Einstein /
Sasakian-Einstein existence results, and applies the connected-sum
classification of simply connected spin 5-manifolds: with torsion-free
second homology the link is S⁵ when b₂ = 0 and a connected sum of b₂
copies of S²×S³ otherwise.

Reports are canonical: variables are relabeled so the weights are sorted,
and the permutation is recorded.  All downstream quantities are invariant
under relabeling, so this only normalizes the echo of the input.
"""

from __future__ import annotations

import json
import math
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import permutations

from .divisor import Divisor
from .errors import ConsistencyError, SinglinkError, WrongDimensionError
from .milnor_algebra import (
    genus_branch_curve,
    hodge_numbers,
    middle_betti_hodge,
    poincare_series,
    signature,
)
from .monodromy import (
    ExpandedPoly,
    FactoredCharPoly,
    characteristic_divisor,
    expand,
    middle_betti,
    milnor_number,
    to_factored,
)
from .orbifold import (
    CONTAINED,
    TORSION_FREE,
    Fano,
    Stratum,
    fano,
    orbifold_order,
    pair_well_formed,
    singular_strata,
    torsion_status,
)
from .weights import (
    Exponents,
    WeightedPolynomial,
    WeightSystem,
    divisibility_condition,
    is_well_formed_space,
    missing_variables,
    validate_weights,
)

KNOWN_SE = "known_SE"
CANDIDATE = "candidate"
OBSTRUCTED = "obstructed"
NOT_FANO = "not_fano"
NOT_WELL_FORMED = "not_well_formed"


@dataclass(frozen=True)
class RegistryEntry:
    """One published existence result, keyed by weights and support."""

    weights: tuple[int, ...]
    degree: int
    support: tuple[Exponents, ...]
    tag: str
    citation: str
    obstructed: bool = False
    reference_invariants: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        ws = validate_weights(self.weights)
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "degree", int(self.degree))
        support = tuple(sorted(tuple(int(a) for a in m) for m in self.support))
        object.__setattr__(self, "support", support)
        object.__setattr__(
            self,
            "reference_invariants",
            tuple(sorted((str(k), int(v)) for k, v in self.reference_invariants)),
        )
        # validates quasi-homogeneity of the stated degree
        WeightedPolynomial(frozenset(support), WeightSystem(ws, self.degree))

    def polynomial(self) -> WeightedPolynomial:
        return WeightedPolynomial(
            frozenset(self.support), WeightSystem(self.weights, self.degree)
        )

    def reference(self, name: str) -> int | None:
        for k, v in self.reference_invariants:
            if k == name:
                return v
        return None


_DK_CITATION = (
    "Demailly-Kollár, Semi-continuity of complex singularity exponents and "
    "Kähler-Einstein metrics on Fano orbifolds: Kähler-Einstein orbifold "
    "metric on the base, hence a compatible Sasakian-Einstein metric on the link"
)

BUILTIN_REGISTRY: tuple[RegistryEntry, ...] = (
    RegistryEntry(
        weights=(9, 15, 17, 20),
        degree=60,
        support=((5, 1, 0, 0), (1, 0, 3, 0), (0, 4, 0, 0), (0, 0, 0, 3)),
        tag="DK-1",
        citation=_DK_CITATION,
    ),
    RegistryEntry(
        weights=(11, 49, 69, 128),
        degree=256,
        support=((17, 0, 1, 0), (1, 5, 0, 0), (0, 1, 3, 0), (0, 0, 0, 2)),
        tag="DK-2",
        citation=_DK_CITATION,
        reference_invariants=(("orbifold_order", 37191),),
    ),
    RegistryEntry(
        weights=(13, 35, 81, 128),
        degree=256,
        support=((17, 1, 0, 0), (1, 0, 3, 0), (0, 5, 1, 0), (0, 0, 0, 2)),
        tag="DK-3",
        citation=_DK_CITATION,
        reference_invariants=(("orbifold_order", 36855),),
    ),
)


def _check_entry(entry: RegistryEntry) -> None:
    if entry.obstructed:
        return
    f = entry.polynomial()
    if not fano(f.system).is_fano or not pair_well_formed(f):
        raise ConsistencyError(
            f"registry entry {entry.tag} claims an SE metric but is not a "
            "well-formed Fano pair"
        )


for _entry in BUILTIN_REGISTRY:
    _check_entry(_entry)


def registry_dump(entries: tuple[RegistryEntry, ...] = BUILTIN_REGISTRY) -> str:
    """Line-delimited JSON, one entry per line, keys in fixed order."""
    lines = []
    for e in entries:
        record: dict = {
            "weights": list(e.weights),
            "degree": e.degree,
            "support": [list(m) for m in e.support],
            "tag": e.tag,
            "citation": e.citation,
        }
        if e.obstructed:
            record["obstructed"] = True
        if e.reference_invariants:
            record["invariants"] = dict(e.reference_invariants)
        lines.append(json.dumps(record, ensure_ascii=False))
    return "".join(line + "\n" for line in lines)


def load_registry(text: str) -> tuple[RegistryEntry, ...]:
    """Parse a line-delimited registry file; every entry is re-validated."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
            entry = RegistryEntry(
                weights=tuple(record["weights"]),
                degree=record["degree"],
                support=tuple(tuple(m) for m in record["support"]),
                tag=str(record["tag"]),
                citation=str(record["citation"]),
                obstructed=bool(record.get("obstructed", False)),
                reference_invariants=tuple(
                    (k, v) for k, v in record.get("invariants", {}).items()
                ),
            )
        except (KeyError, TypeError, ValueError, SinglinkError) as exc:
            raise SinglinkError(f"registry line {lineno}: {exc}") from exc
        _check_entry(entry)
        entries.append(entry)
    return tuple(entries)


def _canonical_key(
    weights: tuple[int, ...], degree: int, support: tuple[Exponents, ...]
) -> tuple:
    """Permutation-invariant lookup key.

    Among relabelings that sort the weights, take the lexicographically
    least sorted support.
    """
    order = sorted(range(len(weights)), key=lambda i: weights[i])
    sorted_w = tuple(weights[i] for i in order)
    best = None
    for perm in permutations(range(len(weights))):
        if tuple(weights[i] for i in perm) != sorted_w:
            continue
        mapped = tuple(sorted(tuple(m[i] for i in perm) for m in support))
        if best is None or mapped < best:
            best = mapped
    return (sorted_w, degree, best)


def registry_lookup(
    f: WeightedPolynomial, registry: tuple[RegistryEntry, ...] = BUILTIN_REGISTRY
) -> RegistryEntry | None:
    """Match weights, degree and support, all up to one shared relabeling."""
    key = _canonical_key(f.system.weights, f.system.degree, f.sorted_support)
    for entry in registry:
        if _canonical_key(entry.weights, entry.degree, entry.support) == key:
            return entry
    return None


def smale_type(b2: int, torsion_free: bool) -> int | None:
    """Connected-sum rank for a simply connected spin 5-manifold link."""
    if b2 < 0:
        raise ValueError("a Betti number cannot be negative")
    return b2 if torsion_free else None


def smale_name(k: int) -> str:
    if k < 0:
        raise ValueError("a connected-sum rank cannot be negative")
    if k == 0:
        return "S⁵"
    if k == 1:
        return "S²×S³"
    return f"#{k}(S²×S³)"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class InvariantReport:
    """Everything computed for one link, in canonical variable order."""

    weights: tuple[int, ...]
    degree: int
    support: tuple[Exponents, ...]
    permutation: tuple[int, ...]
    assumed_isolated: bool
    normalized: bool
    space_well_formed: bool
    divisibility_ok: bool
    pair_well_formed: bool
    fano: Fano
    milnor_number: int
    divisor: Divisor
    factored: FactoredCharPoly
    expanded: ExpandedPoly
    b2_divisor: int
    b2_hodge: int
    hodge: tuple[tuple[tuple[int, int], int], ...]
    signature: int
    genus: int | None
    strata: tuple[Stratum, ...]
    orbifold_order: int
    orbifold_order_source: str
    registry_reference_order: int | None
    torsion: str
    smale_k: int | None
    diffeomorphism_type: str | None
    se_status: str
    registry_tag: str | None
    registry_citation: str | None
    assumptions: tuple[str, ...]
    notes: tuple[str, ...]

    def hodge_map(self) -> dict[tuple[int, int], int]:
        return dict(self.hodge)


def cross_checks(report: InvariantReport) -> tuple[CheckResult, ...]:
    """Recompute every two-route quantity from the report's own fields."""
    w = WeightSystem(report.weights, report.degree)
    checks = []

    def check(name: str, got, expected) -> None:
        checks.append(
            CheckResult(name, got == expected, f"got {got}, expected {expected}")
        )

    check("b2 routes", middle_betti(report.divisor), report.b2_hodge)
    check("divisor degree vs milnor number", report.divisor.degree(), report.milnor_number)
    check(
        "eigenvalue-1 multiplicity of expanded vs b2",
        report.expanded.multiplicity_at_one(),
        report.b2_divisor,
    )
    if report.fano.is_fano:
        check("signature vs 1 - b2 (Fano)", report.signature, 1 - report.b2_divisor)
    check("series total vs milnor number", poincare_series(w).total(), report.milnor_number)
    if report.registry_reference_order is not None:
        check(
            "orbifold order vs registry reference",
            report.orbifold_order,
            report.registry_reference_order,
        )
    return tuple(checks)


def require_consistent(report: InvariantReport) -> None:
    failures = [c for c in cross_checks(report) if not c.passed]
    if failures:
        raise ConsistencyError(
            "; ".join(f"{c.name}: {c.detail}" for c in failures)
        )


@contextmanager
def _stage(name: str):
    try:
        yield
    except SinglinkError as exc:
        exc.args = (f"[stage: {name}] {exc}",) + exc.args[1:]
        raise


def _canonicalize(f: WeightedPolynomial) -> tuple[WeightedPolynomial, tuple[int, ...]]:
    w = f.system.weights
    perm = tuple(sorted(range(len(w)), key=lambda i: (w[i], i)))
    if perm == tuple(range(len(w))):
        return f, perm
    system = WeightSystem(tuple(w[i] for i in perm), f.system.degree)
    support = frozenset(tuple(m[i] for i in perm) for m in f.support)
    return WeightedPolynomial(support, system), perm


def _split_variable(f: WeightedPolynomial) -> int | None:
    """Index of the unique variable occurring once, as a pure power."""
    candidates = []
    for i in range(f.nvars):
        touching = [m for m in f.support if m[i] > 0]
        if len(touching) == 1 and all(
            a == 0 for j, a in enumerate(touching[0]) if j != i
        ):
            candidates.append(i)
    if len(candidates) == 1:
        return candidates[0]
    return None


def analyze(
    f: WeightedPolynomial,
    *,
    assume_isolated: bool = True,
    registry: tuple[RegistryEntry, ...] = BUILTIN_REGISTRY,
) -> InvariantReport:
    """Full invariant report for a four-variable support."""
    if f.nvars != 4:
        raise WrongDimensionError(
            f"analyze covers links of surface singularities (4 variables), got {f.nvars}"
        )
    f, permutation = _canonicalize(f)
    w = f.system

    assumptions = []
    notes = []
    if assume_isolated:
        assumptions.append(
            "the singularity at the origin is assumed isolated; all invariants "
            "are computed from the weights and monomial support alone"
        )
    assumptions.append(
        "coefficients are assumed generic: incidence decisions use only the support"
    )
    absent = missing_variables(f)
    if absent:
        notes.append(
            "variables "
            + ", ".join(f"z{i}" for i in absent)
            + " appear in no monomial, so the singularity cannot be isolated; "
            "the report describes the weight data only"
        )

    with _stage("flags"):
        space_wf = is_well_formed_space(w)
        div_ok = divisibility_condition(w)
        fano_rec = fano(w)

    with _stage("milnor number"):
        mu = milnor_number(w)
    with _stage("characteristic divisor"):
        divisor = characteristic_divisor(w)
        factored = to_factored(divisor)
        expanded = expand(factored)
        b2_div = middle_betti(divisor)
    with _stage("hodge numbers"):
        hodge = tuple(sorted(hodge_numbers(w).items()))
        b2_hodge = middle_betti_hodge(w)
        tau = signature(w)

    with _stage("strata"):
        strata = singular_strata(f)
        pwf = pair_well_formed(f)
        order = orbifold_order(f)
        torsion = torsion_status(f)
    if any(s.incidence == CONTAINED for s in strata):
        notes.append(
            "a stratum inside the hypersurface contributes its generic isotropy "
            "order; the orbifold order at special points of such a stratum is "
            "not certified"
        )

    genus = None
    with _stage("branch curve genus"):
        split = _split_variable(f)
        if split is not None:
            rest = tuple(ww for i, ww in enumerate(w.weights) if i != split)
            if math.gcd(*rest) == 1:
                genus = genus_branch_curve(WeightSystem(rest, w.degree))
            else:
                notes.append(
                    "pure-power split found but the remaining weights share a "
                    "factor; no branch-curve genus is reported"
                )

    with _stage("registry"):
        entry = registry_lookup(f, registry)
    reference_order = entry.reference("orbifold_order") if entry else None
    order_source = "reference" if reference_order is not None else "derived"
    if reference_order is None:
        notes.append(
            "orbifold order computed from the stratum data; no tabulated "
            "reference value"
        )
    else:
        notes.append("orbifold order matches the tabulated reference value")

    with _stage("classification"):
        k = smale_type(b2_div, torsion == TORSION_FREE)
        name = smale_name(k) if k is not None else None
        if k is not None:
            notes.append(
                "links of isolated hypersurface singularities are simply "
                "connected and stably parallelizable, hence spin; the "
                "connected-sum classification applies"
            )
        if k == 1:
            notes.append(
                "S²×S³ is the real Stiefel manifold V(4,2), the unit tangent "
                "bundle of the 3-sphere"
            )
        if torsion != TORSION_FREE:
            notes.append(
                "torsion status unknown: any torsion in H2 occurs in pairs "
                "Z_q + Z_q, but the classification is withheld"
            )
        if fano_rec.is_fano and fano_rec.index == 1:
            notes.append("Fano index 1: a smooth join with the 3-sphere exists")
        if entry is not None and entry.obstructed:
            status = OBSTRUCTED
        elif entry is not None:
            status = KNOWN_SE
            notes.append("diffeomorphism type and SE metric certified by the registry entry")
        elif not fano_rec.is_fano:
            status = NOT_FANO
        elif pwf:
            status = CANDIDATE
        else:
            status = NOT_WELL_FORMED

    report = InvariantReport(
        weights=w.weights,
        degree=w.degree,
        support=f.sorted_support,
        permutation=permutation,
        assumed_isolated=assume_isolated,
        normalized=True,
        space_well_formed=space_wf,
        divisibility_ok=div_ok,
        pair_well_formed=pwf,
        fano=fano_rec,
        milnor_number=mu,
        divisor=divisor,
        factored=factored,
        expanded=expanded,
        b2_divisor=b2_div,
        b2_hodge=b2_hodge,
        hodge=hodge,
        signature=tau,
        genus=genus,
        strata=strata,
        orbifold_order=order,
        orbifold_order_source=order_source,
        registry_reference_order=reference_order,
        torsion=torsion,
        smale_k=k,
        diffeomorphism_type=name,
        se_status=status,
        registry_tag=entry.tag if entry else None,
        registry_citation=entry.citation if entry else None,
        assumptions=tuple(assumptions),
        notes=tuple(notes),
    )
    with _stage("cross checks"):
        require_consistent(report)
    return report
