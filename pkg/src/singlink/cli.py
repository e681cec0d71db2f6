"""Command line interface and report rendering.

Subcommands:

  analyze   one polynomial, full report (text or JSON)
  batch     line-delimited JSON records in, one JSON report per line out
  scan      enumerate normalized well-formed Fano weight systems
  registry  print the active result registry as line-delimited JSON

Exit codes: 0 success, 1 invalid input, 2 consistency failure (two routes
to the same quantity disagreed), 3 I/O failure.

JSON reports keep a fixed key order so that loading and re-dumping an
emitted report is byte-identical.  Integers that can outgrow 53 bits
(the Milnor number, expanded characteristic-polynomial coefficients) are
always duplicated as decimal strings under a ``_str`` key; the plain
numeric key is present only while every value fits in 53 bits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .classify import (
    BUILTIN_REGISTRY,
    InvariantReport,
    RegistryEntry,
    analyze,
    load_registry,
    registry_dump,
)
from .divisor import Divisor
from .errors import (
    BoundExceededError,
    CancelledMonomialError,
    ConsistencyError,
    DuplicateMonomialWarning,
    PolynomialSyntaxError,
    SinglinkError,
)
from .monodromy import characteristic_divisor, middle_betti, milnor_number
from .weights import (
    Exponents,
    WeightedPolynomial,
    WeightSystem,
    divisibility_condition,
    is_well_formed_space,
    quasi_degree,
)

SCAN_MAX_WEIGHT_CEILING = 512

_JSON_SAFE = 1 << 53


# -- polynomial expressions ----------------------------------------------

def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch == "z":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolynomialSyntaxError("variable needs an index, like z0", i)
            tokens.append(("var", int(text[i + 1 : j]), i))
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    return tokens


def parse_polynomial(text: str, nvars: int | None = None) -> frozenset[Exponents]:
    """Parse a sum of monomials over variables z0..zN into a support set.

    Coefficients are accepted and only their signs and cancellations
    matter: duplicate monomials merge with a warning, and a monomial whose
    merged coefficient is zero is an error, since supports are assumed
    generic.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", 0)

    terms: list[tuple[dict[int, int], int, int]] = []
    pos = 0
    n = len(tokens)

    def peek() -> str | None:
        return tokens[pos][0] if pos < n else None

    while pos < n:
        sign = 1
        while peek() in ("+", "-"):
            if tokens[pos][0] == "-":
                sign = -sign
            pos += 1
        if pos >= n:
            raise PolynomialSyntaxError(
                "dangling sign at the end of the expression", tokens[-1][2]
            )
        exponents: dict[int, int] = {}
        coefficient = sign
        term_pos = tokens[pos][2]
        saw_atom = False
        while True:
            kind = peek()
            if kind == "*":
                pos += 1
                kind = peek()
                if kind not in ("int", "var"):
                    where = tokens[pos][2] if pos < n else len(tokens)
                    raise PolynomialSyntaxError("'*' needs a following factor", where)
            if kind == "int":
                coefficient *= int(tokens[pos][1])
                pos += 1
                saw_atom = True
            elif kind == "var":
                index = int(tokens[pos][1])
                pos += 1
                power = 1
                if peek() == "^":
                    pos += 1
                    if peek() != "int":
                        where = tokens[pos][2] if pos < n else tokens[-1][2]
                        raise PolynomialSyntaxError("'^' needs an integer exponent", where)
                    power = int(tokens[pos][1])
                    pos += 1
                exponents[index] = exponents.get(index, 0) + power
                saw_atom = True
            else:
                break
        if not saw_atom:
            raise PolynomialSyntaxError("expected a term", tokens[pos][2])
        terms.append((exponents, coefficient, term_pos))

    width = nvars
    if width is None:
        width = 1 + max((i for e, _, _ in terms for i in e), default=-1)
    merged: dict[Exponents, int] = {}
    duplicated = False
    for exponents, coefficient, term_pos in terms:
        for index in exponents:
            if index >= width:
                raise PolynomialSyntaxError(
                    f"variable z{index} is out of range for {width} variables", term_pos
                )
        vector = tuple(exponents.get(i, 0) for i in range(width))
        if vector in merged:
            duplicated = True
        merged[vector] = merged.get(vector, 0) + coefficient
    cancelled = sorted(v for v, c in merged.items() if c == 0)
    if cancelled:
        raise CancelledMonomialError(
            f"coefficients cancel the monomials {cancelled}; supports must be generic"
        )
    if duplicated:
        warnings.warn("duplicate monomials were merged", DuplicateMonomialWarning)
    return frozenset(merged)


def render_polynomial(support: Iterable[Sequence[int]]) -> str:
    """Canonical text form: monomials in descending lexicographic order."""
    vectors = sorted({tuple(int(a) for a in m) for m in support}, reverse=True)
    if not vectors:
        return "0"
    parts = []
    for m in vectors:
        factors = [
            f"z{i}^{a}" if a > 1 else f"z{i}" for i, a in enumerate(m) if a > 0
        ]
        parts.append("*".join(factors) if factors else "1")
    return " + ".join(parts)


# -- report rendering ------------------------------------------------------

def _big_int(out: dict, key: str, value: int) -> None:
    if abs(value) < _JSON_SAFE:
        out[key] = value
    out[key + "_str"] = str(value)


def _big_int_list(out: dict, key: str, values: Sequence[int]) -> None:
    if all(abs(v) < _JSON_SAFE for v in values):
        out[key] = list(values)
    out[key + "_str"] = [str(v) for v in values]


def _divisor_terms(divisor: Divisor) -> list[list[int]]:
    return [[n, int(divisor.coefficient(n))] for n in sorted(divisor.support, reverse=True)]


def report_to_json_dict(report: InvariantReport) -> dict:
    invariants: dict = {}
    _big_int(invariants, "milnor_number", report.milnor_number)
    invariants["characteristic_divisor"] = report.divisor.pretty()
    invariants["divisor_terms"] = _divisor_terms(report.divisor)
    invariants["factored"] = [list(fe) for fe in report.factored.factors]
    invariants["factored_pretty"] = report.factored.pretty()
    invariants["expanded_degree"] = report.expanded.degree
    _big_int_list(invariants, "expanded_coefficients", report.expanded.coefficients)
    invariants["b2_divisor"] = report.b2_divisor
    invariants["b2_hodge"] = report.b2_hodge
    invariants["hodge_numbers"] = {
        f"h^{{{i},{j}}}": value for (i, j), value in report.hodge
    }
    invariants["signature"] = report.signature
    invariants["genus"] = report.genus
    return {
        "input": {
            "weights": list(report.weights),
            "degree": report.degree,
            "polynomial": render_polynomial(report.support),
            "support": [list(m) for m in report.support],
            "permutation": list(report.permutation),
        },
        "flags": {
            "normalized": report.normalized,
            "assumed_isolated": report.assumed_isolated,
            "space_well_formed": report.space_well_formed,
            "divisibility_ok": report.divisibility_ok,
            "pair_well_formed": report.pair_well_formed,
            "fano": report.fano.is_fano,
            "fano_index": report.fano.index,
        },
        "invariants": invariants,
        "strata": [
            {
                "indices": list(s.indices),
                "isotropy_order": s.isotropy_order,
                "incidence": s.incidence,
            }
            for s in report.strata
        ],
        "classification": {
            "orbifold_order": report.orbifold_order,
            "torsion": report.torsion,
            "smale_k": report.smale_k,
            "diffeomorphism_type": report.diffeomorphism_type,
            "se_status": report.se_status,
            "registry_tag": report.registry_tag,
            "registry_citation": report.registry_citation,
        },
        "provenance": {
            "orbifold_order_source": report.orbifold_order_source,
            "assumptions": list(report.assumptions),
            "notes": list(report.notes),
        },
    }


def render_json(report: InvariantReport) -> str:
    return json.dumps(report_to_json_dict(report), indent=2, ensure_ascii=False) + "\n"


def render_json_line(report: InvariantReport) -> str:
    return json.dumps(report_to_json_dict(report), ensure_ascii=False)


def render_text(report: InvariantReport) -> str:
    flags = [
        name
        for name, value in (
            ("normalized", report.normalized),
            ("space well formed", report.space_well_formed),
            ("divisibility ok", report.divisibility_ok),
            ("pair well formed", report.pair_well_formed),
        )
        if value
    ]
    flags.append(
        f"fano (index {report.fano.index})" if report.fano.is_fano else "not fano"
    )
    lines = [
        f"weights: ({', '.join(str(w) for w in report.weights)})  degree: {report.degree}",
        f"polynomial: {render_polynomial(report.support)}",
        f"flags: {', '.join(flags)}",
        f"Milnor number: {report.milnor_number}",
        f"characteristic divisor: {report.divisor.pretty()}",
        f"factored: {report.factored.pretty()}",
        f"b2: {report.b2_divisor} (divisor route), {report.b2_hodge} (Hodge route)",
        "hodge numbers: "
        + "  ".join(f"h^{{{i},{j}}} = {value}" for (i, j), value in report.hodge),
        f"signature: {report.signature}",
    ]
    if report.genus is not None:
        lines.append(f"branch curve genus: {report.genus}")
    if report.strata:
        lines.append("strata:")
        for s in report.strata:
            inside = ", ".join(f"z{i}" for i in s.indices)
            lines.append(
                f"  {{{inside}}}  order {s.isotropy_order}  {s.incidence}"
            )
    else:
        lines.append("strata: none")
    lines.append(
        f"orbifold order: {report.orbifold_order} ({report.orbifold_order_source})"
    )
    lines.append(f"torsion in H2: {report.torsion}")
    status = report.se_status
    if report.registry_tag:
        status += f" ({report.registry_tag})"
    lines.append(f"SE status: {status}")
    for note in report.assumptions + report.notes:
        lines.append(f"note: {note}")
    if report.diffeomorphism_type is not None:
        lines.append(f"diffeomorphism type: {report.diffeomorphism_type}")
    else:
        lines.append("diffeomorphism type: undetermined (torsion status unknown)")
    return "\n".join(lines) + "\n"


# -- subcommands -----------------------------------------------------------

def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weights must be comma-separated integers, got {text!r}"
        ) from None


def _load_registry_arg(path: str | None) -> tuple[RegistryEntry, ...]:
    if path is None:
        return BUILTIN_REGISTRY
    with open(path, "r", encoding="utf-8") as handle:
        return load_registry(handle.read())


def _build_polynomial(
    weights: tuple[int, ...], poly: str, degree: int | None
) -> WeightedPolynomial:
    support = parse_polynomial(poly, nvars=len(weights))
    if degree is None:
        return quasi_degree(support, weights)
    return WeightedPolynomial(support, WeightSystem(weights, degree))


def run_analyze(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    f = _build_polynomial(args.weights, args.poly, args.degree)
    report = analyze(f, assume_isolated=args.assume_isolated, registry=registry)
    if args.format == "json":
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(render_text(report))
    return 0


def run_batch(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    with open(args.path, "r", encoding="utf-8") as handle:
        lines = handle.readlines()
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    ok = skipped = failed = 0
    try:
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                weights = tuple(int(w) for w in record["weights"])
                degree = int(record["degree"])
                poly = str(record["poly"])
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                skipped += 1
                print(f"line {lineno}: skipped ({exc})", file=sys.stderr)
                continue
            try:
                f = _build_polynomial(weights, poly, degree)
                report = analyze(
                    f, assume_isolated=args.assume_isolated, registry=registry
                )
            except SinglinkError as exc:
                failed += 1
                print(f"line {lineno}: failed ({exc})", file=sys.stderr)
                continue
            out.write(render_json_line(report) + "\n")
            ok += 1
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"ok={ok} skipped={skipped} failed={failed}", file=sys.stderr)
    return 0


def _row_mu_b2(ws: tuple[int, ...], degree: int) -> tuple[int | None, int | None]:
    """Milnor number and divisor-route b2, null when not integral.

    Integer-only fast path of the main pipeline: the Milnor product is
    tested by divisibility, and the divisor product runs with coefficients
    scaled by prod(v_i) so everything stays in int.  Equality with
    milnor_number/characteristic_divisor is covered by tests.
    """
    if degree <= max(ws):
        return None, None
    numerator = math.prod(degree - w for w in ws)
    denominator = math.prod(ws)
    if numerator % denominator:
        return None, None
    mu = numerator // denominator
    terms = {1: 1}
    scale = 1
    for w in ws:
        g = math.gcd(degree, w)
        u, v = degree // g, w // g
        scale *= v
        nxt: dict[int, int] = {}
        for n, c in terms.items():
            m = n * u // math.gcd(n, u)
            nxt[m] = nxt.get(m, 0) + c * math.gcd(n, u)
            nxt[n] = nxt.get(n, 0) - c * v
        terms = {n: c for n, c in nxt.items() if c}
    if any(c % scale for c in terms.values()):
        return mu, None
    return mu, sum(c // scale for c in terms.values())


def _scan_rows_4(max_weight: int, index: int) -> Iterator[dict]:
    """Nested-loop enumeration with gcd pruning, 4 variables only.

    A triple whose gcd exceeds 1 can never extend to a space-well-formed
    quadruple, so whole branches are skipped; the remaining well-formedness
    and divisibility checks reduce to pair gcds.
    """
    gcd = math.gcd
    for w0 in range(1, max_weight + 1):
        for w1 in range(w0, max_weight + 1):
            g01 = gcd(w0, w1)
            for w2 in range(w1, max_weight + 1):
                if gcd(g01, w2) > 1:
                    continue
                g02, g12 = gcd(w0, w2), gcd(w1, w2)
                base = w0 + w1 + w2 - index
                for w3 in range(w2, max_weight + 1):
                    degree = base + w3
                    if degree < 1:
                        continue
                    if g01 > 1 and (gcd(g01, w3) > 1 or degree % g01):
                        continue
                    if g02 > 1 and (gcd(g02, w3) > 1 or degree % g02):
                        continue
                    if g12 > 1 and (gcd(g12, w3) > 1 or degree % g12):
                        continue
                    g03, g13, g23 = gcd(w0, w3), gcd(w1, w3), gcd(w2, w3)
                    if degree % g03 or degree % g13 or degree % g23:
                        continue
                    ws = (w0, w1, w2, w3)
                    mu, b2 = _row_mu_b2(ws, degree)
                    yield {
                        "weights": list(ws),
                        "degree": degree,
                        "milnor_number": mu,
                        "b2_divisor": b2,
                    }


def _scan_rows_generic(max_weight: int, index: int, nvars: int) -> Iterator[dict]:
    for ws in combinations_with_replacement(range(1, max_weight + 1), nvars):
        if math.gcd(*ws) != 1:
            continue
        degree = sum(ws) - index
        if degree < 1:
            continue
        system = WeightSystem(ws, degree)
        if not is_well_formed_space(system):
            continue
        if not divisibility_condition(system):
            continue
        try:
            mu = milnor_number(system)
        except SinglinkError:
            mu = None
        b2 = None
        if mu is not None:
            try:
                b2 = middle_betti(characteristic_divisor(system))
            except SinglinkError:
                b2 = None
        yield {
            "weights": list(ws),
            "degree": degree,
            "milnor_number": mu,
            "b2_divisor": b2,
        }


def scan_rows(
    max_weight: int, index: int = 1, nvars: int = 4
) -> Iterator[dict]:
    """Normalized, space-well-formed weight systems with d = |w| - index.

    Weights are enumerated in nondecreasing order (one representative per
    relabeling class), rows sorted lexicographically.  Rows whose Milnor
    product is not a positive integer, or whose divisor is not integral,
    carry null in those fields.
    """
    if max_weight > SCAN_MAX_WEIGHT_CEILING:
        raise BoundExceededError(
            f"max weight {max_weight} exceeds the scan ceiling {SCAN_MAX_WEIGHT_CEILING}"
        )
    if max_weight < 1:
        raise BoundExceededError("max weight must be at least 1")
    if nvars < 2:
        raise BoundExceededError("scan needs at least 2 variables")
    if nvars == 4:
        return _scan_rows_4(max_weight, index)
    return _scan_rows_generic(max_weight, index, nvars)


def run_scan(args: argparse.Namespace) -> int:
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for row in scan_rows(args.max_weight, index=args.index, nvars=args.vars):
            if args.format == "text":
                mu = "-" if row["milnor_number"] is None else row["milnor_number"]
                b2 = "-" if row["b2_divisor"] is None else row["b2_divisor"]
                weights = ",".join(str(w) for w in row["weights"])
                out.write(f"w=({weights}) d={row['degree']} mu={mu} b2={b2}\n")
            else:
                out.write(json.dumps(row, ensure_ascii=False) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def run_registry(args: argparse.Namespace) -> int:
    registry = _load_registry_arg(args.registry)
    text = registry_dump(registry)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


# -- entry point -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the validation exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="singlink",
        description=(
            "Exact invariants of links of isolated weighted-homogeneous "
            "hypersurface singularities"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for one polynomial")
    p.add_argument("--weights", type=_parse_weights, required=True,
                   help="comma-separated positive integers, e.g. 9,15,17,20")
    p.add_argument("--poly", required=True,
                   help="polynomial over z0..zN, e.g. 'z0^5*z1 + z0*z2^3 + z1^4 + z3^3'")
    p.add_argument("--degree", type=int, default=None,
                   help="weighted degree; inferred from the monomials when omitted")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--assume-isolated", action=argparse.BooleanOptionalAction,
                   default=True, help="record the isolated-singularity assumption")
    p.add_argument("--registry", default=None, metavar="PATH",
                   help="line-delimited JSON registry replacing the built-in one")
    p.set_defaults(func=run_analyze)

    p = sub.add_parser("batch", help="analyze line-delimited JSON records")
    p.add_argument("path", help="input file, one {weights, degree, poly} record per line")
    p.add_argument("--out", default=None, metavar="FILE",
                   help="write reports here instead of stdout")
    p.add_argument("--assume-isolated", action=argparse.BooleanOptionalAction,
                   default=True)
    p.add_argument("--registry", default=None, metavar="PATH")
    p.set_defaults(func=run_batch)

    p = sub.add_parser("scan", help="enumerate candidate Fano weight systems")
    p.add_argument("--max-weight", type=int, required=True,
                   help=f"largest weight to try (ceiling {SCAN_MAX_WEIGHT_CEILING})")
    p.add_argument("--index", type=int, default=1, help="Fano index |w| - d")
    p.add_argument("--vars", type=int, default=4, help="number of variables")
    p.add_argument("--format", choices=("jsonl", "text"), default="jsonl")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=run_scan)

    p = sub.add_parser("registry", help="print the active result registry")
    p.add_argument("--registry", default=None, metavar="PATH")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=run_registry)

    return parser


def entry(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2
    except SinglinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(entry())
