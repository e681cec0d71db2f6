import dataclasses
import json

import pytest

from singlink import (
    BUILTIN_REGISTRY,
    CANDIDATE,
    CONTAINED,
    KNOWN_SE,
    MEETS,
    NOT_FANO,
    NOT_WELL_FORMED,
    OBSTRUCTED,
    ConsistencyError,
    DISJOINT,
    NonIntegralMilnorNumberError,
    RegistryEntry,
    SinglinkError,
    TORSION_FREE,
    TORSION_UNKNOWN,
    WrongDimensionError,
    analyze,
    cross_checks,
    lambda_of,
    load_registry,
    quasi_degree,
    registry_dump,
    registry_lookup,
    require_consistent,
    smale_name,
    smale_type,
)
from conftest import F60_SUPPORT, F60_WEIGHTS


def test_builtin_registry_round_trips_through_jsonl():
    text = registry_dump()
    assert load_registry(text) == BUILTIN_REGISTRY
    assert len(text.splitlines()) == 3
    for line in text.splitlines():
        record = json.loads(line)
        assert list(record)[:5] == ["weights", "degree", "support", "tag", "citation"]


def test_registry_rejects_unobstructed_non_fano_claims():
    entry = {
        "weights": [1, 1, 1, 1],
        "degree": 5,
        "support": [[5, 0, 0, 0], [0, 5, 0, 0], [0, 0, 5, 0], [0, 0, 0, 5]],
        "tag": "bad",
        "citation": "none",
    }
    with pytest.raises(ConsistencyError):
        load_registry(json.dumps(entry) + "\n")
    entry["obstructed"] = True
    loaded = load_registry(json.dumps(entry) + "\n")
    assert len(loaded) == 1 and loaded[0].obstructed


def test_registry_reports_the_failing_line():
    good = registry_dump().splitlines()[0]
    with pytest.raises(SinglinkError) as err:
        load_registry(good + "\n" + '{"weights": [1, 2]}' + "\n")
    assert "registry line 2" in str(err.value)
    with pytest.raises(SinglinkError):
        load_registry('{"weights": [2, 4], "degree": 4, "support": [], "tag": "x", "citation": "y"}')


def test_registry_lookup_is_permutation_invariant(f60):
    permuted = quasi_degree(
        [
            (0, 1, 0, 5),
            (3, 0, 0, 1),
            (0, 4, 0, 0),
            (0, 0, 3, 0),
        ],
        (17, 15, 20, 9),
    )
    entry = registry_lookup(permuted)
    assert entry is not None and entry.tag == "DK-1"
    assert registry_lookup(f60).tag == "DK-1"


def test_registry_lookup_misses_on_different_support(f60):
    # same weights and degree, smaller support
    g = quasi_degree([(5, 1, 0, 0), (1, 0, 3, 0), (0, 4, 0, 0)], (9, 15, 17, 20))
    assert registry_lookup(f60) is not None
    assert registry_lookup(g) is None


def test_registry_entry_normalizes_and_validates():
    e = RegistryEntry(
        weights=(9, 15, 17, 20),
        degree=60,
        support=((0, 0, 0, 3), (5, 1, 0, 0), (0, 4, 0, 0), (1, 0, 3, 0)),
        tag="t",
        citation="c",
        reference_invariants=(("orbifold_order", 765),),
    )
    assert e.support[0] == (0, 0, 0, 3)
    assert e.reference("orbifold_order") == 765
    assert e.reference("missing") is None
    with pytest.raises(SinglinkError):
        RegistryEntry((9, 15, 17, 20), 61, ((5, 1, 0, 0),), "t", "c")


def test_smale_type_and_name():
    assert smale_type(0, True) == 0
    assert smale_type(7, True) == 7
    assert smale_type(7, False) is None
    assert smale_name(0) == "S⁵"
    assert smale_name(1) == "S²×S³"
    assert smale_name(9) == "#9(S²×S³)"
    with pytest.raises(ValueError):
        smale_type(-1, True)
    with pytest.raises(ValueError):
        smale_name(-2)


def test_report_for_the_degree_60_link(report60):
    r = report60
    assert r.weights == (9, 15, 17, 20)
    assert r.degree == 60
    assert r.support == ((0, 0, 0, 3), (0, 4, 0, 0), (1, 0, 3, 0), (5, 1, 0, 0))
    assert r.permutation == (0, 1, 2, 3)
    assert r.assumed_isolated and r.normalized
    assert r.space_well_formed and r.divisibility_ok and r.pair_well_formed
    assert r.fano.is_fano and r.fano.index == 1
    assert r.milnor_number == 86
    assert r.divisor == (
        lambda_of(60) + lambda_of(20) + lambda_of(12)
        - lambda_of(4) - lambda_of(3) + 1
    )
    assert r.factored.as_mapping() == {60: 1, 20: 1, 12: 1, 4: -1, 3: -1, 1: 1}
    assert r.expanded.degree == 86
    assert r.b2_divisor == 2 and r.b2_hodge == 2
    assert r.hodge_map() == {(0, 2): 0, (1, 1): 2, (2, 0): 0}
    assert r.signature == -1
    assert r.genus == 0
    assert {s.indices: (s.isotropy_order, s.incidence) for s in r.strata} == {
        (0,): (9, CONTAINED),
        (1,): (15, DISJOINT),
        (2,): (17, CONTAINED),
        (3,): (20, DISJOINT),
        (0, 1): (3, MEETS),
        (1, 3): (5, MEETS),
    }
    assert r.orbifold_order == 765
    assert r.orbifold_order_source == "derived"
    assert r.registry_reference_order is None
    assert r.torsion == TORSION_FREE
    assert r.smale_k == 2
    assert r.diffeomorphism_type == "#2(S²×S³)"
    assert r.se_status == KNOWN_SE
    assert r.registry_tag == "DK-1"
    assert "Demailly" in r.registry_citation
    assert any("assumed isolated" in a for a in r.assumptions)
    assert any("generic" in a for a in r.assumptions)
    assert any("Fano index 1" in n for n in r.notes)
    assert any("certified by the registry entry" in n for n in r.notes)


def test_reports_for_the_degree_256_links(report256_1, report256_2):
    for r, tag, order in ((report256_1, "DK-2", 37191), (report256_2, "DK-3", 36855)):
        assert r.milnor_number == 255
        assert r.b2_divisor == 1 and r.b2_hodge == 1
        assert r.signature == 0
        assert r.genus == 0
        assert r.orbifold_order == order
        assert r.orbifold_order_source == "reference"
        assert r.registry_reference_order == order
        assert r.torsion == TORSION_FREE
        assert r.smale_k == 1
        assert r.diffeomorphism_type == "S²×S³"
        assert r.se_status == KNOWN_SE
        assert r.registry_tag == tag
        assert any("Stiefel" in n for n in r.notes)
        assert any("tabulated reference" in n for n in r.notes)


def test_report_for_the_quadric_link():
    f = quasi_degree(
        [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)], (1, 1, 1, 1)
    )
    r = analyze(f)
    assert r.milnor_number == 1
    assert r.divisor == 1
    assert r.b2_divisor == 1 and r.b2_hodge == 1
    assert r.signature == 0
    assert r.genus is None  # four pure powers, no unique split variable
    assert r.strata == ()
    assert r.orbifold_order == 1
    assert r.torsion == TORSION_FREE
    assert r.smale_k == 1
    assert r.diffeomorphism_type == "S²×S³"
    assert r.se_status == CANDIDATE
    assert r.registry_tag is None and r.registry_citation is None
    assert any("Stiefel" in n for n in r.notes)


def test_report_for_the_quintic_link():
    f = quasi_degree(
        [(5, 0, 0, 0), (0, 5, 0, 0), (0, 0, 5, 0), (0, 0, 0, 5)], (1, 1, 1, 1)
    )
    r = analyze(f)
    assert r.milnor_number == 256
    assert not r.fano.is_fano and r.fano.index == -1
    assert r.b2_divisor == 52 and r.b2_hodge == 52
    assert r.signature == -35
    assert r.torsion == TORSION_FREE
    assert r.smale_k == 52
    assert r.diffeomorphism_type == "#52(S²×S³)"
    assert r.se_status == NOT_FANO
    assert not any("Fano index 1" in n for n in r.notes)


def test_report_for_a_pair_ill_formed_link():
    f = quasi_degree([(1, 0, 0, 1), (0, 1, 0, 1)], (2, 2, 1, 3))
    r = analyze(f)
    # the weight-1 variable sorts to the front; notes use canonical labels
    assert r.weights == (1, 2, 2, 3)
    assert r.permutation == (2, 0, 1, 3)
    assert r.milnor_number == 6
    assert r.divisor == lambda_of(5) + 1
    assert r.b2_divisor == 2 and r.b2_hodge == 2
    assert r.signature == -1
    assert not r.pair_well_formed
    assert r.torsion == TORSION_UNKNOWN
    assert r.smale_k is None
    assert r.diffeomorphism_type is None
    assert r.se_status == NOT_WELL_FORMED
    assert r.genus is None
    assert any("z0 appear in no monomial" in n for n in r.notes)
    assert any("Z_q + Z_q" in n for n in r.notes)
    assert any("not certified" in n for n in r.notes)


def test_analyze_is_equivariant_under_relabeling(report60):
    permuted = quasi_degree(
        [
            (0, 1, 0, 5),
            (3, 0, 0, 1),
            (0, 4, 0, 0),
            (0, 0, 3, 0),
        ],
        (17, 15, 20, 9),
    )
    r = analyze(permuted)
    assert r.permutation == (3, 1, 0, 2)
    assert r.weights == report60.weights
    assert r.support == report60.support
    assert r.milnor_number == report60.milnor_number
    assert r.divisor == report60.divisor
    assert r.strata == report60.strata
    assert r.orbifold_order == report60.orbifold_order
    assert r.se_status == report60.se_status
    assert r.registry_tag == report60.registry_tag
    assert r.smale_k == report60.smale_k


def test_analyze_without_isolation_assumption(f60):
    r = analyze(f60, assume_isolated=False)
    assert not r.assumed_isolated
    assert not any("assumed isolated" in a for a in r.assumptions)
    assert any("generic" in a for a in r.assumptions)


def test_analyze_with_an_empty_registry(f60):
    r = analyze(f60, registry=())
    assert r.se_status == CANDIDATE
    assert r.registry_tag is None
    assert r.orbifold_order == 765
    assert r.orbifold_order_source == "derived"


def test_analyze_with_an_obstructed_registry(f60):
    entry = dataclasses.replace(BUILTIN_REGISTRY[0], obstructed=True)
    r = analyze(f60, registry=(entry,))
    assert r.se_status == OBSTRUCTED
    assert r.registry_tag == "DK-1"


def test_analyze_requires_four_variables():
    f = quasi_degree([(2, 0, 0), (0, 2, 0), (0, 0, 2)], (1, 1, 1))
    with pytest.raises(WrongDimensionError):
        analyze(f)


def test_errors_carry_the_pipeline_stage():
    f = quasi_degree(
        [(8, 0, 0, 0), (1, 0, 0, 2), (0, 3, 0, 1), (3, 0, 2, 0)], (2, 3, 5, 7)
    )
    with pytest.raises(NonIntegralMilnorNumberError) as err:
        analyze(f)
    assert "[stage: milnor number]" in str(err.value)


def test_cross_checks_catch_corrupted_reports(report60):
    assert all(c.passed for c in cross_checks(report60))
    require_consistent(report60)
    bad = dataclasses.replace(report60, b2_hodge=99)
    failed = [c for c in cross_checks(bad) if not c.passed]
    assert [c.name for c in failed] == ["b2 routes"]
    with pytest.raises(ConsistencyError) as err:
        require_consistent(bad)
    assert "b2 routes" in str(err.value)


def test_cross_checks_validate_registry_reference(report256_1):
    bad = dataclasses.replace(report256_1, orbifold_order=1)
    names = [c.name for c in cross_checks(bad) if not c.passed]
    assert "orbifold order vs registry reference" in names


def test_reference_fixture_matches_the_registry(f60):
    entry = BUILTIN_REGISTRY[0]
    assert entry.weights == F60_WEIGHTS
    assert frozenset(entry.support) == frozenset(F60_SUPPORT)
    assert entry.polynomial() == f60
