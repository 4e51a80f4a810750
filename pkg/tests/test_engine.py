import pytest

from cosmetic.engine import (
    EXCEPTIONAL_DISTANCE_BOUND,
    FILTER_ORDER,
    CandidateFamily,
    CrossCheckError,
    PairVerdict,
    classify_candidates,
    enumerate_pairs,
    replicate_theorem,
    run_classification,
    run_enumeration,
    surviving_families,
    verify_families,
    verify_pairs,
)
from cosmetic.obstructions import GeometryClass, ObstructionVerdict
from cosmetic.report import emit_report


def _keys(families):
    return [(f.p, f.q_residue, f.gap) for f in families]


def test_constants():
    assert EXCEPTIONAL_DISTANCE_BOUND == 8
    assert FILTER_ORDER == ("distance", "parity", "congruence", "dedekind")


def test_family_enumeration_order():
    families = classify_candidates(2)
    assert _keys(families) == [
        (2, 0, 1), (2, 1, 1), (2, 0, 2), (2, 1, 2),
        (2, 0, 3), (2, 1, 3), (2, 0, 4), (2, 1, 4),
    ]
    assert classify_candidates(9) == []
    assert classify_candidates(100) == []
    with pytest.raises(ValueError):
        classify_candidates(0)


def test_survivors_per_p():
    assert _keys(surviving_families(1)) == [(1, 0, g) for g in range(1, 9)]
    assert _keys(surviving_families(2)) == [(2, 1, 2), (2, 1, 4)]
    assert _keys(surviving_families(5)) == [(5, 2, 1)]
    for p in (3, 4, 6, 7, 8):
        assert surviving_families(p) == []


def test_family_descriptions():
    assert surviving_families(5)[0].describe() == "p = 5, q = 2 (mod 5), q' = q + 1"
    assert surviving_families(1)[0].describe() == "p = 1, any q, q' = q + 1"
    assert surviving_families(5)[0].delta == 5
    assert surviving_families(5)[0].representative() == 2
    assert surviving_families(1)[0].representative() == 1


def test_p2_survivors_have_zero_dedekind_sums():
    for family in surviving_families(2):
        verdicts = {v.filter_name: v for v in family.verdicts}
        assert verdicts["dedekind"].witness == {"s_q": "0/1", "s_q_prime": "0/1"}


def test_mod7_exclusion_shows_golden_values():
    families = {(f.q_residue, f.gap): f for f in classify_candidates(7)}
    trail = {v.filter_name: v for v in families[(5, 1)].verdicts}
    assert trail["parity"].passed
    assert trail["congruence"].passed
    assert not trail["dedekind"].passed
    assert trail["dedekind"].witness["s_q"] == "-1/14"
    assert trail["dedekind"].witness["s_q_prime"] == "-5/14"


def test_every_family_verdict_matches_oracles():
    families = []
    for p in range(1, 9):
        families.extend(classify_candidates(p))
    assert len(families) == 56
    assert verify_families(families) == 56


def test_verify_catches_forged_survival():
    family = surviving_families(5)[0]
    tampered = tuple(
        ObstructionVerdict("dedekind", False, {"reason": "forged"})
        if v.filter_name == "dedekind" else v
        for v in family.verdicts
    )
    bad = CandidateFamily(family.p, family.q_residue, family.gap, tampered, False)
    with pytest.raises(CrossCheckError):
        verify_families([bad])


def test_verify_checks_congruence_witness():
    pair = next(iter(enumerate_pairs([5], [2, 3])))
    assert pair.q == 2 and pair.q_prime == 3
    forged = tuple(
        ObstructionVerdict("congruence", True, {"unit": 4})
        if v.filter_name == "congruence" else v
        for v in pair.verdicts
    )
    bad = PairVerdict(pair.p, pair.q, pair.q_prime, forged, pair.surviving)
    with pytest.raises(CrossCheckError):
        verify_pairs([bad])


def test_theorem_table_sections():
    table = replicate_theorem()
    assert _keys(table.families_for(GeometryClass.REDUCIBLE)) == [(1, 0, 1)]
    assert _keys(table.families_for(GeometryClass.SEIFERT_TOROIDAL)) == [(1, 0, 1)]
    small = _keys(table.families_for(GeometryClass.SMALL_SEIFERT_INFINITE))
    assert small == [(1, 0, g) for g in range(1, 9)] + [(2, 1, 2), (2, 1, 4), (5, 2, 1)]
    toroidal = _keys(table.families_for(GeometryClass.TOROIDAL_IRREDUCIBLE_NON_SEIFERT))
    assert toroidal == [(1, 0, 1), (1, 0, 2), (1, 0, 3)]
    assert table.families_for(GeometryClass.FINITE_PI1) == ()
    assert table.note_for(GeometryClass.FINITE_PI1)
    assert len(table.evaluated) == 56


def test_theorem_table_deterministic():
    first = emit_report(replicate_theorem(), "json")
    second = emit_report(replicate_theorem(), "json")
    assert first.encode() == second.encode()


def test_enumerate_survivors_mod5():
    result = run_enumeration([5], range(1, 31))
    got = [(pv.q, pv.q_prime) for pv in result.surviving]
    assert got == [(2, 3), (7, 8), (12, 13), (17, 18), (22, 23), (27, 28)]
    for pv in result.surviving:
        assert pv.gap == 1 and pv.delta == 5


def test_enumerate_no_survivors_mod7():
    result = run_enumeration([7], range(1, 21))
    assert result.surviving == ()
    assert result.pairs


def test_enumerate_with_distance_only():
    result = run_enumeration([1], range(1, 4), filters=["distance"])
    assert [(pv.q, pv.q_prime) for pv in result.pairs] == [(1, 2), (1, 3), (2, 3)]
    assert all(pv.surviving for pv in result.pairs)
    names = {v.filter_name for pv in result.pairs for v in pv.verdicts}
    assert names == {"distance", "parity"}


def test_enumerate_takes_both_slopes_from_the_range():
    pairs = list(enumerate_pairs([3], [1, 2, 10], max_gap=8))
    assert [(pv.q, pv.q_prime) for pv in pairs] == [(1, 2), (2, 10)]


def test_serial_and_parallel_agree():
    serial = run_enumeration(range(1, 9), range(1, 121), jobs=1, verify=False)
    parallel = run_enumeration(range(1, 9), range(1, 121), jobs=3, verify=False)
    assert serial.pairs == parallel.pairs
    assert serial.filters == parallel.filters
    assert emit_report(serial, "csv").encode() == emit_report(parallel, "csv").encode()


def test_unknown_filter_rejected():
    with pytest.raises(ValueError):
        run_enumeration([1], [1, 2], filters=["casson"])


def test_warning_when_distance_filter_disabled():
    loose = run_enumeration([3], range(1, 10), filters=["congruence", "dedekind"],
                            verify=False)
    assert loose.warnings
    tight = run_enumeration([1], range(1, 10), filters=["congruence", "dedekind"],
                            verify=False)
    assert tight.warnings == ()


def test_run_classification_verifies_by_default():
    result = run_classification(6)
    assert result.p == 6
    assert result.surviving == ()
    assert len(result.families) == 6
