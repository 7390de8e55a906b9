from __future__ import annotations

import jsonschema
import pytest

from tricensus import k4, stacked
from tricensus.errors import UnknownPredicateField
from tricensus.generate import catalog_codes
from tricensus.io import report_schema
from tricensus.verify import (
    Catalog,
    delete_degree3,
    filter_triangulations,
    lemma3_holds,
    min_c4,
    verify_bounds,
    verify_degree_identities,
    verify_generator_oracle,
    verify_lemma,
    verify_recursion,
    verify_structural_claims,
    verify_theorem1,
)


def test_min_c4_small():
    assert min_c4(6).g_value == 15
    assert min_c4(6).minimizer_count == 1
    assert min_c4(9).g_value == 24
    assert min_c4(12).g_value == 30


def test_theorem1_to_7():
    r = verify_theorem1(7)
    assert r.passed
    assert [r.statistics[n]["g"] for n in range(4, 8)] == [3, 9, 15, 20]


def test_tampered_catalog_fails(octahedron):
    codes = {n: catalog_codes(n) for n in range(4, 8)}
    codes[6] = tuple(c for c in codes[6] if c != octahedron.code)
    bad = Catalog(codes)
    r = verify_theorem1(7, bad)
    assert r.status == "fail"
    assert r.statistics[6]["g"] == 16
    assert not verify_generator_oracle(7, bad).passed
    assert verify_generator_oracle(7).passed


def test_lemma3_boundary(octahedron):
    # antipodal vertices of the octahedron share their neighbourhood cycle
    assert lemma3_holds(octahedron) is False
    r = verify_lemma(3, 9)
    assert r.passed and r.n_range == (7, 9)


@pytest.mark.parametrize("which", [1, 2, 3])
def test_lemmas_to_10(which):
    assert verify_lemma(which, 10).passed


@pytest.mark.parametrize("n", [9, 10, 11])
def test_identities(n):
    r = verify_degree_identities(n)
    assert r.passed
    assert r.statistics[n]["hypothesis_holds"] > 0


def test_identities_only_for_9_to_11():
    with pytest.raises(ValueError):
        verify_degree_identities(8)


def test_structural_claims_to_11():
    reps = {r.claim_id: r for r in verify_structural_claims(11)}
    assert set(reps) == {"claims.a", "claims.b", "claims.c", "claims.d", "claims.e", "claims.g"}
    assert all(r.passed for r in reps.values())
    assert reps["claims.a"].statistics[7]["min_degree_4_classes"] == 1
    assert reps["claims.b"].statistics[8] == {"matching_classes": 1, "c4": [23]}
    assert reps["claims.b"].notes


def test_bounds_and_recursion_to_10():
    assert verify_bounds(10).passed
    assert verify_recursion(10).passed


def test_delete_degree3():
    T = stacked(7)
    v = T.degrees.index(3)
    S = delete_degree3(T, v)
    assert S.n == 6
    with pytest.raises(ValueError):
        delete_degree3(T, T.degrees.index(max(T.degrees)))


def test_filter():
    assert len(filter_triangulations(7, min_degree=4)) == 1
    icosa = filter_triangulations(12, connectivity=5)
    assert len(icosa) >= 1
    assert filter_triangulations(6, c4_max=14) == []
    assert len(filter_triangulations(6, c4_min=16)) == 1
    assert len(filter_triangulations(8, degree_count={3: 0}, max_degree=6)) == len(
        filter_triangulations(8, min_degree=4, max_degree=6)
    )
    with pytest.raises(UnknownPredicateField):
        filter_triangulations(6, colour="red")


def test_report_json_schema():
    schema = report_schema()
    for r in [verify_theorem1(8), verify_lemma(1, 8), *verify_structural_claims(8)]:
        jsonschema.validate(r.as_dict(), schema)
    codes = {n: catalog_codes(n) for n in range(4, 7)}
    codes[6] = codes[6][:1]
    failed = verify_theorem1(6, Catalog(codes)).as_dict()
    jsonschema.validate(failed, schema)
    broken = dict(failed, counterexamples=[])
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(broken, schema)


def test_k4_catalog_is_k4():
    assert catalog_codes(4) == (k4().code,)
