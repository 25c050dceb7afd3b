import json

import pytest

from conftest import brute_partitions
from partlab import verification as ver
from partlab.bijections import psi
from partlab.classes import ClassSpec, Family, ScaleBoundError, all_partitions, enumerate_class
from partlab.partition import parse_partition as P


def test_oracle_partition_count():
    assert ver.oracle_partition_count(0) == 1
    assert ver.oracle_partition_count(5) == 7
    for n in range(0, 26):
        assert ver.oracle_partition_count(n) == len(brute_partitions(n)) == len(all_partitions(n))


def test_thm14_first_row():
    rep = ver.verify_theorem("thm1.4", 2, 1, n_min=1)
    (row,) = rep.rows
    assert row.n == 1 and row.equal
    assert row.value("#B'_2(n)") == 1 and row.value("#C_2(n+1)") == 1
    assert rep.verdict == "pass"
    assert rep.extra["telescoping"]["passed"]


def test_thm12_zero_row():
    for k in (2, 3, 5):
        rep = ver.verify_theorem("thm1.2", k, 0)
        (row,) = rep.rows
        assert [v for _, v in row.counts] == [1, 1, 1, 1]
        assert rep.passed


def test_thm13_k3_contains_paper_pair():
    rep = ver.verify_theorem("thm1.3", 3, 30)
    assert rep.passed
    assert all(r.equal for r in rep.rows if r.n >= 1)
    zero = rep.rows[0]
    assert zero.informational and not zero.equal
    lam, mu = P("7,6,6,3,2,2,1,1"), P("7,2^8,1^5")
    assert lam in enumerate_class(ClassSpec(Family.E, 3), 28)
    assert mu in enumerate_class(ClassSpec(Family.B, 3), 28)
    assert psi(lam, 3) == mu


@pytest.mark.parametrize("theorem", ["thm1.1", "thm1.2", "thm1.3", "thm1.4", "corollary-k2"])
def test_theorems_pass_small(theorem):
    rep = ver.verify_theorem(theorem, 3, 18)
    assert rep.passed, rep.to_text()
    for s in rep.bijection_stats:
        assert s.attempted > 0 and s.ok


def test_thm11_holds_from_one_and_flags_zero():
    rep = ver.verify_theorem("thm1.1", 2, 35, bijections=False)
    zero = rep.rows[0]
    assert zero.informational and not zero.equal
    assert dict(zero.counts) == {"#A(n)": 1, "#B(n)": 1, "#C(n+1)": 0, "#D(n+1)": 1}
    assert all(r.equal for r in rep.rows[1:])
    assert rep.passed


def test_corollary_definition_agrees_with_proof_variant():
    for n in range(1, 16):
        stated = {p for p in all_partitions(n) if ver.is_corollary_member(p)}
        assert stated == set(enumerate_class(ClassSpec(Family.E, 2), n))


def test_threshold_experiment_k2():
    rep = ver.ek_threshold_experiment(2, 10)
    assert rep.passed
    info = rep.extra["literal_first_mismatch"]
    assert info is not None and info["n"] <= 10
    # minimal witness: value 1 repeated below the proof threshold
    assert info["witnesses"][0] == [3, 1, 1]
    for w in info["witnesses"]:
        assert w[0] % 2 == 1
    assert rep.extra["proof_mismatches"] == []


@pytest.mark.parametrize("k", [2, 3])
def test_threshold_experiment_proof_clean(k):
    rep = ver.ek_threshold_experiment(k, 40)
    assert rep.extra["proof_mismatches"] == []
    assert rep.passed


def test_report_serialisation_is_deterministic():
    a = ver.verify_theorem("thm1.4", 3, 12).to_json()
    b = ver.verify_theorem("thm1.4", 3, 12).to_json()
    assert a == b
    doc = json.loads(a)
    assert set(doc) >= {"theorem", "k", "range", "rows", "bijection_stats", "verdict"}
    assert doc["verdict"] == "pass"
    csv_text = ver.verify_theorem("thm1.4", 3, 12).to_csv()
    lines = csv_text.splitlines()
    assert lines[0].startswith("n,") and len(lines) == 14


def test_failure_surfaces_minimal_witness():
    stats = ver.BijectionStats("broken", 2)
    domain = [P("5,3,1"), P("3,1"), P("1"), P("3")]

    def forward(p, k):
        return p

    def backward(p, k):
        # loses every partition with a 3 in it
        return P("1") if 3 in p.parts else p

    ver._sweep(stats, domain, forward, backward, ClassSpec(Family.B, 2), "forward")
    assert not stats.ok
    assert stats.attempted == 4 and stats.passed == 1
    assert stats.minimal_witness().witness == P("3")
    rep = ver.VerificationReport("thm1.2", 2, 0, 0, bijection_stats=[stats])
    assert rep.verdict == "fail"


def test_mismatched_row_fails_report():
    rep = ver.VerificationReport("thm1.2", 2, 0, 1, rows=[ver.Row(0, (("x", 1), ("y", 1)), True),
                                                         ver.Row(1, (("x", 1), ("y", 2)), False)])
    assert rep.verdict == "fail"
    assert [r.n for r in rep.mismatched_rows] == [1]


def test_scale_bounds(monkeypatch):
    with pytest.raises(ScaleBoundError):
        ver.verify_theorem("thm1.2", 2, 46)
    with pytest.raises(ScaleBoundError):
        ver.verify_theorem("thm1.4", 2, 45)
    assert ver.verify_theorem("thm1.2", 2, 60, n_min=60, bijections=False).passed
    monkeypatch.setenv("PARTLAB_MAX_N", "12")
    with pytest.raises(ScaleBoundError):
        ver.verify_theorem("thm1.2", 2, 13, n_min=13)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        ver.verify_theorem("thm9", 2, 3)
