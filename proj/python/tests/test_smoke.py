import os
from fractions import Fraction
from pathlib import Path

import pytest

import ssbchoice

FIXTURES = Path(os.environ.get("SSBCHOICE_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def read(name):
    return (FIXTURES / name).read_text()


def test_public_finance_lottery_and_budget():
    profile = ssbchoice.parse_ballots(read("table1.ballots"))
    assert len(profile) == 100
    assert profile.alternatives == ["A", "B", "C", "D"]
    margins = ssbchoice.aggregate(profile)
    assert margins[0][1] == 40 and margins[2][3] == 80
    result = ssbchoice.maximal_lottery(margins, alternatives=profile.alternatives)
    assert result["lottery"] == [Fraction(1, 6), Fraction(1, 6), Fraction(2, 3), 0]
    assert result["slacks"][3] == 65
    shares = ssbchoice.budget(read("table1.ballots"), read("table1.proposals"))
    assert shares == {
        "Education": Fraction(1, 4),
        "Transportation": Fraction(4, 15),
        "Health": Fraction(3, 10),
        "Military": Fraction(11, 60),
    }


def test_condorcet_unique_uniform():
    margins = ssbchoice.aggregate(ssbchoice.parse_ballots(read("condorcet.ballots")))
    vertices, unique = ssbchoice.maximal_set(margins)
    assert unique
    assert vertices == [[Fraction(1, 3)] * 3]


def test_cycle_and_evaluate():
    phi = [[0, 1, 1, 1], [-1, 0, 1, 1], [-1, -1, 0, 1], [-1, -1, -1, 0]]
    p, q, r = [0, 0, 1, 0], ["2/5", 0, 0, "3/5"], [0, "3/5", 0, "2/5"]
    assert ssbchoice.evaluate(phi, p, q) == Fraction(1, 5)
    assert ssbchoice.evaluate(phi, q, r) == Fraction(1, 25)
    assert ssbchoice.evaluate(phi, r, p) == Fraction(1, 5)
    x, y, z = ssbchoice.cycle_witness(phi, jobs=2)
    assert ssbchoice.evaluate(phi, x, y) > 0
    assert ssbchoice.evaluate(phi, y, z) > 0
    assert ssbchoice.evaluate(phi, z, x) > 0
    assert ssbchoice.cycle_witness([[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]) is None


def test_iia_negative_fixture():
    before = ssbchoice.parse_ballots(read("vnm-before.ballots"))
    after = ssbchoice.parse_ballots(read("vnm-after.ballots"))
    passed, vacuous, detail = ssbchoice.check_iia(before, after, ["x", "y"], rule="relative")
    assert not passed and not vacuous
    assert "{x, y}" in detail


def test_domain_audit():
    report = ssbchoice.audit_domain("full-pc", 4)
    assert all(ok for ok, _ in (report[k] for k in ("R1", "R2", "R3", "R4")))


def test_errors():
    with pytest.raises(ssbchoice.ParseError):
        ssbchoice.parse_ballots("alternatives: a, b\n1: a > z\n")
    with pytest.raises(ValueError):
        ssbchoice.maximal_lottery([[0, 1], [1, 0]])
    with pytest.raises(ssbchoice.EnumerationBoundExceeded):
        ssbchoice.maximal_set([[0] * 9 for _ in range(9)])
