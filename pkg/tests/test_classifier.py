import pytest

from borelschur import classifier
from borelschur.classifier import classify, evidence
from borelschur.quiverkit import RepType
from borelschur.schur import CheckFailed


def test_classify_examples():
    assert classify(2, 5, 3) == RepType.TAME
    assert classify(3, 2, 0) == RepType.TAME
    assert classify(3, 2, 2) == RepType.TAME
    assert classify(3, 2, 7) == RepType.TAME
    assert classify(2, 3, 2) == RepType.FINITE
    assert classify(2, 6, 5) == RepType.WILD
    assert classify(4, 2, 5) == RepType.WILD
    assert classify(1, 9, 2) == RepType.FINITE
    assert classify(2, 4, 2) == RepType.WILD
    assert classify(2, 4, 3) == RepType.FINITE
    assert classify(2, 5, 5) == RepType.FINITE
    assert classify(2, 6, 3) == RepType.WILD
    assert classify(2, 100, 0) == RepType.FINITE
    assert classify(3, 1, 2) == RepType.FINITE
    assert classify(3, 3, 0) == RepType.WILD
    assert classify(6, 0, 7) == RepType.FINITE


def test_classify_rejects_bad_characteristic():
    with pytest.raises(ValueError):
        classify(2, 2, 4)
    with pytest.raises(ValueError):
        classify(2, 2, 6)
    with pytest.raises(ValueError):
        classify(0, 2, 3)


# region fixtures transcribed from the four characteristic pictures:
# rows n = 2..6, columns r = 1..12
REGION_FIXTURES = {
    0: [
        "ffffffffffff",
        "ftwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
    ],
    2: [
        "fffwwwwwwwww",
        "ftwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
    ],
    3: [
        "fffftwwwwwww",
        "ftwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
    ],
    5: [
        "fffffwwwwwww",
        "ftwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
    ],
    7: [
        "fffffffwwwww",
        "ftwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
        "fwwwwwwwwwww",
    ],
}


@pytest.mark.parametrize("p", sorted(REGION_FIXTURES))
def test_region_fixture(p):
    letters = {RepType.FINITE: "f", RepType.TAME: "t", RepType.WILD: "w"}
    for row, n in enumerate(range(2, 7)):
        got = "".join(letters[classify(n, r, p)] for r in range(1, 13))
        assert got == REGION_FIXTURES[p][row], (n, p)


def test_degenerate_rows_are_finite():
    for p in (0, 2, 3, 5, 7):
        for r in range(0, 13):
            assert classify(1, r, p) == RepType.FINITE
        for n in range(1, 7):
            assert classify(n, 0, p) == RepType.FINITE
            assert classify(n, 1, p) == RepType.FINITE


def test_monotonicity_grid():
    assert classifier.check_monotonicity(8, 20, [0, 2, 3, 5, 7, 11])


@pytest.mark.parametrize(
    "n,r,p",
    [(3, 3, 0), (3, 3, 2), (3, 3, 3), (4, 2, 3), (4, 2, 7),
     (2, 4, 2), (2, 6, 3), (2, 6, 5), (2, 8, 7), (3, 2, 0), (3, 2, 2),
     (3, 2, 3), (2, 5, 3)],
)
def test_evidence_verified(n, r, p):
    verdict = evidence(n, r, p)
    assert verdict.mode == "verified"
    assert all(item.status in ("pass", "asserted", "external") for item in verdict.evidence)
    assert any(item.status == "pass" for item in verdict.evidence)


def test_evidence_asserted_cases():
    for n, r, p in [(2, 3, 2), (1, 5, 0), (4, 2, 2), (4, 2, 0), (2, 0, 3)]:
        verdict = evidence(n, r, p)
        assert verdict.mode == "asserted (theorem only)"


def test_evidence_reduction_chain():
    verdict = evidence(5, 7, 3)
    chains = [item for item in verdict.evidence if item.name.startswith("reduction")]
    assert len(chains) == 1
    assert chains[0].payload == [[3, 3], [4, 3], [5, 3], [5, 4], [5, 5], [5, 6], [5, 7]]
    assert verdict.mode == "verified"


def test_evidence_reduction_two_row():
    verdict = evidence(2, 7, 2)
    chains = [item for item in verdict.evidence if item.name.startswith("reduction")]
    assert chains[0].payload == [[2, 4], [2, 5], [2, 6], [2, 7]]


def test_verdict_json():
    verdict = evidence(2, 5, 3)
    data = verdict.to_json()
    assert data["rep_type"] == "tame"
    assert data["mode"] == "verified"
    assert all(set(item) == {"name", "reference", "status", "payload"} for item in data["evidence"])
    report = verdict.report()
    assert "tame" in report and "[pass]" in report


def test_grid_totality():
    grid = classifier.classification_grid(6, 12, [0, 2, 3, 5, 7])
    assert len(grid) == 6 * 13 * 5
    assert all(isinstance(v, RepType) for v in grid.values())
