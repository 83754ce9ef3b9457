import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from btstrata.shimura import (
    AutoRepDescriptor,
    BasicStratumReport,
    FrobScalar,
    RosterError,
    alternating_identity,
    basic_stratum_cohomology,
    dumps_report,
    frob_scalar_on_ext,
    load_roster,
    parse_roster,
    report_from_roster,
)

GOLDEN = Path(__file__).parent / "golden"
CASES = ["empty", "unramified", "spherical"]


def test_frob_scalar_examples():
    for n in (3, 4):
        top = 2 * (n - 1)
        assert frob_scalar_on_ext(top, n, 7) == FrobScalar(1, "delta", 7)
        assert frob_scalar_on_ext(top - 1, n, 7) == FrobScalar(-1, "delta", 8)
        assert frob_scalar_on_ext(top - 2, n, 7) == FrobScalar(1, "delta", 9)
    with pytest.raises(ValueError):
        frob_scalar_on_ext(5, 3, 0)
    with pytest.raises(ValueError):
        frob_scalar_on_ext(-1, 3, 0)


def test_alternating_identity():
    for p in (3, 5, 7):
        assert alternating_identity(p) and alternating_identity(p**3)
    assert alternating_identity(1)
    with pytest.raises(ValueError):
        alternating_identity(0)


@pytest.mark.parametrize("case", CASES)
def test_golden_reports(case):
    roster = load_roster(GOLDEN / ("roster_%s.json" % case))
    text = dumps_report(report_from_roster(roster))
    assert text == (GOLDEN / ("report_%s.json" % case)).read_text()
    assert BasicStratumReport.from_json(json.loads(text)) == report_from_roster(roster)


def test_n4_multiplicities():
    r = basic_stratum_cohomology(4, 3, [
        AutoRepDescriptor("a", unramified_char=True, j1_spherical=True, d=2, weight_w=1),
        AutoRepDescriptor("b", j1_spherical=True, dim_gt_1=True, d=26),
        AutoRepDescriptor("c", is_chi_tau1=True, weight_w=-2),
    ])
    assert r.nu == 27
    assert [(lab, m) for lab, m, _ in r.h1_quot] == [("a", 25)]
    assert [(lab, m, fr.sign, fr.exponent) for lab, m, fr in r.h1_sub] == [("a", 2, 1, 1), ("b", 26, 1, 0), ("c", 1, -1, -1)]
    assert [lab for lab, _, _ in r.h2] == ["a", "b"]
    assert [lab for lab, _, _ in r.h0] == ["a"]


@pytest.mark.parametrize("kw", [
    dict(d=1),
    dict(unramified_char=True),
    dict(unramified_char=True, j1_spherical=True, dim_gt_1=True),
    dict(is_chi_tau1=True, j1_spherical=True, d=1),
    dict(j1_spherical=True, dim_gt_1=True, d=5),
    dict(unramified_char=True, j1_spherical=True, d=6),
    dict(j1_spherical=True, d=-1),
])
def test_validation_rejects(kw):
    with pytest.raises(RosterError):
        basic_stratum_cohomology(3, 5, [AutoRepDescriptor("x", **kw)])


def test_boundary_multiplicities_accepted():
    r = basic_stratum_cohomology(3, 5, [
        AutoRepDescriptor("x", j1_spherical=True, dim_gt_1=True, d=4),
        AutoRepDescriptor("y", unramified_char=True, j1_spherical=True, d=5),
    ])
    assert r.h1_quot == ()


def test_n_and_p_checked():
    with pytest.raises(RosterError):
        basic_stratum_cohomology(5, 3, [])
    with pytest.raises(ValueError):
        basic_stratum_cohomology(3, 9, [])


def test_roster_parsing():
    with pytest.raises(RosterError):
        parse_roster({"version": 2, "n": 3, "p": 5, "entries": []})
    with pytest.raises(RosterError):
        parse_roster({"version": 1, "n": 3, "p": 5, "entries": [{"label": "a", "colour": 1}]})
    with pytest.raises(RosterError):
        parse_roster({"version": 1, "n": 3, "p": 5, "entries": [{"label": "a", "d": "1"}]})
    with pytest.raises(RosterError):
        parse_roster({"version": 1, "n": 3, "p": 5, "entries": [{"label": "a", "j1_spherical": 1}]})
    with pytest.raises(RosterError):
        parse_roster({"version": 1, "n": 3, "p": 5, "entries": [{"label": "a"}, {"label": "a"}]})
    r = parse_roster({"version": 1, "n": 4, "p": 3, "entries": [{"label": "a"}]})
    assert r.entries[0] == AutoRepDescriptor("a")
    assert parse_roster(r.to_json()) == r


descriptors = st.builds(
    lambda label, kind, d, w: _make(label, kind, d, w),
    st.text("abcxyz", min_size=1, max_size=3),
    st.sampled_from(["plain", "unram", "spherical", "spherical1", "chitau"]),
    st.integers(0, 30),
    st.integers(-5, 5),
)


def _make(label, kind, d, w):
    if kind == "unram":
        return AutoRepDescriptor(label, unramified_char=True, j1_spherical=True, d=d, weight_w=w)
    if kind == "spherical":
        return AutoRepDescriptor(label, j1_spherical=True, dim_gt_1=True, d=d, weight_w=w)
    if kind == "spherical1":
        return AutoRepDescriptor(label, j1_spherical=True, weight_w=w)
    if kind == "chitau":
        return AutoRepDescriptor(label, is_chi_tau1=True, weight_w=w)
    return AutoRepDescriptor(label, dim_gt_1=True, weight_w=w)


@given(st.lists(descriptors, max_size=6), st.sampled_from([(3, 3), (3, 5), (4, 3)]))
def test_report_invariants(entries, np_):
    n, p = np_
    try:
        r = basic_stratum_cohomology(n, p, entries)
    except RosterError:
        return
    assert r.total("h0") <= r.total("h2")
    for part in ("h0", "h1_sub", "h1_quot", "h2"):
        assert all(m > 0 for _, m, _ in getattr(r, part))
    for lab, _, fr in r.h0:
        e = next(x for x in entries if x.label == lab)
        assert fr == frob_scalar_on_ext(2 * (n - 1), n, e.weight_w, e.delta_label)
