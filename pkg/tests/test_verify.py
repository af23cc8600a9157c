"""The cross-check battery: passing checks, fault isolation, report plumbing."""

import pytest

from kingmesh.mesh import SOLVED_IDS
from kingmesh.series import Series, UPoly, format_upoly
from kingmesh.verify import (
    EQUATIONS,
    FAIL,
    PASS,
    REFERENCE_MISMATCH,
    CheckReport,
    Witness,
    report_from_dict,
    report_to_dict,
    reports_from_json,
    reports_to_json,
    verify_all,
    verify_equation,
    verify_theorem,
)


def test_equation_registry_is_complete():
    ids = set(EQUATIONS)
    assert {"EQ_B", "EQ_C", "EQ_PX", "EQ_ATU", "EQ_BTU", "EQ_CTU"} <= ids
    for ident in ("12", "13", "16", "17", "19", "20", "22", "27", "28", "33", "55", "63", "64"):
        assert f"EQ_P{ident}_AV" in ids
        assert f"EQ_P{ident}_DIST" in ids
    for ident in ("16", "63", "64"):
        assert f"EQ_P{ident}_STAR" in ids
    assert len(ids) >= 20


@pytest.mark.parametrize("eq_id", sorted(EQUATIONS))
def test_equations_hold_at_order_20(eq_id):
    report = verify_equation(eq_id, order=20)
    assert report.status == PASS, report


def test_equation_detects_perturbation():
    # shifting one side by t must produce a nonzero residual
    spec = EQUATIONS["EQ_P16_STAR"]
    order = 12
    residual = spec.build(order + spec.margin)
    perturbed = residual + Series.t(residual.order)
    assert residual.is_zero(through=order)
    assert not perturbed.is_zero(through=order)


def test_unknown_equation_rejected():
    with pytest.raises(KeyError):
        verify_equation("EQ_NOPE")


@pytest.mark.parametrize("ident", ["10", "12", "33", "55", "64", "X"])
def test_theorems_pass(ident, catalog_sweep_9):
    report = verify_theorem(
        ident, order=12, n_max=9, oracle_rows=catalog_sweep_9[ident].rows
    )
    assert report.status == PASS, report
    assert report.check_id == f"theorem:{ident}"


def test_theorem_small_n_max_self_contained():
    report = verify_theorem("63", order=10, n_max=5)
    assert report.status == PASS


def test_theorem_unknown_pattern():
    with pytest.raises(KeyError):
        verify_theorem("3")  # open pattern, no theorem


def test_theorem_detects_corrupt_oracle(catalog_sweep_9):
    rows = list(catalog_sweep_9["16"].rows)
    rows[5] = rows[5] + UPoly((1,))
    report = verify_theorem("16", order=10, n_max=9, oracle_rows=tuple(rows))
    assert report.status == FAIL
    assert report.witness is not None
    assert report.witness.n == 5


def test_reference_mismatch_is_distinguished(monkeypatch, catalog_sweep_9):
    # poison one pinned row: computation still agrees with itself, so the
    # report should blame the reference, not fail outright
    import kingmesh.verify as verify_mod

    poisoned = dict(verify_mod.REFERENCE_EXPANSIONS)
    poisoned["E:16"] = ("1", "1", "0", "0", "2", "99")
    monkeypatch.setattr(verify_mod, "REFERENCE_EXPANSIONS", poisoned)
    report = verify_theorem(
        "16", order=10, n_max=6, oracle_rows=catalog_sweep_9["16"].rows[:7]
    )
    assert report.status == REFERENCE_MISMATCH
    assert report.witness.n == 5
    assert report.witness.expected == "99"
    assert report.witness.actual == "12+2u^4"


def test_report_dict_round_trip():
    reports = [
        CheckReport("theorem:16", "subject", PASS),
        CheckReport("equation:EQ_B", "subject", FAIL, Witness(3, "0", "1+u")),
    ]
    for r in reports:
        assert report_from_dict(report_to_dict(r)) == r
    assert reports_from_json(reports_to_json(reports)) == reports


def test_verify_all_small_run():
    # a small full run passes, repeats byte-identically, and sorts by id
    a = verify_all(order=8, n_max=4)
    b = verify_all(order=8, n_max=4)
    assert reports_to_json(a) == reports_to_json(b)
    ids = [r.check_id for r in a]
    assert ids == sorted(ids)
    assert all(r.status == PASS for r in a), [r for r in a if r.status != PASS]
    # every family of checks is represented
    families = {r.check_id.split(":")[0] for r in a}
    assert families == {
        "counts", "kingchar", "golden", "theorem", "strongpoint", "halving",
        "equation", "mass",
    }
    assert sum(1 for r in a if r.check_id.startswith("theorem:")) == len(SOLVED_IDS)


def test_halving_witness_at_small_n():
    # at n = 4 the halving check sees one avoider and one single container
    from kingmesh.verify import _check_halving

    rows = (UPoly((1,)), UPoly((1,)), UPoly(), UPoly(), UPoly((1, 1)))
    assert _check_halving(4, rows).status == PASS
    bad = (UPoly((1,)), UPoly((1,)), UPoly(), UPoly(), UPoly((2,)))
    report = _check_halving(4, bad)
    assert report.status == FAIL
    assert report.witness.n == 4
    assert report.witness.expected == format_upoly(UPoly((1, 1)))
