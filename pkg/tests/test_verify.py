"""Report plumbing: determinism, ordering, serialisation, manifest rules."""

import csv
import io
import json
import random
from importlib import resources

import jsonschema
import pytest

from multizeta.identities import GridSpec, get_identity, identity_ids
from multizeta.verify import (
    IdentityReport,
    UnknownIdentityError,
    available_identities,
    check_against_manifest,
    format_value,
    load_manifest,
    reports_to_csv,
    reports_to_json,
    run_identity,
    run_suite,
    sort_reports,
    summarize,
)


def strip_timing(report):
    d = report.to_json_dict()
    d.pop("elapsedMs")
    return d


def test_registry_and_manifest_cover_each_other():
    ids = available_identities()
    manifest = load_manifest()
    assert sorted(ids) == sorted(manifest)
    for ident in ids:
        assert set(get_identity(ident).variant_names) == set(manifest[ident])


def test_exact_identity_reports():
    reports = run_identity("I-ORTH", grid=GridSpec(index_ranges={"n": 5, "m": 5}))
    assert reports and all(r.passed for r in reports)
    for r in reports:
        assert r.tol == "exact"
        assert r.rel_err == "exact"
        assert r.elapsed_ms >= 0


def test_runs_are_deterministic_up_to_timing():
    grid = GridSpec(index_ranges={"n": 4})
    a = [strip_timing(r) for r in run_identity("I-L11", grid=grid)]
    b = [strip_timing(r) for r in run_identity("I-L11", grid=grid)]
    assert a == b


def test_sort_reports_is_canonical():
    reports = run_identity("I-C2", grid=GridSpec(index_ranges={"n": 2, "m": 2}))
    shuffled = reports[:]
    random.Random(7).shuffle(shuffled)
    assert sort_reports(shuffled) == list(reports)
    keys = [(r.ident, r.variant, dict(r.params)) for r in reports]
    assert keys == sorted(keys, key=lambda k: (k[0], k[1], str(k[2])))


def test_explicit_params_single_case():
    # The one-point form used in the docs: order 0 collapses to a plain
    # Hurwitz zeta, where even the as-printed statement holds.
    reports = run_identity(
        "I-T1", variant="as-printed", params={"m": 0, "s": 5.0, "x": 1.0}
    )
    assert len(reports) == 1 and reports[0].passed
    corrected = run_identity(
        "I-T1", variant="corrected", params={"m": 2, "s": 6.5, "x": 1.0}
    )
    assert corrected[0].passed
    assert corrected[0].tol == "1e-09"


def test_unknown_identifiers_raise():
    with pytest.raises(UnknownIdentityError):
        run_identity("I-NOPE")
    with pytest.raises(UnknownIdentityError):
        run_identity("I-T1", variant="imaginary")
    with pytest.raises(KeyError):
        get_identity("I-T1").variant("imaginary")


def test_json_payload_matches_schema():
    reports = run_identity("I-E24", grid=GridSpec(index_ranges={"n": 3, "m": 3}))
    payload = json.loads(reports_to_json(reports))
    schema = json.loads(
        resources.files("multizeta").joinpath("data/report.schema.json").read_text()
    )
    jsonschema.validate(payload, schema)
    # Both variants report, and the as-printed one must carry failures.
    variants = {row["variant"] for row in payload}
    assert variants == {"as-printed", "corrected"}
    assert any(not row["pass"] for row in payload if row["variant"] == "as-printed")


def test_csv_round_trip():
    reports = run_identity("I-L12", grid=GridSpec(index_ranges={"n": 4}))
    text = reports_to_csv(reports)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == [
        "id", "variant", "params", "lhs", "rhs",
        "absErr", "relErr", "tol", "pass", "elapsedMs",
    ]
    assert len(rows) == len(reports) + 1
    for row, report in zip(rows[1:], reports):
        assert row[0] == report.ident
        assert row[2] == ";".join(f"{k}={v}" for k, v in report.params)
        assert row[8] in ("true", "false")


def test_summary_counts():
    reports = run_identity("I-E24", grid=GridSpec(index_ranges={"n": 2, "m": 2}))
    text = summarize(reports)
    passed = sum(1 for r in reports if r.passed)
    assert text == f"PASS {passed} / FAIL {len(reports) - passed} / TOTAL {len(reports)}"


def test_grid_tol_override_propagates():
    loose = run_identity(
        "I-T1", variant="corrected", params={"m": 1, "s": 4.5, "x": 1.0},
        grid=GridSpec(tol=1e-3),
    )
    assert loose[0].tol == "0.001"
    assert loose[0].passed


def test_grid_clearance_is_enforced():
    with pytest.raises(ValueError):
        run_identity(
            "I-T1", variant="corrected", params={"m": 1, "s": 1.2, "x": 1.0}
        )


def test_index_ranges_shrink_grids():
    small = run_identity("I-ORTH", grid=GridSpec(index_ranges={"n": 2, "m": 2}))
    full = run_identity("I-ORTH", grid=GridSpec(index_ranges={"n": 4, "m": 4}))
    assert 0 < len(small) < len(full)


def test_manifest_check_flags_mismatches():
    reports = run_identity("I-E24", grid=GridSpec(index_ranges={"n": 2, "m": 2}))
    ok, problems = check_against_manifest(reports)
    assert ok and problems == []
    # Same rows claimed as all-passing contradicts the expected failure.
    doctored = [
        IdentityReport(
            ident=r.ident, variant=r.variant, params=r.params, lhs=r.lhs,
            rhs=r.rhs, abs_err=r.abs_err, rel_err=r.rel_err, tol=r.tol,
            passed=True, elapsed_ms=r.elapsed_ms,
        )
        for r in reports
    ]
    ok, problems = check_against_manifest(doctored)
    assert not ok
    assert any("expected at least one failing case" in p for p in problems)
    # And an unknown variant is flagged rather than ignored.
    rogue = doctored[0]
    rogue = IdentityReport(
        ident=rogue.ident, variant="derived", params=rogue.params, lhs=rogue.lhs,
        rhs=rogue.rhs, abs_err=rogue.abs_err, rel_err=rogue.rel_err, tol=rogue.tol,
        passed=True, elapsed_ms=rogue.elapsed_ms,
    )
    ok, problems = check_against_manifest([rogue])
    assert not ok and "no expected outcome recorded" in problems[0]


def test_run_suite_subset_and_order():
    reports = run_suite(
        ["I-L12", "I-L11"], grid=GridSpec(index_ranges={"n": 3})
    )
    assert [r.ident for r in reports] == sorted(r.ident for r in reports)


def test_format_value_caps_width():
    text = format_value("x" * 500)
    assert len(text) == 160 and text.endswith("...")


def test_failing_exact_scalars_show_float_gap():
    reports = run_identity("I-E27", variant="as-printed", params={"n": 2, "m": 3})
    (report,) = reports
    assert not report.passed
    assert report.tol == "exact"
    float(report.rel_err)  # exact scalars that disagree still report a gap


def test_failing_exact_structures_report_structural():
    reports = run_identity("I-E24", variant="as-printed", params={"n": 3, "m": 5})
    (report,) = reports
    assert not report.passed
    assert report.rel_err == "structural"


def test_identity_ids_sorted_registry():
    assert identity_ids() == available_identities()
    assert "I-ZQUAD" in identity_ids()
