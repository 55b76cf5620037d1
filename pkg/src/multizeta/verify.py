"""Run registered identities over parameter grids and report the outcomes.

A report row records the two evaluated sides next to the comparison
verdict; failures are data, not errors, so a variant that contradicts its
own statement still produces rows (and the expected-outcome manifest says
which variants are supposed to do that).  Exceptions raised while a case
evaluates are not swallowed: a pole or domain violation means the grid is
wrong, and that should surface immediately.

Comparison rules: cases with tol None must match exactly (Fractions,
polynomials, truncated series, ints); both value fields then render as the
values themselves and the residual columns read "exact".  Numeric cases
compare |lhs - rhs| / |rhs| against tol, falling back to the absolute
error when |rhs| is essentially zero.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Mapping, Sequence

from .bernoulli import RationalPoly
from .identities import REGISTRY, Case, GridSpec, Identity, Variant
from .powerseries import LaurentSeries

__all__ = [
    "GridSpec",
    "IdentityReport",
    "UnknownIdentityError",
    "available_identities",
    "check_against_manifest",
    "format_value",
    "load_manifest",
    "reports_to_csv",
    "reports_to_json",
    "run_identity",
    "run_suite",
    "summarize",
]

_EXACT_TYPES = (Fraction, int, RationalPoly, LaurentSeries)
_ZERO_FLOOR = 1e-30
_VALUE_CAP = 160


class UnknownIdentityError(ValueError):
    """Raised for identity ids or variant names not in the registry."""


@dataclass(frozen=True)
class IdentityReport:
    ident: str
    variant: str
    params: tuple[tuple[str, str], ...]
    lhs: str
    rhs: str
    abs_err: str
    rel_err: str
    tol: str
    passed: bool
    elapsed_ms: float

    def to_json_dict(self) -> dict:
        return {
            "id": self.ident,
            "variant": self.variant,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "absErr": self.abs_err,
            "relErr": self.rel_err,
            "tol": self.tol,
            "pass": self.passed,
            "elapsedMs": self.elapsed_ms,
        }


def format_complex(z: complex) -> str:
    """Render a+bi with repr-precision parts; pure reals drop the i part."""
    if z.imag == 0:
        return repr(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def format_value(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, Fraction)):
        text = str(value)
    elif isinstance(value, (RationalPoly, LaurentSeries)):
        text = str(value)
    elif isinstance(value, complex):
        text = format_complex(value)
    elif isinstance(value, float):
        text = repr(value)
    else:
        text = str(value)
    if len(text) > _VALUE_CAP:
        text = text[: _VALUE_CAP - 3] + "..."
    return text


def _params_str(params: Iterable[tuple[str, object]]) -> tuple[tuple[str, str], ...]:
    out = []
    for name, value in params:
        if isinstance(value, complex):
            out.append((name, format_complex(value)))
        elif isinstance(value, (tuple, list)):
            out.append((name, "(" + ",".join(str(v) for v in value) + ")"))
        else:
            out.append((name, str(value)))
    return tuple(out)


def _compare(lhs, rhs, tol: float | None):
    """Return (passed, abs_err_str, rel_err_str, tol_str, lhs_str, rhs_str)."""
    if tol is None:
        if not isinstance(lhs, _EXACT_TYPES) or not isinstance(rhs, _EXACT_TYPES):
            raise TypeError(
                f"exact case produced non-exact values: {type(lhs)}, {type(rhs)}"
            )
        ok = lhs == rhs
        if ok:
            return True, "exact", "exact", "exact", format_value(lhs), format_value(rhs)
        # Failing exact comparisons report a numeric gap where one is
        # defined (scalars); structured values just show both sides.
        if isinstance(lhs, (int, Fraction)) and isinstance(rhs, (int, Fraction)):
            diff = abs(Fraction(lhs) - Fraction(rhs))
            base = abs(Fraction(rhs))
            rel = repr(float(diff / base)) if base else "inf"
            return False, repr(float(diff)), rel, "exact", format_value(lhs), format_value(rhs)
        return False, "structural", "structural", "exact", format_value(lhs), format_value(rhs)
    zl, zr = complex(lhs), complex(rhs)
    abs_err = abs(zl - zr)
    scale = abs(zr)
    if scale < _ZERO_FLOOR:
        rel_err = abs_err
    else:
        rel_err = abs_err / scale
    ok = rel_err <= tol
    return (
        ok,
        repr(abs_err),
        repr(rel_err),
        repr(float(tol)),
        format_value(zl),
        format_value(zr),
    )


def _run_case(ident: str, variant: str, case: Case) -> IdentityReport:
    started = time.perf_counter()
    lhs, rhs = case.run()
    elapsed = (time.perf_counter() - started) * 1000.0
    passed, abs_err, rel_err, tol_str, lhs_str, rhs_str = _compare(lhs, rhs, case.tol)
    return IdentityReport(
        ident=ident,
        variant=variant,
        params=_params_str(case.params),
        lhs=lhs_str,
        rhs=rhs_str,
        abs_err=abs_err,
        rel_err=rel_err,
        tol=tol_str,
        passed=passed,
        elapsed_ms=round(elapsed, 3),
    )


def available_identities() -> list[str]:
    return list(REGISTRY)


def _get(ident: str) -> Identity:
    try:
        return REGISTRY[ident]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {ident!r}") from None


def _get_variant(identity: Identity, name: str) -> Variant:
    try:
        return identity.variant(name)
    except KeyError:
        raise UnknownIdentityError(
            f"identity {identity.ident} has no variant {name!r} "
            f"(has: {', '.join(identity.variant_names)})"
        ) from None


def _inject_tol(params: Mapping, grid: GridSpec | None) -> Mapping:
    if grid is not None and grid.tol is not None:
        return {**params, "_tol": float(grid.tol)}
    return params


def run_identity(
    ident: str,
    variant: str | None = None,
    params: Mapping | None = None,
    grid: GridSpec | None = None,
) -> list[IdentityReport]:
    """Evaluate one identity.

    With explicit params, runs that single case for the chosen variant
    (default: the first registered one).  Otherwise runs the default grid
    of every variant, or of the named variant only.
    """
    identity = _get(ident)
    reports: list[IdentityReport] = []
    if params is not None:
        v = _get_variant(identity, variant) if variant else identity.variants[0]
        case = v.make(_inject_tol(params, grid))
        reports.append(_run_case(identity.ident, v.name, case))
        return reports
    variants = (
        [_get_variant(identity, variant)] if variant else list(identity.variants)
    )
    for v in variants:
        for p in v.defaults(grid):
            case = v.make(_inject_tol(p, grid))
            reports.append(_run_case(identity.ident, v.name, case))
    return sort_reports(reports)


def run_suite(
    idents: Sequence[str] | None = None,
    grid: GridSpec | None = None,
) -> list[IdentityReport]:
    """Run the default grids of the chosen identities (all by default)."""
    reports: list[IdentityReport] = []
    for ident in idents if idents is not None else REGISTRY:
        reports.extend(run_identity(ident, grid=grid))
    return sort_reports(reports)


def _param_cell(params: tuple[tuple[str, str], ...]) -> str:
    return ";".join(f"{k}={v}" for k, v in params)


def sort_reports(reports: Iterable[IdentityReport]) -> list[IdentityReport]:
    return sorted(reports, key=lambda r: (r.ident, r.variant, _param_cell(r.params)))


def summarize(reports: Sequence[IdentityReport]) -> str:
    passed = sum(1 for r in reports if r.passed)
    return f"PASS {passed} / FAIL {len(reports) - passed} / TOTAL {len(reports)}"


def reports_to_json(reports: Sequence[IdentityReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)


_CSV_COLUMNS = (
    "id",
    "variant",
    "params",
    "lhs",
    "rhs",
    "absErr",
    "relErr",
    "tol",
    "pass",
    "elapsedMs",
)


def reports_to_csv(reports: Sequence[IdentityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.ident,
                r.variant,
                _param_cell(r.params),
                r.lhs,
                r.rhs,
                r.abs_err,
                r.rel_err,
                r.tol,
                str(r.passed).lower(),
                r.elapsed_ms,
            ]
        )
    return buf.getvalue()


def report_lines(reports: Sequence[IdentityReport]) -> list[str]:
    lines = []
    for r in reports:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{mark} {r.ident} [{r.variant}] {_param_cell(r.params)} "
            f"relErr={r.rel_err} tol={r.tol}"
        )
    return lines


def load_manifest() -> dict[str, dict[str, bool]]:
    """Expected verdict per identity variant, shipped with the package."""
    text = (
        resources.files("multizeta").joinpath("data/expected_outcomes.json").read_text()
    )
    return json.loads(text)


def check_against_manifest(
    reports: Sequence[IdentityReport],
    manifest: Mapping[str, Mapping[str, bool]] | None = None,
) -> tuple[bool, list[str]]:
    """True when every (identity, variant) seen matches its expected verdict.

    Expected true means every case of that variant passed; expected false
    means at least one case failed.  Variants absent from the manifest,
    and manifest entries without any run cases, are both flagged.
    """
    if manifest is None:
        manifest = load_manifest()
    seen: dict[tuple[str, str], list[bool]] = {}
    for r in reports:
        seen.setdefault((r.ident, r.variant), []).append(r.passed)
    problems: list[str] = []
    for (ident, variant), verdicts in sorted(seen.items()):
        expected = manifest.get(ident, {}).get(variant)
        if expected is None:
            problems.append(f"{ident} [{variant}]: no expected outcome recorded")
        elif expected and not all(verdicts):
            bad = verdicts.count(False)
            problems.append(
                f"{ident} [{variant}]: expected all cases to pass, {bad} failed"
            )
        elif not expected and all(verdicts):
            problems.append(
                f"{ident} [{variant}]: expected at least one failing case, all passed"
            )
    return not problems, problems
