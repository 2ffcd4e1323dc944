# superinv/report.py
"""Serialization of reports to json, csv and text; files are written atomically."""
import csv
import io
import json
import logging
from pathlib import Path

from .errors import UsageError
from .models.report import BasisReport, CauchyReport, GradedReport, InvariantReport, SampleSuite
from .utils.paths import atomic_write

log = logging.getLogger(__name__)


def _csv_table(report) -> tuple[list[str], list[list]]:
    if isinstance(report, GradedReport):
        return (["degree", "dim_invariants", "dim_closure", "pass"],
                [[r.degree, r.dim_invariants, r.dim_closure, str(r.passed).lower()] for r in report.rows])
    if isinstance(report, CauchyReport):
        return (["partition", "dim_u", "dim_v", "product"],
                [[" ".join(map(str, r.partition)), r.dim_u, r.dim_v, r.product] for r in report.rows])
    if isinstance(report, SampleSuite):
        return (["name", "samples", "failures", "ok"],
                [[r.name, r.samples, r.failures, str(r.ok).lower()] for r in report.reports])
    if isinstance(report, BasisReport):
        return (["index", "parity", "matrix"],
                [[k, "odd" if p else "even", "; ".join(" ".join(row) for row in rows)]
                 for k, (p, rows) in enumerate(report.elements)])
    if isinstance(report, InvariantReport):
        return (["name", "degree", "parity", "invariant", "value"],
                [[report.name, report.degree, report.parity, report.invariant, report.text]])
    raise UsageError(f"cannot tabulate {type(report).__name__}")


def render_csv(report) -> str:
    header, rows = _csv_table(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_text(report) -> str:
    lines = []
    if isinstance(report, GradedReport):
        lines.append(f"{report.family} dimV={tuple(report.dimV)} copies={tuple(report.copies)} "
                     f"max_degree={report.max_degree} fixtures={report.fixtures_version} ({report.fixtures_hash})")
        lines += [f"  generator {g}" for g in report.generators]
        for r in report.rows:
            lines.append(f"  degree {r.degree}: invariants {r.dim_invariants}, closure {r.dim_closure}"
                         f" {'pass' if r.passed else 'FAIL'}")
        lines += [f"  note: {n}" for n in report.notes]
    elif isinstance(report, CauchyReport):
        lines.append(f"S^{report.k}(U (x) V) with U={report.dim_u} V={report.dim_v}")
        for r in report.rows:
            lines.append(f"  {r.partition}: {r.dim_u} x {r.dim_v} = {r.product}")
        lines.append(f"  lhs {report.lhs} rhs {report.rhs} {'ok' if report.ok else 'MISMATCH'}")
    elif isinstance(report, SampleSuite):
        lines.append(f"qet-demo n={report.n} seed={report.seed}")
        for r in report.reports:
            lines.append(f"  {r.name}: {r.samples - r.failures}/{r.samples} ok" + (f" ({r.witness})" if r.witness else ""))
    elif isinstance(report, BasisReport):
        lines.append(f"basis of {report.family} dimV={tuple(report.dimV)}: {len(report.elements)} elements")
        for k, (p, rows) in enumerate(report.elements):
            lines.append(f"  [{k}] {'odd' if p else 'even'}")
            lines += ["      " + " ".join(f"{c:>4}" for c in row) for row in rows]
    elif isinstance(report, InvariantReport):
        lines.append(report.text)
        if report.invariant is not None:
            lines.append(f"# {report.family}-invariant: {report.invariant}"
                         + (f" (witness {report.witness})" if report.witness else ""))
    else:
        raise UsageError(f"cannot render {type(report).__name__}")
    return "\n".join(lines) + "\n"


def render(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return render_csv(report)
    if fmt == "text":
        return render_text(report)
    raise UsageError(f"unknown format {fmt!r}")


def write_report(report, fmt: str, path: str | Path) -> Path:
    text = render(report, fmt)
    path = Path(path)
    atomic_write(path, text)
    log.info("wrote %s report to %s", fmt, path)
    return path
