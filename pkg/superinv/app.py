# superinv/app.py
import argparse
import logging
import sys
from pathlib import Path

from . import conventions
from .action import build_arena, multidegree
from .algebras import basis_of
from .combinatorics import cauchy_check
from .errors import InvalidSpecError, SuperInvError, UsageError
from .invariants import named_invariant
from .models.report import BasisReport, InvariantReport, SampleSuite
from .models.specs import FAMILIES, FORMATS, CopySpec, FamilySpec, RunConfig
from .parsers.poly_text import canonical_text
from .report import render_text, write_report
from .samples import qet_demo
from .solver import family_derivations, find_witness, verify_basic_set
from .utils.paths import default_report_name, output_path
from .utils.settings import load_settings, save_settings
from .workers.images import ImageWorker

log = logging.getLogger("superinv")

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _ints(text: str, count: int, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"{flag} expects {count} comma-separated integers, got {text!r}") from None
    if len(values) != count:
        raise UsageError(f"{flag} expects {count} comma-separated integers, got {text!r}")
    return values


def _params(items) -> dict:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--params entries look like key=value, got {item!r}")
        params[key.strip()] = value.strip()
    return params


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--out", type=Path, help="report file (default: <output_dir>/<command>_...)")
    common.add_argument("--config", type=Path, help="JSON settings file")
    common.add_argument("--save-config", type=Path, help="store this run's effective settings as a JSON settings file")
    common.add_argument("--seed", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--fixtures-version", help="refuse to run unless the conventions fixture has this version")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    parser = argparse.ArgumentParser(prog="superinv", description="Invariants of classical Lie superalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="print a basis of the algebra")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--dim", required=True, help="n,m")

    p = sub.add_parser("invariant", parents=[common], help="build one named invariant")
    p.add_argument("--name", required=True)
    p.add_argument("--family", choices=FAMILIES, help="also check invariance under this family")
    p.add_argument("--dim", required=True, help="n,m")
    p.add_argument("--copies", required=True, help="k,l,p,q")
    p.add_argument("--params", nargs="*", default=[], help="key=value, e.g. t=1 s=1' k=2 lam=2,1")

    p = sub.add_parser("check", parents=[common], help="compare basic-set closure with the invariants")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--dim", required=True, help="n,m")
    p.add_argument("--copies", required=True, help="k,l,p,q")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--omit", default="", help="comma list of extra generators to leave out (f, Omega, p, q_lambda)")
    p.add_argument("--no-polarize", action="store_true", help="products only, no polarization operators")

    p = sub.add_parser("decompose", parents=[common], help="super Cauchy dimension identity")
    p.add_argument("--dimU", dest="dim_u", required=True, help="a,b")
    p.add_argument("--dimV", dest="dim", required=True, help="c,d")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("qet-demo", parents=[common], help="seeded qet and Berezinian sample suites")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--samples", type=int)
    return parser


def config_from_args(args: argparse.Namespace, settings: dict) -> RunConfig:
    """Explicit flags win over the settings file."""
    def pick(value, key):
        return settings[key] if value is None else value

    cfg = RunConfig(
        command=args.command,
        format=pick(args.format, "format"),
        out=args.out,
        seed=pick(args.seed, "seed"),
        workers=pick(args.workers, "workers"),
        fixtures_version=args.fixtures_version,
    )
    if getattr(args, "family", None):
        cfg.family = args.family
    if getattr(args, "dim", None):
        cfg.dim = _ints(args.dim, 2, "--dim")
    if getattr(args, "copies", None):
        cfg.copies = _ints(args.copies, 4, "--copies")
    if args.command == "check":
        cfg.max_degree = pick(args.max_degree, "max_degree")
        cfg.omit = tuple(x.strip() for x in args.omit.split(",") if x.strip())
        cfg.no_polarize = args.no_polarize
    if args.command == "invariant":
        cfg.name = args.name
        cfg.params = _params(args.params)
    if args.command == "decompose":
        cfg.dim_u = _ints(args.dim_u, 2, "--dimU")
        cfg.k = args.k
    if args.command == "qet-demo":
        cfg.n = args.n
        cfg.samples = pick(args.samples, "samples")
    return cfg


def effective_settings(cfg: RunConfig, settings: dict) -> dict:
    """Settings with this run's explicit flags folded in, as --save-config writes them."""
    out = {**settings, "format": cfg.format, "seed": cfg.seed, "workers": cfg.workers}
    if cfg.command == "check":
        out["max_degree"] = cfg.max_degree
    if cfg.command == "qet-demo":
        out["samples"] = cfg.samples
    return out


def _basis(cfg: RunConfig):
    spec = FamilySpec(cfg.family, *cfg.dim)
    report = BasisReport(spec.family, spec.dims)
    for x in basis_of(spec):
        rows = [[str(e.constant_term()) for e in row] for row in x.entries]
        report.elements.append((x.parity(), rows))
    return report, True


def _invariant(cfg: RunConfig):
    arena = build_arena(cfg.dim, CopySpec(*cfg.copies))
    inv = named_invariant(arena, cfg.name, **cfg.params)
    value = inv.value
    parity = "zero" if value.is_zero() else ("odd" if value.parity() else "even")
    report = InvariantReport(inv.name, arena.dim_v, arena.copies.as_tuple(), canonical_text(value),
                             value.degree(), list(multidegree(arena, value)), parity)
    if cfg.family:
        report.family = cfg.family
        witness = find_witness(value, family_derivations(arena, FamilySpec(cfg.family, *cfg.dim)))
        report.invariant = witness is None
        report.witness = witness.name if witness is not None else ""
    return report, report.ok


def _check(cfg: RunConfig, settings: dict):
    worker = ImageWorker({"workers": cfg.workers, "chunk_size": settings.get("chunk_size", 256)})
    report = verify_basic_set(FamilySpec(cfg.family, *cfg.dim), CopySpec(*cfg.copies), cfg.max_degree,
                              omit=cfg.omit, polarize=not cfg.no_polarize, worker=worker)
    for d in report.failing_degrees():
        row = report.rows[d]
        log.error("degree %d: closure %d < invariants %d", d, row.dim_closure, row.dim_invariants)
    return report, report.passed


def _decompose(cfg: RunConfig):
    report = cauchy_check(cfg.dim_u, cfg.dim, cfg.k)
    if not report.ok:
        log.error("dimension mismatch: %d != %d", report.lhs, report.rhs)
    return report, report.ok


def _qet_demo(cfg: RunConfig):
    suite = SampleSuite(cfg.n, cfg.seed, qet_demo(cfg.n, cfg.samples, cfg.seed))
    for r in suite.reports:
        if not r.ok:
            log.error("%s failed on %d of %d samples: %s", r.name, r.failures, r.samples, r.witness)
    return suite, suite.ok


def _report_name(cfg: RunConfig) -> str:
    if cfg.command == "decompose":
        return default_report_name(cfg.command, cfg.dim_u, cfg.dim, cfg.k)
    if cfg.command == "qet-demo":
        return default_report_name(cfg.command, cfg.n, cfg.seed)
    return default_report_name(cfg.command, cfg.name, cfg.family, cfg.dim, cfg.copies)


def run_command(cfg: RunConfig, settings: dict | None = None) -> int:
    """Run one command, write its report, and return the exit status."""
    settings = settings if settings is not None else load_settings()
    try:
        cfg.validate()
        if settings.get("fixtures"):
            conventions.use_fixtures(settings["fixtures"])
        if cfg.fixtures_version and cfg.fixtures_version != conventions.fixtures_version():
            raise UsageError(f"conventions fixture is version {conventions.fixtures_version()}, "
                             f"not {cfg.fixtures_version}")
        if cfg.command == "basis":
            report, ok = _basis(cfg)
        elif cfg.command == "invariant":
            report, ok = _invariant(cfg)
        elif cfg.command == "check":
            report, ok = _check(cfg, settings)
        elif cfg.command == "decompose":
            report, ok = _decompose(cfg)
        else:
            report, ok = _qet_demo(cfg)
    except (UsageError, InvalidSpecError) as e:
        log.error("%s", e)
        return EXIT_USAGE
    except SuperInvError as e:
        log.error("%s failed: %s", cfg.command, e)
        return EXIT_FAILED

    path = cfg.out or output_path(settings["output_dir"], _report_name(cfg), cfg.format).path
    write_report(report, cfg.format, path)
    sys.stdout.write(render_text(report))
    return EXIT_OK if ok else EXIT_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = load_settings(args.config)
    level = logging.DEBUG if args.verbose else getattr(logging, str(settings["log_level"]).upper(), logging.INFO)
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args, settings)
    except UsageError as e:
        log.error("%s", e)
        return EXIT_USAGE
    if args.save_config:
        save_settings(effective_settings(cfg, settings), args.save_config)
        log.info("saved settings to %s", args.save_config)
    return run_command(cfg, settings)


if __name__ == "__main__":
    sys.exit(main())
