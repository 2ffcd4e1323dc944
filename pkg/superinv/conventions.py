# superinv/conventions.py
"""Resolved sign conventions, frozen in fixtures/conventions.json.

Every report echoes the fixture version and hash so a change of convention is
visible in the artifacts.
"""
import hashlib
import json
import logging
from functools import lru_cache
from pathlib import Path

log = logging.getLogger(__name__)

FIXTURES_PATH = Path(__file__).resolve().parent / "fixtures" / "conventions.json"

# Sign exponent rules for form inner products sum (-1)^rule xs[a,s] B[a,b] xs[b,t].
FORM_SIGN_RULES = {
    "none": lambda ps, pt, pa, pb: 0,
    "p(s)*p(row)": lambda ps, pt, pa, pb: ps * pa,
    "p(t)*p(row)": lambda ps, pt, pa, pb: pt * pa,
    "p(s)*p(col)": lambda ps, pt, pa, pb: ps * pb,
    "p(t)*p(col)": lambda ps, pt, pa, pb: pt * pb,
}

RANGES = ("s<=t", "s<t")

_active = {"path": FIXTURES_PATH}


def use_fixtures(path: str | Path | None) -> None:
    """Switch the process-wide conventions file (None restores the packaged one)."""
    _active["path"] = Path(path) if path else FIXTURES_PATH
    log.info("using conventions from %s", _active["path"])


@lru_cache(maxsize=None)
def _read(path: str) -> tuple[dict, str]:
    raw = Path(path).read_bytes()
    data = json.loads(raw)
    digest = hashlib.sha256(raw).hexdigest()[:16]
    log.debug("loaded conventions %s (version %s, hash %s)", path, data.get("version"), digest)
    return data, digest


def load_fixtures(path: str | Path | None = None) -> dict:
    data, _ = _read(str(path or _active["path"]))
    return data


def fixtures_hash(path: str | Path | None = None) -> str:
    _, digest = _read(str(path or _active["path"]))
    return digest


def fixtures_version(path: str | Path | None = None) -> str:
    return str(load_fixtures(path).get("version", ""))


def form_sign_rule(path=None):
    name = load_fixtures(path)["form_inner_sign"]
    return FORM_SIGN_RULES[name]


def q_bracket_coefficients(path=None) -> tuple[int, int]:
    qb = load_fixtures(path)["q_bracket"]
    return qb["even_odd"], qb["odd_even"]


def p_invariant_range(sign: int, path=None) -> str:
    ranges = load_fixtures(path)["p_invariant_range"]
    return ranges["positive" if sign > 0 else "negative"]


def qet_alternating(path=None) -> bool:
    """Series for (A B; B A) points, the default of supermatrix.qet."""
    return load_fixtures(path)["qet_series"] == "alternating"


def y_qet_alternating(path=None) -> bool:
    """Series for the arena's Y matrix, whose odd block moves as in (A B; -B A)."""
    return load_fixtures(path)["y_qet_series"] == "alternating"
