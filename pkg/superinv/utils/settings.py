# superinv/utils/settings.py
import json
import logging
import os
from pathlib import Path

log = logging.getLogger(__name__)


# Top directory = folder that contains the `superinv/` package (and super_invariants.py)
def _top_dir() -> Path:
    # This file is superinv/utils/settings.py → parents[2] is the folder above superinv/
    return Path(__file__).resolve().parents[2]


APP_SETTINGS_FILE = _top_dir() / "superinv_settings.json"
OUTPUT_DIR_ENV = "SUPERINV_OUTPUT_DIR"

DEFAULT_SETTINGS = {
    "max_degree": 6,                   # degree cap for check runs
    "seed": 20240229,                  # single source of randomness for sample suites
    "output_dir": "./superinv_out",    # reports land here unless --out is given
    "format": "json",                  # "json", "csv" or "text"
    "log_level": "INFO",

    # Workers
    "workers": 1,                      # >1 images monomials in a process pool
    "chunk_size": 256,                 # monomials per worker task

    # Sample suites
    "samples": 100,
    "fixtures": "",                    # conventions fixture; empty = the packaged one
}


def load_settings(path: str | Path | None = None) -> dict:
    """Defaults merged with the settings file; a broken file falls back to defaults."""
    p = Path(path) if path else APP_SETTINGS_FILE
    data = {}
    if p.exists():
        try:
            data = json.loads(p.read_text())
        except (OSError, ValueError) as e:
            log.warning("ignoring unreadable settings file %s: %s", p, e)
            data = {}
    elif path:
        log.warning("settings file %s does not exist, using defaults", p)
    settings = {**DEFAULT_SETTINGS, **data}
    if os.environ.get(OUTPUT_DIR_ENV):
        settings["output_dir"] = os.environ[OUTPUT_DIR_ENV]
    return settings


def save_settings(data: dict, path: str | Path | None = None) -> None:
    p = Path(path) if path else APP_SETTINGS_FILE
    p.write_text(json.dumps(data, indent=2))
