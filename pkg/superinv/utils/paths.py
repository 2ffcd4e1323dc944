# superinv/utils/paths.py
import os
import re
import tempfile
from pathlib import Path
from typing import NamedTuple

EXTENSIONS = {"json": ".json", "csv": ".csv", "text": ".txt"}


def safe_name(s: str) -> str:
    s = re.sub(r'[\\/:*?"<>|()\[\],\s]+', "_", s).strip("_")
    return s or "report"


class ReportTarget(NamedTuple):
    """Where one report goes."""
    path: Path                # final file path
    fmt: str                  # "json", "csv" or "text"


def default_report_name(command: str, *parts) -> str:
    return safe_name("_".join([command] + [str(p) for p in parts if p not in (None, "")]))


def output_path(output_dir: str | Path, name: str, fmt: str) -> ReportTarget:
    """Report path inside output_dir (created on demand)."""
    directory = Path(output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    return ReportTarget(directory / f"{safe_name(name)}{EXTENSIONS[fmt]}", fmt)


def atomic_write(path: Path, text: str) -> None:
    """Write text next to path and rename it into place, so no partial file is ever visible.

    Args:
        path: Final destination.
        text: Complete file contents.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
