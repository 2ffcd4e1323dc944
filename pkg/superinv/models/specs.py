# superinv/models/specs.py
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import InvalidSpecError, UsageError

FAMILIES = ("gl", "sl", "osp", "pe", "spe", "q", "sq")
COMMANDS = ("basis", "invariant", "check", "decompose", "qet-demo")
FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int                  # dim V_0
    m: int                  # dim V_1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpecError(f"unknown family {self.family!r} (choose from {', '.join(FAMILIES)})")
        if self.n < 0 or self.m < 0 or self.n + self.m == 0:
            raise InvalidSpecError(f"invalid dims ({self.n}|{self.m})")
        if self.family == "osp" and self.m % 2:
            raise InvalidSpecError("osp(n|m) needs m even")
        if self.family in ("pe", "spe", "q", "sq") and self.m != self.n:
            raise InvalidSpecError(f"{self.family}(n) needs dims (n|n)")

    @property
    def dims(self) -> tuple[int, int]:
        return (self.n, self.m)

    def __str__(self) -> str:
        if self.family in ("pe", "spe", "q", "sq"):
            return f"{self.family}({self.n})"
        return f"{self.family}({self.n}|{self.m})"


@dataclass(frozen=True)
class CopySpec:
    k: int = 0              # copies of V      (even covectors, coordinates x_ti)
    l: int = 0              # copies of Pi(V)  (odd covectors)
    p: int = 0              # copies of V*     (even vectors, coordinates x*_is)
    q: int = 0              # copies of Pi(V)* (odd vectors)

    def __post_init__(self):
        if min(self.k, self.l, self.p, self.q) < 0:
            raise InvalidSpecError("copy counts must be non-negative")
        if self.k + self.l + self.p + self.q == 0:
            raise InvalidSpecError("arena needs at least one copy")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.k, self.l, self.p, self.q)


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    dim: tuple[int, int] | None = None
    copies: tuple[int, int, int, int] | None = None
    max_degree: int = 6
    format: str = "json"
    out: Path | None = None
    seed: int = 0
    fixtures_version: str | None = None
    workers: int = 1
    omit: tuple[str, ...] = ()
    no_polarize: bool = False
    # invariant command
    name: str | None = None
    params: dict = field(default_factory=dict)
    # decompose command
    dim_u: tuple[int, int] | None = None
    k: int | None = None
    # qet-demo
    n: int = 1
    samples: int = 100

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.max_degree < 0:
            raise UsageError("--max-degree must be >= 0")
        if self.workers < 1:
            raise UsageError("--workers must be >= 1")
        if self.command in ("basis", "invariant", "check"):
            if self.family is None and self.command != "invariant":
                raise UsageError(f"{self.command} needs --family")
            if self.dim is None:
                raise UsageError(f"{self.command} needs --dim n,m")
        if self.command in ("invariant", "check") and self.copies is None:
            raise UsageError(f"{self.command} needs --copies k,l,p,q")
        if self.command == "invariant" and not self.name:
            raise UsageError("invariant needs --name")
        if self.command == "decompose" and (self.dim_u is None or self.dim is None or self.k is None):
            raise UsageError("decompose needs --dimU, --dimV and --k")
        if self.command == "qet-demo" and (self.n < 1 or self.samples < 1):
            raise UsageError("qet-demo needs --n >= 1 and --samples >= 1")
        try:
            if self.family is not None and self.dim is not None:
                FamilySpec(self.family, *self.dim)
            if self.copies is not None:
                CopySpec(*self.copies)
        except InvalidSpecError as e:
            raise UsageError(str(e)) from None
