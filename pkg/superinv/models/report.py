# superinv/models/report.py
from dataclasses import asdict, dataclass, field


@dataclass
class DegreeRow:
    degree: int
    dim_invariants: int
    dim_closure: int

    @property
    def passed(self) -> bool:
        return self.dim_closure == self.dim_invariants

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "dim_invariants": self.dim_invariants,
            "dim_closure": self.dim_closure,
            "pass": self.passed,
        }


@dataclass
class GradedReport:
    family: str
    dimV: tuple[int, int]
    copies: tuple[int, int, int, int]
    max_degree: int
    rows: list[DegreeRow] = field(default_factory=list)
    fixtures_version: str = ""
    fixtures_hash: str = ""
    generators: list[str] = field(default_factory=list)   # names of the basic-set members used
    notes: list[str] = field(default_factory=list)        # excluded members, warnings

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def failing_degrees(self) -> list[int]:
        return [r.degree for r in self.rows if not r.passed]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "dimV": list(self.dimV),
            "copies": list(self.copies),
            "max_degree": self.max_degree,
            "rows": [r.to_dict() for r in self.rows],
            "fixtures_version": self.fixtures_version,
            "fixtures_hash": self.fixtures_hash,
            "generators": list(self.generators),
            "notes": list(self.notes),
        }


@dataclass
class CauchyRow:
    partition: tuple[int, ...]
    dim_u: int              # super SSYT count over the alphabet of U
    dim_v: int              # super SSYT count over the alphabet of V

    @property
    def product(self) -> int:
        return self.dim_u * self.dim_v


@dataclass
class CauchyReport:
    dim_u: tuple[int, int]
    dim_v: tuple[int, int]
    k: int
    lhs: int                # dim S^k(U (x) V) by monomial count
    rows: list[CauchyRow] = field(default_factory=list)

    @property
    def rhs(self) -> int:
        return sum(r.product for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "dimU": list(self.dim_u),
            "dimV": list(self.dim_v),
            "k": self.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "ok": self.ok,
            "rows": [dict(asdict(r), product=r.product, partition=list(r.partition)) for r in self.rows],
        }


@dataclass
class SampleReport:
    """Outcome of one seeded Grassmann-sample property."""
    name: str
    samples: int
    failures: int = 0
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {"name": self.name, "samples": self.samples, "failures": self.failures,
                "ok": self.ok, "witness": self.witness}


@dataclass
class SampleSuite:
    n: int
    seed: int
    reports: list[SampleReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_dict(self) -> dict:
        return {"n": self.n, "seed": self.seed, "ok": self.ok,
                "samples": [r.to_dict() for r in self.reports]}


@dataclass
class BasisReport:
    family: str
    dimV: tuple[int, int]
    elements: list[tuple[int, list[list[str]]]] = field(default_factory=list)  # (parity, rows)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "dimV": list(self.dimV),
            "dimension": len(self.elements),
            "elements": [{"parity": "odd" if p else "even", "rows": rows} for p, rows in self.elements],
        }


@dataclass
class InvariantReport:
    name: str
    dimV: tuple[int, int]
    copies: tuple[int, int, int, int]
    text: str                           # canonical_text of the value
    degree: int
    multidegree: list[int]
    parity: str
    family: str | None = None
    invariant: bool | None = None       # annihilated by the family basis, when a family is given
    witness: str = ""                   # first basis element acting nonzero

    @property
    def ok(self) -> bool:
        return self.invariant is not False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dimV": list(self.dimV),
            "copies": list(self.copies),
            "degree": self.degree,
            "multidegree": list(self.multidegree),
            "parity": self.parity,
            "family": self.family,
            "invariant": self.invariant,
            "witness": self.witness,
            "value": self.text,
        }
