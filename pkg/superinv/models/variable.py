# superinv/models/variable.py
from dataclasses import dataclass, field
from typing import NamedTuple

from ..errors import InvalidSpecError

EVEN = 0
ODD = 1


class IndexSet(NamedTuple):
    """An ordered index set: `even` plain indices followed by `odd` barred ones."""
    even: int
    odd: int

    @property
    def size(self) -> int:
        return self.even + self.odd

    def positions(self) -> range:
        return range(self.size)

    def even_positions(self) -> range:
        return range(self.even)

    def odd_positions(self) -> range:
        return range(self.even, self.size)

    def parity(self, pos: int) -> int:
        if not 0 <= pos < self.size:
            raise InvalidSpecError(f"index {pos} outside index set of size {self.size}")
        return EVEN if pos < self.even else ODD

    def bar(self, pos: int) -> int:
        """Position of the barred twin of an even index (needs even == odd)."""
        if pos < self.even:
            return pos + self.even
        return pos - self.even

    def label(self, pos: int) -> str:
        if self.parity(pos) == EVEN:
            return str(pos + 1)
        return f"{pos - self.even + 1}'"

    def parse(self, text: str) -> int:
        text = text.strip()
        barred = text.endswith("'")
        try:
            num = int(text[:-1] if barred else text)
        except ValueError:
            raise InvalidSpecError(f"bad index label {text!r}") from None
        bound = self.odd if barred else self.even
        if not 1 <= num <= bound:
            raise InvalidSpecError(f"index {text!r} outside (even={self.even}, odd={self.odd})")
        return self.even + num - 1 if barred else num - 1


class Variable(NamedTuple):
    """One generator of a supercommutative polynomial ring."""
    id: int                 # dense position in the table
    parity: int             # EVEN or ODD
    kind: str               # "x" covector coordinate, "xs" vector coordinate, "g" Grassmann generator
    indices: tuple          # raw positions: (t, i) for x, (i, s) for xs, (k,) for g
    label: str              # display form, see parsers/poly_text.py


@dataclass(frozen=True)
class VarTable:
    variables: tuple[Variable, ...]
    name: str = ""
    parities: tuple[int, ...] = field(init=False, repr=False, compare=False)
    by_label: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for pos, var in enumerate(self.variables):
            if var.id != pos:
                raise InvalidSpecError(f"variable ids must be dense, got {var.id} at {pos}")
        labels = {v.label: v.id for v in self.variables}
        if len(labels) != len(self.variables):
            raise InvalidSpecError("variable labels must be unique")
        object.__setattr__(self, "parities", tuple(v.parity for v in self.variables))
        object.__setattr__(self, "by_label", labels)

    def __len__(self) -> int:
        return len(self.variables)

    def __getitem__(self, vid: int) -> Variable:
        return self.variables[vid]

    def parity(self, vid: int) -> int:
        return self.parities[vid]

    def lookup(self, label: str) -> int:
        return self.by_label[label]

    def odd_count(self) -> int:
        return sum(self.parities)

    @classmethod
    def grassmann(cls, count: int) -> "VarTable":
        """Free Grassmann generators g1..g<count>, all odd."""
        return cls(
            tuple(Variable(k, ODD, "g", (k,), f"g{k + 1}") for k in range(count)),
            name=f"grassmann{count}",
        )


# Constant-only matrices (algebra bases, forms) live over the empty table.
SCALARS = VarTable((), name="scalars")
