# superinv/action.py
"""The arena A^{p,q}_{k,l} and superderivations acting on it.

Conventions (recorded in fixtures/conventions.json), for X in gl(V):

    X . x[t,i]  =  (-1)^{p(X)p(t)}  sum_j X[j,i] x[t,j]
    X . xs[i,s] = -(-1)^{p(X)p(i)}  sum_j X[i,j] xs[j,s]

The second line is the unique choice making every scalar product
sum_i x[t,i] xs[i,s] invariant. Polarizations E_{t't} (side U) rename the copy
index t -> t' on x; E_{s's} (side W) rename s -> s' on xs with the sign
(-1)^{p(E)p(i)} picked up when passing e_i.
"""
import logging
from dataclasses import dataclass, field

from .errors import InvalidSpecError, NonHomogeneousError, ParityError
from .models.specs import CopySpec
from .models.variable import IndexSet, Variable, VarTable
from .superpoly import Polynomial, add, mul
from .supermatrix import SuperMatrix

log = logging.getLogger(__name__)

MultiDegree = tuple  # per-copy degrees, covector copies T first, then vector copies S


@dataclass(frozen=True)
class Arena:
    dim_v: tuple[int, int]
    copies: CopySpec
    T: IndexSet             # covector copies: k even, l odd
    S: IndexSet             # vector copies: p even, q odd
    I: IndexSet             # basis of V: n even, m odd
    table: VarTable
    x_ids: dict = field(repr=False, compare=False)
    xs_ids: dict = field(repr=False, compare=False)
    copy_of: tuple = field(repr=False, compare=False)   # variable id -> position in T+S

    def x(self, t: int, i: int) -> Polynomial:
        return Polynomial.variable(self.table, self.x_ids[(t, i)])

    def xs(self, i: int, s: int) -> Polynomial:
        return Polynomial.variable(self.table, self.xs_ids[(i, s)])

    @property
    def n_copies(self) -> int:
        return self.T.size + self.S.size

    def variables_of_copy(self, c: int) -> list[int]:
        return [vid for vid, cc in enumerate(self.copy_of) if cc == c]

    def t_copy(self, t: int) -> int:
        return t

    def s_copy(self, s: int) -> int:
        return self.T.size + s


def build_arena(dim_v, copies) -> Arena:
    n, m = dim_v
    if n < 0 or m < 0 or n + m == 0:
        raise InvalidSpecError(f"invalid dimV ({n}|{m})")
    if not isinstance(copies, CopySpec):
        copies = CopySpec(*copies)
    T, S, I = IndexSet(copies.k, copies.l), IndexSet(copies.p, copies.q), IndexSet(n, m)
    variables, x_ids, xs_ids, copy_of = [], {}, {}, []
    for t in T.positions():
        for i in I.positions():
            vid = len(variables)
            variables.append(Variable(vid, (T.parity(t) + I.parity(i)) & 1, "x", (t, i),
                                      f"x[{T.label(t)},{I.label(i)}]"))
            x_ids[(t, i)] = vid
            copy_of.append(t)
    for s in S.positions():
        for i in I.positions():
            vid = len(variables)
            variables.append(Variable(vid, (I.parity(i) + S.parity(s)) & 1, "xs", (i, s),
                                      f"xs[{I.label(i)},{S.label(s)}]"))
            xs_ids[(i, s)] = vid
            copy_of.append(T.size + s)
    table = VarTable(tuple(variables), name=f"arena{n}|{m}:{copies.as_tuple()}")
    log.debug("built arena with %d variables", len(variables))
    return Arena((n, m), copies, T, S, I, table, x_ids, xs_ids, tuple(copy_of))


@dataclass(frozen=True)
class Derivation:
    """Superderivation given by its images on generators (missing ids map to 0)."""
    parity: int
    images: dict
    table: VarTable
    name: str = ""

    def __post_init__(self):
        clean = {}
        for vid, img in self.images.items():
            if img.is_zero():
                continue
            if img.table != self.table:
                raise InvalidSpecError("derivation image over a foreign table")
            if img.parity() != (self.table.parity(vid) + self.parity) & 1:
                raise ParityError(f"image of {self.table[vid].label} has the wrong parity")
            clean[vid] = img
        object.__setattr__(self, "images", clean)

    def apply_monomial(self, mono) -> Polynomial:
        table = self.table
        par = table.parities
        acc = Polynomial(table)
        prefix_parity = 0
        for idx, (vid, e) in enumerate(mono):
            img = self.images.get(vid)
            if img is not None:
                left = Polynomial.monomial(table, mono[:idx])
                rest = (((vid, e - 1),) if e > 1 else ()) + mono[idx + 1:]
                term = mul(mul(left, img), Polynomial.monomial(table, rest))
                sign = -1 if (self.parity * prefix_parity) & 1 else 1
                acc = add(acc, term, sign * e)
            prefix_parity += par[vid] * e
        return acc

    def apply(self, f: Polynomial) -> Polynomial:
        acc = Polynomial(self.table)
        for mono, coef in f.terms.items():
            acc = add(acc, self.apply_monomial(mono), coef)
        return acc

    __call__ = apply

    def bracket(self, other: "Derivation") -> "Derivation":
        """Supercommutator [D1, D2] = D1 D2 - (-1)^{p1 p2} D2 D1, as a derivation."""
        sign = 1 if (self.parity * other.parity) & 1 else -1
        images = {}
        for vid in set(self.images) | set(other.images):
            v = Polynomial.variable(self.table, vid)
            images[vid] = add(self.apply(other.apply(v)), other.apply(self.apply(v)), sign)
        return Derivation((self.parity + other.parity) & 1, images, self.table,
                          f"[{self.name},{other.name}]")

    def images_equal(self, other: "Derivation") -> bool:
        return self.images == other.images

    def is_zero(self) -> bool:
        return not self.images


def g_derivation(arena: Arena, x: SuperMatrix, name: str = "") -> Derivation:
    n, m = arena.dim_v
    if x.size != n + m:
        raise InvalidSpecError(f"matrix of size {x.size} does not act on V=({n}|{m})")
    if not x.is_constant():
        raise InvalidSpecError("g_derivation needs a constant matrix")
    pi = x.parity()
    c = [[e.constant_term() for e in row] for row in x.entries]
    table, I = arena.table, arena.I
    images = {}
    for t in arena.T.positions():
        sign = -1 if (pi * arena.T.parity(t)) & 1 else 1
        for i in I.positions():
            terms = {((arena.x_ids[(t, j)], 1),): sign * c[j][i] for j in I.positions() if c[j][i]}
            images[arena.x_ids[(t, i)]] = Polynomial(table, terms)
    for s in arena.S.positions():
        for i in I.positions():
            sign = 1 if (pi * I.parity(i)) & 1 else -1
            terms = {((arena.xs_ids[(j, s)], 1),): sign * c[i][j] for j in I.positions() if c[i][j]}
            images[arena.xs_ids[(i, s)]] = Polynomial(table, terms)
    return Derivation(pi, images, table, name or "X")


def polarization(arena: Arena, side: str, pair: tuple[int, int]) -> Derivation:
    """First-order polarization E_{target,source} on copies of side U (x) or W (xs)."""
    target, source = pair
    table, I = arena.table, arena.I
    images = {}
    if side == "U":
        idx = arena.T
        pi = (idx.parity(target) + idx.parity(source)) & 1
        for i in I.positions():
            images[arena.x_ids[(source, i)]] = arena.x(target, i)
        label = f"U{idx.label(target)}<-{idx.label(source)}"
    elif side == "W":
        idx = arena.S
        pi = (idx.parity(target) + idx.parity(source)) & 1
        for i in I.positions():
            sign = -1 if (pi * I.parity(i)) & 1 else 1
            images[arena.xs_ids[(i, source)]] = arena.xs(i, target).scale(sign)
        label = f"W{idx.label(target)}<-{idx.label(source)}"
    else:
        raise InvalidSpecError(f"polarization side must be 'U' or 'W', got {side!r}")
    return Derivation(pi, images, table, label)


def all_polarizations(arena: Arena) -> list[Derivation]:
    out = []
    for side, idx in (("U", arena.T), ("W", arena.S)):
        for target in idx.positions():
            for source in idx.positions():
                out.append(polarization(arena, side, (target, source)))
    return out


def compose_derivations(derivations, f: Polynomial) -> Polynomial:
    """Apply the derivations left to right: the first element acts first."""
    for d in derivations:
        f = d.apply(f)
    return f


def monomial_multidegree(arena: Arena, mono) -> MultiDegree:
    deg = [0] * arena.n_copies
    for vid, e in mono:
        deg[arena.copy_of[vid]] += e
    return tuple(deg)


def multidegree(arena: Arena, f: Polynomial) -> MultiDegree:
    degrees = {monomial_multidegree(arena, mono) for mono in f.terms}
    if len(degrees) > 1:
        raise NonHomogeneousError("polynomial is not homogeneous per copy")
    return degrees.pop() if degrees else (0,) * arena.n_copies
