# superinv/solver.py
"""Invariant spaces by degree, polarization closure of generator sets, graded reports.

Everything is sliced by multidegree: the algebra action and the diagonal
polarizations preserve the degree in every copy, so both the invariant space
and the closure split into weight blocks.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations, product as cartesian

from . import conventions
from .action import Arena, Derivation, all_polarizations, build_arena, g_derivation, monomial_multidegree
from .algebras import basis_of
from .errors import InvalidSpecError
from .invariants import basic_set
from .linalg import nullspace, rank, row_echelon
from .models.report import DegreeRow, GradedReport
from .models.specs import CopySpec, FamilySpec
from .superpoly import ONE_MONOMIAL, Polynomial, monomial_key, mul
from .workers.images import ImageWorker

log = logging.getLogger(__name__)


def compositions(total: int, parts: int) -> list[tuple]:
    """Weak compositions of total into parts, in lexicographically decreasing order."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev, comp = -1, []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(total + parts - 2 - prev)
        out.append(tuple(comp))
    return sorted(out, reverse=True)


def weights(arena: Arena, degree: int) -> list[tuple]:
    return compositions(degree, arena.n_copies)


def _monomials_in(table, var_ids: list[int], degree: int) -> list:
    """Monomials of the given degree in var_ids (odd exponents at most 1)."""
    if degree == 0:
        return [ONE_MONOMIAL]
    if not var_ids:
        return []
    head, rest = var_ids[0], var_ids[1:]
    top = 1 if table.parity(head) else degree
    out = []
    for e in range(min(top, degree), -1, -1):
        for tail in _monomials_in(table, rest, degree - e):
            out.append((((head, e),) if e else ()) + tail)
    return out


def monomial_basis(arena: Arena, degree: int, weight: tuple | None = None) -> list:
    """All monomials of the degree (and weight), in canonical order."""
    if degree < 0:
        return []
    if weight is None:
        monos = [m for w in weights(arena, degree) for m in monomial_basis(arena, degree, w)]
        return sorted(monos, key=monomial_key)
    if sum(weight) != degree:
        return []
    per_copy = [_monomials_in(arena.table, arena.variables_of_copy(c), d) for c, d in enumerate(weight)]
    monos = [tuple(sorted(pair for part in combo for pair in part)) for combo in cartesian(*per_copy)]
    return sorted(monos, key=monomial_key)


def _default_worker(worker):
    return worker if worker is not None else ImageWorker({"workers": 1})


def _block_invariants(arena: Arena, derivations, weight, worker) -> list[Polynomial]:
    monos = monomial_basis(arena, sum(weight), weight)
    if not monos:
        return []
    if not derivations:
        return [Polynomial.monomial(arena.table, m) for m in monos]
    images = worker.run(derivations, monos)
    rows_by_key: dict = {}
    for col, per_derivation in enumerate(images):
        for d, img in enumerate(per_derivation):
            for mono, coef in img.terms.items():
                rows_by_key.setdefault((d, monomial_key(mono)), {})[col] = coef
    rows = [rows_by_key[k] for k in sorted(rows_by_key)]
    kernel = nullspace(rows, len(monos))
    log.debug("weight %s: %d monomials, %d equations, %d invariants", weight, len(monos), len(rows), len(kernel))
    return [Polynomial(arena.table, {monos[c]: v for c, v in vec.items()}) for vec in kernel]


def invariant_space(arena: Arena, derivations, degree: int, weight: tuple | None = None,
                    worker=None) -> tuple[int, list[Polynomial]]:
    """Exact basis of the polynomials of the degree killed by every derivation."""
    worker = _default_worker(worker)
    blocks = [weight] if weight is not None else weights(arena, degree)
    basis = []
    for w in blocks:
        basis.extend(_block_invariants(arena, derivations, w, worker))
    return len(basis), basis


def weight_components(arena: Arena, f: Polynomial) -> dict:
    parts: dict = {}
    for mono, coef in f.terms.items():
        parts.setdefault(monomial_multidegree(arena, mono), {})[mono] = coef
    return {w: Polynomial(arena.table, terms) for w, terms in parts.items()}


@dataclass
class Subspace:
    """Span of weight-homogeneous polynomials, kept as a reduced echelon basis per weight."""
    arena: Arena
    blocks: dict = field(default_factory=dict)     # weight -> list[Polynomial]
    _columns: dict = field(default_factory=dict, repr=False)

    def _index(self, weight) -> tuple[list, dict]:
        if weight not in self._columns:
            monos = monomial_basis(self.arena, sum(weight), weight)
            self._columns[weight] = (monos, {m: c for c, m in enumerate(monos)})
        return self._columns[weight]

    def add(self, polys) -> list:
        """Add polynomials (split into weight components); return the weights that grew."""
        pending: dict = {}
        for f in polys:
            for w, part in weight_components(self.arena, f).items():
                pending.setdefault(w, []).append(part)
        grown = []
        for w in sorted(pending):
            monos, index = self._index(w)
            old = self.blocks.get(w, [])
            rows = [{index[m]: c for m, c in f.terms.items()} for f in old + pending[w]]
            echelon, pivots = row_echelon(rows, len(monos))
            if len(pivots) > len(old):
                self.blocks[w] = [Polynomial(self.arena.table, {monos[c]: v for c, v in row.items()})
                                  for row in echelon]
                grown.append(w)
        return grown

    def dimension(self, degree: int | None = None) -> int:
        return sum(len(b) for w, b in self.blocks.items() if degree is None or sum(w) == degree)

    def elements(self, degree: int | None = None) -> list[Polynomial]:
        return [f for w in sorted(self.blocks) if degree is None or sum(w) == degree
                for f in self.blocks[w]]


def polarization_fixpoint(arena: Arena, space: Subspace, polarizations) -> Subspace:
    """Grow space until every polarization maps it into itself."""
    frontier = sorted(space.blocks)
    rounds = 0
    while frontier:
        rounds += 1
        images = [d.apply(f) for w in frontier for f in space.blocks[w] for d in polarizations]
        frontier = space.add(img for img in images if not img.is_zero())
    log.debug("polarization fixpoint after %d rounds", rounds)
    return space


def polarization_closure(arena: Arena, generators, max_degree: int, polarize: bool = True) -> Subspace:
    """The graded subalgebra generated by the polarization images of the generators, up to max_degree."""
    gens = Subspace(arena)
    gens.add(f for f in generators if not f.is_zero() and f.degree() <= max_degree)
    if polarize:
        polarization_fixpoint(arena, gens, all_polarizations(arena))
    closure = Subspace(arena)
    closure.add([Polynomial.constant(arena.table, 1)])
    for d in range(1, max_degree + 1):
        candidates = list(gens.elements(d))
        for e in range(1, d):
            lower = closure.elements(d - e)
            for g in gens.elements(e):
                candidates.extend(mul(g, c) for c in lower)
        closure.add(c for c in candidates if not c.is_zero())
    return closure


def span_dimension(polys) -> int:
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return 0
    monos = sorted({m for f in polys for m in f.terms}, key=monomial_key)
    index = {m: c for c, m in enumerate(monos)}
    return rank([{index[m]: c for m, c in f.terms.items()} for f in polys], len(monos))


def family_derivations(arena: Arena, spec: FamilySpec) -> list[Derivation]:
    return [g_derivation(arena, x, name=f"{spec.family}[{j}]") for j, x in enumerate(basis_of(spec))]


def is_invariant(f: Polynomial, derivations) -> bool:
    return all(d.apply(f).is_zero() for d in derivations)


def find_witness(f: Polynomial, derivations) -> Derivation | None:
    """First derivation that does not annihilate f."""
    for d in derivations:
        if not d.apply(f).is_zero():
            return d
    return None


def minimal_copies(spec: FamilySpec) -> tuple[int, int, int, int]:
    """Fewest (k, l, p, q) copies on which a basic set is checked: k, p >= n and l, q >= m."""
    n, m = spec.dims
    if spec.family in ("osp", "pe", "spe"):
        return 0, 0, n, m
    if spec.family in ("q", "sq"):
        return n, 0, n, 0
    return n, m, n, m


def check_reduction(spec: FamilySpec, copies: CopySpec) -> None:
    if spec.family in ("osp", "pe", "spe") and (copies.k or copies.l):
        raise InvalidSpecError(f"{spec.family} checks run on arenas A^(p,q) without covector copies")
    if spec.family in ("q", "sq") and (copies.q or copies.l):
        raise InvalidSpecError(f"{spec.family} checks run on arenas without odd copies")
    short = [f"{name}={have} < {want}"
             for name, have, want in zip("klpq", copies.as_tuple(), minimal_copies(spec)) if have < want]
    if short:
        raise InvalidSpecError(f"unsupported config for {spec}: {', '.join(short)}")


def verify_basic_set(spec: FamilySpec, copies: CopySpec, max_degree: int, omit=(),
                     polarize: bool = True, worker=None) -> GradedReport:
    """Compare the closure of the family's basic set with the invariant space, degree by degree."""
    check_reduction(spec, copies)
    worker = _default_worker(worker)
    arena = build_arena(spec.dims, copies)
    derivations = family_derivations(arena, spec)
    gens, notes = basic_set(arena, spec, max_degree, omit)
    for inv in gens:
        witness = find_witness(inv.value, derivations)
        if witness is not None:
            notes.append(f"{inv.name} is not invariant: {witness.name} acts nonzero")
    if not polarize:
        notes.append("closure without polarization operators")
    closure = polarization_closure(arena, [inv.value for inv in gens], max_degree, polarize)
    report = GradedReport(
        family=spec.family,
        dimV=spec.dims,
        copies=copies.as_tuple(),
        max_degree=max_degree,
        fixtures_version=conventions.fixtures_version(),
        fixtures_hash=conventions.fixtures_hash(),
        generators=[inv.name for inv in gens],
        notes=notes,
    )
    for d in range(max_degree + 1):
        dim_inv, _ = invariant_space(arena, derivations, d, worker=worker)
        row = DegreeRow(d, dim_inv, closure.dimension(d))
        if row.dim_closure > row.dim_invariants:
            notes.append(f"degree {d}: closure exceeds the invariants")
        log.info("%s %s degree %d: invariants %d closure %d %s", spec, copies.as_tuple(), d,
                 row.dim_invariants, row.dim_closure, "pass" if row.passed else "FAIL")
        report.rows.append(row)
    return report
