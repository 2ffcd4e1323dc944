# superinv/invariants.py
"""Constructors for the named invariants of the arena.

Index arguments are positions in the arena's index sets (even copies first,
then barred ones); `IndexSet.parse` turns labels such as ``"1'"`` into
positions.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from . import conventions
from .action import Arena, g_derivation, multidegree
from .algebras import basis_of, form_matrix
from .combinatorics import strict_partitions
from .errors import (
    ConventionError,
    InvalidSpecError,
    NotDivisibleError,
    PolynomialityError,
    StructuralError,
)
from .linalg import nullspace
from .models.specs import FamilySpec
from .superpoly import LocalizedElement, Polynomial, add, mul, product
from .supermatrix import QBlockMatrix, det_even, qet, qtr

log = logging.getLogger(__name__)

BLOCK_DETS = ("delta", "delta_star", "omega", "omega_star")
PI_PRODUCTS = ("pi10", "pi10_star", "pi_plus", "pi_minus")
EXTRAS = ("f", "Omega", "p", "q_lambda")   # names accepted by basic_set(omit=...)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidSpecError(message)


# ---- pairings ---------------------------------------------------------------

def scalar_product(arena: Arena, t: int, s: int) -> Polynomial:
    """(v_t*, v_s) = sum_i x[t,i] xs[i,s]."""
    _check(0 <= t < arena.T.size and 0 <= s < arena.S.size, f"bad copy pair ({t},{s})")
    return sum((mul(arena.x(t, i), arena.xs(i, s)) for i in arena.I.positions()),
               Polynomial(arena.table))


def _q_bracket_parts(arena: Arena, t: int, s: int) -> tuple[Polynomial, Polynomial]:
    n, m = arena.dim_v
    _check(n == m, "q-brackets need dimV (n|n)")
    _check(t in arena.T.even_positions() and s in arena.S.even_positions(),
           "q-brackets pair even copies only")
    I = arena.I
    zero = Polynomial(arena.table)
    even_odd = sum((mul(arena.x(t, i), arena.xs(I.bar(i), s)) for i in I.even_positions()), zero)
    odd_even = sum((mul(arena.x(t, I.bar(i)), arena.xs(i, s)) for i in I.even_positions()), zero)
    return even_odd, odd_even


def q_bracket(arena: Arena, t: int, s: int, coefficients=None) -> Polynomial:
    """[v_t*, v_s] = sum_i (c1 x[t,i] xs[i',s] + c2 x[t,i'] xs[i,s])."""
    c1, c2 = coefficients or conventions.q_bracket_coefficients()
    even_odd, odd_even = _q_bracket_parts(arena, t, s)
    return add(even_odd.scale(c1), odd_even, c2)


def _images_rows(derivations, candidates: list[Polynomial]) -> list[dict]:
    """Linear system whose kernel is the invariant span of the candidates."""
    rows = []
    for d in derivations:
        images = [d.apply(f) for f in candidates]
        monos = sorted({mono for img in images for mono in img.terms})
        for mono in monos:
            row = {c: img.terms[mono] for c, img in enumerate(images) if mono in img.terms}
            if row:
                rows.append(row)
    return rows


def resolve_q_bracket(arena: Arena) -> tuple[Fraction, Fraction]:
    """Solve the two-term sign ansatz against q(n); the first canonical term gets +1."""
    n = arena.dim_v[0]
    derivations = [g_derivation(arena, x) for x in basis_of(FamilySpec("q", n, n))]
    even_odd, odd_even = _q_bracket_parts(arena, 0, 0)
    kernel = nullspace(_images_rows(derivations, [even_odd, odd_even]), 2)
    if len(kernel) != 1:
        raise ConventionError(f"q-bracket ansatz has a {len(kernel)}-dimensional solution space")
    vec = kernel[0]
    c1, c2 = vec.get(0, Fraction(0)), vec.get(1, Fraction(0))
    first_coef = add(even_odd.scale(c1), odd_even, c2).terms_in_order()[0][1]
    c1, c2 = c1 / first_coef, c2 / first_coef
    log.info("resolved q-bracket coefficients (%s, %s)", c1, c2)
    return c1, c2


def form_inner(arena: Arena, family: str, s: int, t: int, rule: str | None = None) -> Polynomial:
    """(v_s, v_t) = sum_{a,b} (-1)^sigma xs[a,s] B[a,b] xs[b,t] for the osp or pe form."""
    _check(family in ("osp", "pe", "spe"), f"{family} has no bilinear form")
    _check(arena.T.size == 0, "form inner products live on arenas without covector copies")
    _check(0 <= s < arena.S.size and 0 <= t < arena.S.size, f"bad copy pair ({s},{t})")
    n, m = arena.dim_v
    b = form_matrix(FamilySpec(family, n, m)).matrix
    sign_rule = conventions.FORM_SIGN_RULES[rule] if rule else conventions.form_sign_rule()
    I, S = arena.I, arena.S
    ps, pt = S.parity(s), S.parity(t)
    out = Polynomial(arena.table)
    for a in I.positions():
        for c in I.positions():
            coef = b[a, c].constant_term()
            if not coef:
                continue
            sign = -1 if sign_rule(ps, pt, I.parity(a), I.parity(c)) & 1 else 1
            out = add(out, mul(arena.xs(a, s), arena.xs(c, t)), sign * coef)
    return out


def resolve_form_sign(arena: Arena, family: str) -> str:
    """First sign rule under which every form inner product of the arena is invariant."""
    n, m = arena.dim_v
    derivations = [g_derivation(arena, x) for x in basis_of(FamilySpec(family, n, m))]
    pairs = [(s, t) for s in arena.S.positions() for t in arena.S.positions() if s <= t]
    for name in conventions.FORM_SIGN_RULES:
        values = [form_inner(arena, family, s, t, rule=name) for s, t in pairs]
        if all(d.apply(v).is_zero() for d in derivations for v in values):
            log.info("form sign rule for %s: %s", family, name)
            return name
    raise ConventionError(f"no form sign rule makes the {family} inner products invariant")


# ---- determinants and products ---------------------------------------------

def block_det(arena: Arena, which: str) -> Polynomial:
    n, m = arena.dim_v
    I, T, S = arena.I, arena.T, arena.S
    if which == "delta":
        _check(T.even >= n, "delta needs n even covector copies")
        grid = [[arena.x(t, i) for i in I.even_positions()] for t in range(n)]
    elif which == "delta_star":
        _check(S.even >= n, "delta_star needs n even vector copies")
        grid = [[arena.xs(i, s) for s in range(n)] for i in I.even_positions()]
    elif which == "omega":
        _check(T.odd >= m, "omega needs m odd covector copies")
        grid = [[arena.x(T.even + t, i) for i in I.odd_positions()] for t in range(m)]
    elif which == "omega_star":
        _check(S.odd >= m, "omega_star needs m odd vector copies")
        grid = [[arena.xs(i, S.even + s) for s in range(m)] for i in I.odd_positions()]
    else:
        raise InvalidSpecError(f"unknown block determinant {which!r}")
    return det_even(grid, arena.table)


def _pe_products(arena: Arena, copies, strict: bool) -> Polynomial:
    copies = list(copies)
    factors = [form_inner(arena, "pe", s, t)
               for a, s in enumerate(copies) for t in copies[a + (1 if strict else 0):]]
    return product(arena.table, factors)


def pi_product(arena: Arena, which: str) -> Polynomial:
    n, m = arena.dim_v
    I, T, S = arena.I, arena.T, arena.S
    if which == "pi10":
        _check(T.odd >= m, "pi10 needs m odd covector copies")
        factors = [arena.x(t, i) for t in range(T.even, T.even + m) for i in I.even_positions()]
    elif which == "pi10_star":
        _check(S.even >= n, "pi10_star needs n even vector copies")
        factors = [arena.xs(i, s) for i in I.odd_positions() for s in range(n)]
    elif which == "pi_plus":
        _check(S.even >= n, "pi_plus needs n even vector copies")
        strict = conventions.p_invariant_range(+1) == "s<t"
        return _pe_products(arena, range(n), strict)
    elif which == "pi_minus":
        _check(S.odd >= n, "pi_minus needs n odd vector copies")
        strict = conventions.p_invariant_range(-1) == "s<t"
        return _pe_products(arena, range(S.even, S.even + n), strict)
    else:
        raise InvalidSpecError(f"unknown product {which!r}")
    return product(arena.table, factors)


# ---- sl, spe, osp extras ----------------------------------------------------

def f_invariant(arena: Arena, k: int) -> Polynomial:
    """f_k = Delta*^k omega^k prod (v_t'*, v_s); f_-k = Delta^k omega*^k prod (v_t*, v_s')."""
    _check(k != 0, "f_k needs k != 0")
    n, m = arena.dim_v
    T, S = arena.T, arena.S
    _check(T.even >= n and T.odd >= m and S.even >= n and S.odd >= m,
           f"f_k needs the arena A^({n},{m})_({n},{m})")
    if k > 0:
        head = mul(block_det(arena, "delta_star") ** k, block_det(arena, "omega") ** k)
        pairs = [(t, s) for t in range(T.even, T.even + m) for s in range(n)]
    else:
        head = mul(block_det(arena, "delta") ** -k, block_det(arena, "omega_star") ** -k)
        pairs = [(t, s) for t in range(n) for s in range(S.even, S.even + m)]
    return mul(head, product(arena.table, [scalar_product(arena, t, s) for t, s in pairs]))


def p_invariant(arena: Arena, k: int) -> Polynomial:
    """p_k = Delta*^k Pi+; p_-k = omega*^k Pi-."""
    _check(k != 0, "p_k needs k != 0")
    n, m = arena.dim_v
    _check(n == m and arena.T.size == 0, "p_k lives on pe arenas A^{p,q}")
    if k > 0:
        return mul(block_det(arena, "delta_star") ** k, pi_product(arena, "pi_plus"))
    return mul(block_det(arena, "omega_star") ** -k, pi_product(arena, "pi_minus"))


def omega_weight(arena: Arena) -> tuple:
    n, m = arena.dim_v
    weight = [0] * arena.n_copies
    for s in range(n):
        weight[arena.s_copy(s)] = m + 1
    return tuple(weight)


def omega_invariant(arena: Arena, worker=None) -> Polynomial:
    """The osp square root of det((v_s, v_t))^(2r+1), by solving its weight block."""
    from .solver import invariant_space

    n, m = arena.dim_v
    _check(m % 2 == 0 and n >= 1, "Omega needs osp dims (n|2r) with n >= 1")
    _check(arena.T.size == 0 and arena.S.even >= n, "Omega needs n even vector copies and no covectors")
    derivations = [g_derivation(arena, x) for x in basis_of(FamilySpec("osp", n, m))]
    weight = omega_weight(arena)
    dim, basis = invariant_space(arena, derivations, n * (m + 1), weight, worker=worker)
    if dim != 1:
        raise StructuralError(f"Omega weight block is {dim}-dimensional")
    target = block_det(arena, "delta_star") ** (m + 1)
    mono, coef = target.leading_term()
    found = basis[0].terms.get(mono)
    if not found:
        raise StructuralError("Omega has no Delta*^(2r+1) term to normalize on")
    return basis[0].scale(coef / found)


# ---- queer matrices ---------------------------------------------------------

def _q_arena_checks(arena: Arena) -> int:
    n, m = arena.dim_v
    _check(n == m, "q-type arenas need dimV (n|n)")
    _check(arena.T.odd == 0 and arena.S.odd == 0, "q-type arenas have no odd copies")
    return n


def z_matrix(arena: Arena) -> QBlockMatrix:
    n = _q_arena_checks(arena)
    _check(arena.T.even >= n and arena.S.even >= n, "Z needs n copies on each side")
    a = tuple(tuple(scalar_product(arena, t, s) for s in range(n)) for t in range(n))
    b = tuple(tuple(q_bracket(arena, t, s) for s in range(n)) for t in range(n))
    return QBlockMatrix(a, b, arena.table)


def y_matrix(arena: Arena) -> QBlockMatrix:
    n = _q_arena_checks(arena)
    _check(arena.S.even >= n, "Y needs n vector copies")
    I = arena.I
    a = tuple(tuple(arena.xs(i, s) for s in range(n)) for i in I.even_positions())
    b = tuple(tuple(arena.xs(I.bar(i), s) for s in range(n)) for i in I.even_positions())
    return QBlockMatrix(a, b, arena.table)


def qtr_z_product(arena: Arena, lam) -> Polynomial:
    z = z_matrix(arena)
    return product(arena.table, [qtr(z.power(part)) for part in lam])


def q_lambda(arena: Arena, lam) -> Polynomial:
    """qtr Z^l1 ... qtr Z^ln . qet Y, certified polynomial by exact division."""
    n = _q_arena_checks(arena)
    lam = tuple(lam)
    if len(lam) != n or any(a <= b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] <= 0):
        raise InvalidSpecError(f"q_lambda needs a strict partition with {n} parts, got {lam}")
    head = qtr_z_product(arena, lam)
    qy = qet(y_matrix(arena), conventions.y_qet_alternating())
    value = LocalizedElement(mul(head, qy.numerator), qy.base, qy.exponent).reduce()
    try:
        return value.to_polynomial()
    except NotDivisibleError as e:
        raise PolynomialityError(f"q_{lam} keeps the denominator det(Y0)^{value.exponent}") from e


# ---- registry ---------------------------------------------------------------

@dataclass(frozen=True)
class NamedInvariant:
    name: str
    params: dict = field(compare=False)
    value: Polynomial = field(compare=False)
    arena: Arena = field(repr=False, compare=False)

    @property
    def degree(self) -> int:
        return self.value.degree()

    @property
    def multidegree(self) -> tuple:
        return multidegree(self.arena, self.value)


def _t(arena, v):
    return arena.T.parse(v) if isinstance(v, str) else int(v)


def _s(arena, v):
    return arena.S.parse(v) if isinstance(v, str) else int(v)


def _lam(v):
    if isinstance(v, str):
        return tuple(int(x) for x in v.split(",") if x.strip())
    return tuple(v)


def _label_pair(idx_a, a, idx_b, b) -> str:
    return f"{idx_a.label(a)},{idx_b.label(b)}"


def named_invariant(arena: Arena, name: str, **params) -> NamedInvariant:
    """Build one invariant by tag; CLI parameters may arrive as label strings."""
    try:
        return _build_named(arena, name, params)
    except (KeyError, ValueError) as e:
        raise InvalidSpecError(f"bad parameters for {name}: {e}") from None


def _build_named(arena: Arena, name: str, params: dict) -> NamedInvariant:
    if name == "scalar_product":
        t, s = _t(arena, params["t"]), _s(arena, params["s"])
        return NamedInvariant(f"scalar_product({_label_pair(arena.T, t, arena.S, s)})",
                              params, scalar_product(arena, t, s), arena)
    if name == "q_bracket":
        t, s = _t(arena, params["t"]), _s(arena, params["s"])
        return NamedInvariant(f"q_bracket({_label_pair(arena.T, t, arena.S, s)})",
                              params, q_bracket(arena, t, s), arena)
    if name == "form_inner":
        family = params.get("family", "osp")
        s, t = _s(arena, params["s"]), _s(arena, params["t"])
        return NamedInvariant(f"form_inner[{family}]({_label_pair(arena.S, s, arena.S, t)})",
                              params, form_inner(arena, family, s, t), arena)
    if name in BLOCK_DETS:
        return NamedInvariant(name, params, block_det(arena, name), arena)
    if name in PI_PRODUCTS:
        return NamedInvariant(name, params, pi_product(arena, name), arena)
    if name == "f":
        k = int(params["k"])
        return NamedInvariant(f"f({k})", params, f_invariant(arena, k), arena)
    if name == "p":
        k = int(params["k"])
        return NamedInvariant(f"p({k})", params, p_invariant(arena, k), arena)
    if name == "Omega":
        return NamedInvariant("Omega", params, omega_invariant(arena), arena)
    if name == "qtr_z":
        lam = _lam(params.get("lam", "1"))
        return NamedInvariant(f"qtr_z({','.join(map(str, lam))})", params, qtr_z_product(arena, lam), arena)
    if name == "q_lambda":
        lam = _lam(params["lam"])
        return NamedInvariant(f"q_lambda({','.join(map(str, lam))})", params, q_lambda(arena, lam), arena)
    raise InvalidSpecError(f"unknown invariant {name!r}")


def _capped(candidates, max_degree: int, notes: list) -> list[NamedInvariant]:
    kept = []
    for inv in candidates:
        if inv.value.is_zero():
            notes.append(f"{inv.name} vanishes identically on this arena")
        elif inv.degree > max_degree:
            notes.append(f"{inv.name} (degree {inv.degree}) exceeds the degree cap {max_degree}")
        else:
            kept.append(inv)
    return kept


def basic_set(arena: Arena, spec: FamilySpec, max_degree: int, omit=()) -> tuple[list[NamedInvariant], list[str]]:
    """Generators of the family's basic set up to the degree cap, plus notes on exclusions."""
    n, m = spec.n, spec.m
    T, S = arena.T, arena.S
    fam = spec.family
    notes: list[str] = []
    gens: list[NamedInvariant] = []

    def add_infinite(tag, build, degree_of, usable):
        if tag in omit:
            notes.append(f"{tag} omitted on request")
            return
        if not usable:
            notes.append(f"{tag} needs more copies than the arena has")
            return
        for sign in (1, -1):
            k = 1
            while degree_of(sign, k) <= max_degree:
                gens.append(build(sign * k))
                k += 1
            notes.append(f"{tag}({sign * k}) and beyond exceed the degree cap {max_degree}")

    if fam in ("gl", "sl", "q", "sq"):
        gens += [named_invariant(arena, "scalar_product", t=t, s=s)
                 for t in T.positions() for s in S.positions()]
    if fam in ("q", "sq"):
        gens += [named_invariant(arena, "q_bracket", t=t, s=s)
                 for t in T.even_positions() for s in S.even_positions()]
    if fam in ("osp", "pe", "spe"):
        form = "osp" if fam == "osp" else "pe"
        gens += [named_invariant(arena, "form_inner", family=form, s=s, t=t)
                 for s in S.positions() for t in S.positions() if s <= t]

    if fam == "sl":
        add_infinite(
            "f",
            lambda k: named_invariant(arena, "f", k=k),
            lambda sign, k: k * (n + m) + 2 * n * m,
            T.even >= n and T.odd >= m and S.even >= n and S.odd >= m,
        )
    elif fam == "spe":
        pairs_plus = n * (n + 1) // 2 if conventions.p_invariant_range(+1) == "s<=t" else n * (n - 1) // 2
        pairs_minus = n * (n + 1) // 2 if conventions.p_invariant_range(-1) == "s<=t" else n * (n - 1) // 2
        add_infinite(
            "p",
            lambda k: named_invariant(arena, "p", k=k),
            lambda sign, k: k * n + 2 * (pairs_plus if sign > 0 else pairs_minus),
            S.even >= n and S.odd >= n,
        )
    elif fam == "osp" and n >= 1:
        degree = n * (m + 1)
        if "Omega" in omit:
            notes.append("Omega omitted on request")
        elif S.even < n:
            notes.append("Omega needs n even vector copies")
        elif degree > max_degree:
            notes.append(f"Omega (degree {degree}) exceeds the degree cap {max_degree}")
        else:
            gens.append(named_invariant(arena, "Omega"))
    elif fam == "sq":
        if "q_lambda" in omit:
            notes.append("q_lambda omitted on request")
        elif S.even < n or T.even < n:
            notes.append("q_lambda needs n copies on each side")
        else:
            # q_lambda has degree 2|lambda|
            for size in range(1, max_degree // 2 + 1):
                for lam in strict_partitions(n, size):
                    try:
                        gens.append(named_invariant(arena, "q_lambda", lam=lam))
                    except PolynomialityError as e:
                        log.warning("%s", e)
                        notes.append(f"q_lambda({','.join(map(str, lam))}) is not polynomial: {e}")
            notes.append(f"q_lambda of size above {max_degree // 2} exceed the degree cap {max_degree}")

    gens = _capped(gens, max_degree, notes)
    log.debug("basic set for %s: %d generators", spec, len(gens))
    return gens, notes
