"""Ideals in polynomial rings over Q: Groebner bases, membership, elimination,
quotients, saturation, intersection, dimension, degree, minimal primes and
primary multiplicities."""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .groebner import Reducer, ResourceBudgetExceeded, buchberger
from .polyring import (DEGREVLEX, LEX, QQ, WDEGREVLEX, MonomialOrder, Polynomial, Ring,
                       VarId, elimination_order, pack, parse_polynomial)

__all__ = [
    "Ideal", "ComponentDecomposition", "EmptySchemeError", "MultiplicityError",
    "ResourceBudgetExceeded", "groebner", "normal_form", "member", "quotient", "saturate",
    "intersect", "eliminate", "dimension", "degree", "hilbert_numerator", "minimal_primes",
    "primary_multiplicity", "radical_member", "certify_prime", "exact_divide",
    "hilbert_dimension", "decompose", "factor_polynomial", "PrimeList", "Component",
]


class EmptySchemeError(ValueError):
    """The ideal is the unit ideal, so its zero set is empty."""


class MultiplicityError(ArithmeticError):
    """A degree ratio that should be an integer is not."""


class Ideal:
    """Immutable ideal given by generators; reduced bases are cached per order."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial] = ()):
        gs = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            elif g.ring != ring:
                g = g.map_to(ring)
            if not g.is_zero():
                gs.append(g)
        self.ring = ring
        self.gens: tuple[Polynomial, ...] = tuple(gs)
        self._gb: dict[MonomialOrder, tuple[Polynomial, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, ring: Ring, lines: Iterable[str]) -> "Ideal":
        return cls(ring, [parse_polynomial(t, ring) for t in lines])

    # bases -----------------------------------------------------------------

    def groebner(self, order: MonomialOrder = DEGREVLEX, budget: int | None = None) -> tuple[Polynomial, ...]:
        gb = self._gb.get(order)
        if gb is None:
            with self._lock:
                gb = self._gb.get(order)
                if gb is None:
                    gb = tuple(buchberger(self.gens, order, self.ring, budget)) if self.gens else ()
                    self._gb[order] = gb
        return gb

    def _seed_basis(self, order: MonomialOrder, gb: Sequence[Polynomial]) -> None:
        self._gb.setdefault(order, tuple(gb))

    def reducer(self, order: MonomialOrder = DEGREVLEX) -> Reducer:
        return Reducer(self.groebner(order), order, self.ring)

    def reduce(self, f: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
        return self.reducer(order)(f)

    def __contains__(self, f) -> bool:
        if not isinstance(f, Polynomial):
            f = self.ring.const(f)
        return member(f, self)

    def contains(self, other: "Ideal") -> bool:
        """True when ``other`` is a subset of this ideal."""
        red = self.reducer()
        return all(red.is_zero(g.map_to(self.ring)) for g in other.gens)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.groebner() == other.groebner()

    def __hash__(self) -> int:
        return hash((self.ring, self.groebner()))

    def __le__(self, other: "Ideal") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Ideal") -> bool:
        return self.contains(other)

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + tuple(g.map_to(self.ring) for g in other.gens))
        if isinstance(other, Polynomial):
            return Ideal(self.ring, self.gens + (other,))
        return Ideal(self.ring, self.gens + tuple(other))

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens])

    def map_to(self, ring: Ring) -> "Ideal":
        return Ideal(ring, [g.map_to(ring) for g in self.gens])

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights if weights is not None else self.ring.weights
        return all(g.is_homogeneous(w) for g in self.gens)

    def minimal_generators(self) -> list[Polynomial]:
        """Reduced basis elements, smallest leads first (a readable generating set)."""
        return list(reversed(self.groebner()))

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"


# ---------------------------------------------------------------------------
# basic operations


def groebner(I: Ideal, order: MonomialOrder = DEGREVLEX, budget: int | None = None) -> tuple[Polynomial, ...]:
    return I.groebner(order, budget)


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    return I.reduce(f, order)


def member(f: Polynomial, I: Ideal) -> bool:
    if f.is_zero():
        return True
    return I.reducer().is_zero(f.map_to(I.ring))


def exact_divide(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient ``p / f``; raises if ``f`` does not divide ``p``."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = p.ring
    keys = DEGREVLEX.bind(ring)
    fl = max(f.packed_terms, key=keys.key_of_packed)
    fc = f.packed_terms[fl]
    guard = ring.guard
    rem = dict(p.packed_terms)
    q: dict = {}
    while rem:
        lm = max(rem, key=keys.key_of_packed)
        if ((lm | guard) - fl) & guard != guard:
            raise ArithmeticError("inexact polynomial division")
        c = rem[lm] / fc
        shift = lm - fl
        q[shift] = c
        for m, a in f.packed_terms.items():
            nm = m + shift
            v = rem.get(nm, 0) - c * a
            if v:
                rem[nm] = v
            else:
                rem.pop(nm, None)
    return Polynomial(ring, q)


def eliminate(I: Ideal, variables: Iterable[VarId | str], keep_ring: bool = False,
              weighted: bool = False) -> Ideal:
    """``I`` intersected with the subring omitting ``variables`` (block order)."""
    ring = I.ring
    names = [v.name if isinstance(v, VarId) else v for v in variables]
    for nm in names:
        ring._index_of(nm)
    if not names:
        return I
    order = elimination_order(names, weighted)
    gb = I.groebner(order)
    idx = {ring.index[nm] for nm in names}
    kept = [g for g in gb if not (g.support() & idx)]
    if keep_ring:
        return Ideal(ring, kept)
    sub = ring.drop(names)
    return Ideal(sub, [g.map_to(sub) for g in kept])


def intersect(I1: Ideal, I2: Ideal) -> Ideal:
    """Tag-variable construction ``t*I1 + (1-t)*I2`` with ``t`` eliminated."""
    ring = I1.ring
    if I2.ring != ring:
        raise ValueError("ideals live in different rings")
    if I1.is_zero() or I2.is_zero():
        return Ideal(ring, [])
    tname = ring.fresh_name("_tag")
    big = ring.extend([tname], front=True)
    t = big.gen(tname)
    gens = [t * g.map_to(big) for g in I1.gens] + [(1 - t) * g.map_to(big) for g in I2.gens]
    return eliminate(Ideal(big, gens), [tname])


def _as_poly(I: Ideal, f) -> Polynomial:
    if not isinstance(f, Polynomial):
        f = I.ring.const(f)
    if f.is_zero():
        raise ValueError("quotient or saturation by zero")
    return f.map_to(I.ring)


def quotient(I: Ideal, f) -> Ideal:
    """Colon ideal ``I : f`` (or ``I : H`` for an ideal ``H``)."""
    if isinstance(f, Ideal):
        parts = [quotient(I, h) for h in f.gens]
        return _intersect_all(I.ring, parts)
    f = _as_poly(I, f)
    if f.is_constant():
        return I
    common = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [exact_divide(g, f) for g in common.groebner()])


def _intersect_all(ring: Ring, parts: Sequence[Ideal]) -> Ideal:
    if not parts:
        return Ideal(ring, [ring.one])
    acc = parts[0]
    for p in parts[1:]:
        if acc.contains(p):
            acc = p
        elif not p.contains(acc):
            acc = intersect(acc, p)
    return acc


def _single_variable(f: Polynomial) -> int | None:
    terms = f.packed_terms
    if len(terms) != 1:
        return None
    (m,) = terms
    sup = f.support()
    if len(sup) == 1:
        (i,) = sup
        if m == 1 << (16 * i):
            return i
    return None


def saturate(I: Ideal, f, method: str = "auto") -> Ideal:
    """Saturation ``I : f^oo``; for an ideal ``H``, the intersection over its generators.

    ``method`` is ``"auto"``, ``"bayer"`` (variable ``f``, ideal homogeneous for
    the ring weights), ``"rabinowitsch"`` (eliminate ``u`` from ``I + (u f - 1)``)
    or ``"iterate"`` (repeated quotients to a fixed point).
    """
    if isinstance(f, Ideal):
        if f.is_zero():
            raise ValueError("saturation by the zero ideal")
        return _intersect_all(I.ring, [saturate(I, h, method) for h in f.gens])
    f = _as_poly(I, f)
    if f.is_constant():
        return I
    if not I.gens:
        return I
    if method == "auto":
        v = _single_variable(f)
        method = "bayer" if v is not None and I.is_homogeneous() else "rabinowitsch"
    if method == "bayer":
        return _saturate_bayer(I, f)
    if method == "rabinowitsch":
        ring = I.ring
        u = ring.fresh_name("_u")
        big = ring.extend([u], front=True)
        gens = [g.map_to(big) for g in I.gens] + [big.gen(u) * f.map_to(big) - 1]
        return eliminate(Ideal(big, gens), [u])
    if method == "iterate":
        cur = I
        while True:
            nxt = quotient(cur, f)
            if cur.contains(nxt):
                return cur
            cur = nxt
    raise ValueError(f"unknown saturation method {method}")


def _saturate_bayer(I: Ideal, f: Polynomial) -> Ideal:
    """Saturate by a variable using weighted degrevlex with that variable last."""
    ring = I.ring
    v = _single_variable(f)
    if v is None or not I.is_homogeneous():
        raise ValueError("Bayer saturation needs a variable and a homogeneous ideal")
    order_idx = [i for i in range(ring.ngens) if i != v] + [v]
    moved = Ring([ring.variables[i] for i in order_idx], [ring.weights[i] for i in order_idx])
    gb = Ideal(moved, [g.map_to(moved) for g in I.gens]).groebner(WDEGREVLEX)
    last = 16 * (moved.ngens - 1)
    out = []
    for g in gb:
        low = min((m >> last) & 0xFFFF for m in g.packed_terms)
        if low:
            g = Polynomial(moved, {m - (low << last): c for m, c in g.packed_terms.items()})
        out.append(g.map_to(ring))
    return Ideal(ring, out)


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """Rabinowitsch test: ``f`` lies in the radical iff ``1 in I + (1 - y f)``."""
    ring = I.ring
    y = ring.fresh_name("_y")
    big = ring.extend([y])
    J = Ideal(big, [g.map_to(big) for g in I.gens] + [1 - big.gen(y) * f.map_to(big)])
    return J.is_unit()


# ---------------------------------------------------------------------------
# dimension and degree


def _lead_exponents(I: Ideal) -> list[tuple[int, ...]]:
    gb = I.groebner(DEGREVLEX)
    return [g.lead_monomial(DEGREVLEX) for g in gb]


def _minimalize(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


@lru_cache(maxsize=200_000)
def _hilbert_rec(gens: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    # pairwise coprime generators: product of (1 - t^deg)
    n = len(gens[0])
    used = [0] * n
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if used[i]:
                    coprime = False
                used[i] += 1
    if coprime:
        num = [1]
        for g in gens:
            d = sum(g)
            num = _poly_mul(num, [1] + [0] * (d - 1) + [-1])
        return tuple(num)
    pivot = max(range(n), key=lambda i: used[i])
    # N(M) = N(M + (x)) + t * N(M : x)
    plus = [g for g in gens if g[pivot] == 0]
    unit = tuple(1 if i == pivot else 0 for i in range(n))
    plus.append(unit)
    colon = [tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g)) for g in gens]
    a = _hilbert_rec(tuple(sorted(_minimalize(plus))))
    b = _hilbert_rec(tuple(sorted(_minimalize(colon))))
    return tuple(_poly_add(list(a), [0] + list(b)))


def hilbert_numerator(I: Ideal) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of ``R/LT(I)``
    (standard grading, degrevlex lead terms)."""
    lead = _minimalize(_lead_exponents(I))
    if not lead:
        return [1]
    num = list(_hilbert_rec(tuple(sorted(lead))))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _hilbert_reduced(I: Ideal) -> tuple[int, list[int]]:
    num = hilbert_numerator(I)
    n = I.ring.ngens
    if not any(num):
        raise EmptySchemeError("unit ideal has empty zero set")
    while sum(num) == 0:
        # divide by (1 - t)
        q, acc = [], 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        n -= 1
    return n, num


def dimension(I: Ideal) -> int:
    """Size of a largest variable set independent modulo the lead-term ideal."""
    lead = _minimalize(_lead_exponents(I))
    if any(sum(g) == 0 for g in lead):
        raise EmptySchemeError("unit ideal has empty zero set")
    n = I.ring.ngens
    supports = [sum(1 << i for i, e in enumerate(g) if e) for g in lead]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            mask = sum(1 << i for i in subset)
            if all(sup & ~mask for sup in supports):
                return size
    return 0  # pragma: no cover


def degree(I: Ideal) -> int:
    """Degree: numerator of the reduced Hilbert series evaluated at 1."""
    _, num = _hilbert_reduced(I)
    return sum(num)


def hilbert_dimension(I: Ideal) -> int:
    """Dimension read off the pole order of the Hilbert series (cross-check)."""
    return _hilbert_reduced(I)[0]


# ---------------------------------------------------------------------------
# minimal primes


def _to_sympy(p: Polynomial):
    import sympy

    syms = sympy.symbols([f"x{i}" for i in range(p.ring.ngens)])
    expr = sympy.Integer(0)
    for exps, c in p.terms():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s_, e in zip(syms, exps):
            if e:
                term *= s_ ** e
        expr += term
    return expr, syms


def _from_sympy(expr, syms, ring: Ring) -> Polynomial:
    import sympy

    poly = sympy.Poly(expr, *syms)
    terms = {}
    for mon, c in poly.terms():
        c = sympy.Rational(c)
        terms[pack(mon)] = QQ(int(c.p), int(c.q))
    return Polynomial(ring, terms)


def factor_polynomial(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Irreducible factors over Q (sympy) with multiplicities, constants dropped."""
    if p.is_constant():
        return []
    sup = p.support()
    # monomial content first: cheap and common
    if len(p) == 1:
        (exps, _), = p.terms()
        return [(p.ring.gen(i), e) for i, e in enumerate(exps) if e]
    import sympy

    expr, syms = _to_sympy(p)
    _, facs = sympy.factor_list(expr, *[syms[i] for i in sorted(sup)])
    out = []
    for f, e in facs:
        fp = _from_sympy(f, syms, p.ring)
        if not fp.is_constant():
            out.append((fp.monic(), int(e)))
    return out


class PrimeList(list):
    """List of prime ideals with a record of leaves whose primality is unproved."""

    def __init__(self, items=(), unverified=()):
        super().__init__(items)
        self.unverified = list(unverified)


def minimal_primes(I: Ideal, budget: int | None = None) -> PrimeList:
    """Minimal primes by recursive factor splitting of Groebner basis elements.

    Leaves are certified by :func:`certify_prime`; uncertified leaves are still
    returned and listed in ``.unverified``.
    """
    ring = I.ring
    if I.is_unit():
        raise EmptySchemeError("unit ideal has no primes")
    leaves: list[Ideal] = []
    seen: set = set()

    def split(J: Ideal) -> None:
        gb = J.groebner(DEGREVLEX, budget)
        if len(gb) == 1 and gb[0].is_constant():
            return
        key = gb
        if key in seen:
            return
        seen.add(key)
        red = J.reducer()
        for g in sorted(gb, key=lambda q: (q.degree(), len(q))):
            facs = factor_polynomial(g)
            if len(facs) == 1 and facs[0][1] == 1:
                continue
            branches = [f for f, _ in facs if not red.is_zero(f)]
            if not branches:
                continue
            if len(facs) == 1:
                split(J + facs[0][0])
                return
            for f in branches:
                split(J + f)
            return
        leaves.append(Ideal(ring, gb))

    split(I)
    # drop non-minimal and duplicate leaves
    leaves.sort(key=lambda P: -dimension(P))
    minimal: list[Ideal] = []
    for P in leaves:
        if any(P.contains(Q) for Q in minimal):
            continue
        minimal.append(P)
    unverified = [P for P in minimal if not certify_prime(P)]
    return PrimeList(minimal, unverified)


def certify_prime(P: Ideal) -> bool:
    """Prove primality when the ideal is, after eliminating variables that occur
    linearly with constant coefficient, zero or generated by one irreducible."""
    if P.is_unit():
        return False
    ring = P.ring
    gens = list(P.groebner(DEGREVLEX))
    while True:
        pick = None
        for g in gens:
            for i in sorted(g.support()):
                lin = _linear_in(g, i)
                if lin is not None:
                    pick = (g, i, lin)
                    break
            if pick:
                break
        if pick is None:
            break
        g, i, (c, h) = pick
        # x_i = -h / c
        value = h * (-1 / QQ(c))
        rest = []
        for q in gens:
            if q is g:
                continue
            r = q.subs({i: value}) if i in q.support() else q
            if not r.is_zero():
                rest.append(r)
        if not rest:
            return True
        gens = list(Ideal(ring, rest).groebner(DEGREVLEX))
        if len(gens) == 1 and gens[0].is_constant():
            return False
    if len(gens) == 1:
        facs = factor_polynomial(gens[0])
        return len(facs) == 1 and facs[0][1] == 1
    return False


def _linear_in(g: Polynomial, i: int):
    """If ``g = c*x_i + h`` with ``c`` constant and ``h`` free of ``x_i``, return (c, h)."""
    shift = 16 * i
    c = None
    h = {}
    for m, a in g.packed_terms.items():
        e = (m >> shift) & 0xFFFF
        if e == 0:
            h[m] = a
        elif e == 1 and m == 1 << shift:
            c = a
        else:
            return None
    if c is None:
        return None
    return c, Polynomial(g.ring, h)


# ---------------------------------------------------------------------------
# primary components


@dataclass
class Component:
    prime: Ideal
    primary: Ideal
    multiplicity: int


@dataclass
class ComponentDecomposition:
    ambient: Ideal
    components: list[Component] = field(default_factory=list)

    def degree_sum(self) -> int:
        return sum(c.multiplicity * degree(c.prime) for c in self.components)


def primary_multiplicity(J: Ideal, P: Ideal, other_primes: Sequence[Ideal] = ()) -> tuple[Ideal, int]:
    """Primary component of ``J`` at ``P`` (saturating away the other primes)
    and its multiplicity ``degree(primary) / degree(P)``."""
    if not P.contains(J):
        raise ValueError("prime must contain the ideal")
    if other_primes:
        H = _intersect_all(J.ring, list(other_primes))
        Q = saturate(J, H)
    else:
        Q = J
    dq, dp = degree(Q), degree(P)
    if dimension(Q) != dimension(P):
        raise MultiplicityError("primary component and prime have different dimensions")
    if dq % dp:
        raise MultiplicityError(f"degree ratio {dq}/{dp} is not an integer")
    return Q, dq // dp


def decompose(J: Ideal, primes: Sequence[Ideal]) -> ComponentDecomposition:
    out = ComponentDecomposition(J)
    for idx, P in enumerate(primes):
        others = [Q for k, Q in enumerate(primes) if k != idx]
        Q, mult = primary_multiplicity(J, P, others)
        out.components.append(Component(P, Q, mult))
    return out
