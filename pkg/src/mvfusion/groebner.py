"""Buchberger's algorithm over Q with Gebauer-Moeller pair pruning.

Terms are held as ``{order key: coefficient}`` where the key comes from
:class:`mvfusion.polyring.OrderKeys`; keys are additive, so multiplying by a
monomial shifts every key by a constant.  Divisibility uses packed monomials
(ring-order packing with guard bits).
"""

from __future__ import annotations

import heapq
import os
from typing import Sequence

from .polyring import QQ, MonomialOrder, OrderKeys, Polynomial, Ring, divides, pack, unpack

DEFAULT_BUDGET = 10**6


class ResourceBudgetExceeded(RuntimeError):
    """Raised when a computation processes more S-pairs than allowed."""


def default_budget() -> int:
    env = os.environ.get("MVFUSION_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_BUDGET


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = default_budget() if limit is None else limit
        self.used = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise ResourceBudgetExceeded(f"S-pair budget of {self.limit} exhausted")


class _Elem:
    __slots__ = ("lk", "lm", "exps", "tail")

    def __init__(self, lk: int, lm: int, exps: tuple, tail: list):
        self.lk = lk          # lead key
        self.lm = lm          # lead packed monomial
        self.exps = exps      # lead exponent tuple
        self.tail = tail      # [(key, coeff)] excluding the (monic) lead


def to_keyed(p: Polynomial, keys: OrderKeys) -> dict:
    kp = keys.key_of_packed
    return {kp(m): c for m, c in p.packed_terms.items()}


def from_keyed(d: dict, ring: Ring, keys: OrderKeys) -> Polynomial:
    pk = keys.packed_of_key
    return Polynomial(ring, {pk(k): c for k, c in d.items()})


def _make_elem(d: dict, keys: OrderKeys) -> _Elem:
    lk = max(d)
    inv = 1 / QQ(d[lk])
    tail = sorted(((k, c * inv) for k, c in d.items() if k != lk), reverse=True)
    lm = keys.packed_of_key(lk)
    return _Elem(lk, lm, unpack(lm, keys.n), tail)


def reduce_keyed(p: dict, basis: Sequence[_Elem], keys: OrderKeys, guard: int) -> dict:
    """Full normal form of ``p`` (consumed) modulo monic ``basis``."""
    if not p or not basis:
        return p
    heap = [-k for k in p]
    heapq.heapify(heap)
    out = {}
    pk = keys.packed_of_key
    pop, push = heapq.heappop, heapq.heappush
    last = None
    while heap:
        k = -pop(heap)
        if k == last:
            continue
        c = p.get(k)
        if c is None:
            continue
        last = k
        m = pk(k)
        for g in basis:
            if ((m | guard) - g.lm) & guard == guard:
                break
        else:
            out[k] = c
            del p[k]
            continue
        del p[k]
        shift = k - g.lk
        for tk, tc in g.tail:
            nk = tk + shift
            old = p.get(nk)
            if old is None:
                p[nk] = -c * tc
                push(heap, -nk)
            else:
                v = old - c * tc
                if v:
                    p[nk] = v
                else:
                    del p[nk]
    return out


def _lcm_exps(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


def buchberger(polys: Sequence[Polynomial], order: MonomialOrder, ring: Ring,
               budget: int | None = None) -> list[Polynomial]:
    """Reduced Groebner basis (monic, sorted by descending lead) of ``polys``."""
    keys = order.bind(ring)
    guard = ring.guard
    spend = _Budget(budget)
    basis: list[_Elem] = []
    alive: list[int] = []               # indices into basis
    pairs: dict[tuple[int, int], tuple] = {}
    heap: list[tuple] = []

    inputs = [to_keyed(p, keys) for p in polys if not p.is_zero()]
    inputs.sort(key=lambda d: max(d))

    def update(h_idx: int) -> None:
        nonlocal alive
        h = basis[h_idx]
        # candidate new pairs (h, g)
        cand = []
        for gi in alive:
            g = basis[gi]
            le = _lcm_exps(h.exps, g.exps)
            cand.append((gi, le, pack(le), _coprime(h.exps, g.exps)))
        kept = []
        for idx, (gi, le, lm, cop) in enumerate(cand):
            if not cop:
                rest = cand[idx + 1:]
                if any(divides(o[2], lm, guard) for o in rest) or \
                        any(divides(o[2], lm, guard) for o in kept):
                    continue
            kept.append((gi, le, lm, cop))
        # drop old pairs made redundant by h (chain criterion)
        for key in list(pairs):
            i, j = key
            lk, lm, le = pairs[key]
            if divides(h.lm, lm, guard):
                lih = pack(_lcm_exps(basis[i].exps, h.exps))
                ljh = pack(_lcm_exps(basis[j].exps, h.exps))
                if lih != lm and ljh != lm:
                    del pairs[key]
        for gi, le, lm, cop in kept:
            if cop:
                continue
            lk = keys.key(le)
            pairs[(gi, h_idx)] = (lk, lm, le)
            heapq.heappush(heap, (lk, gi, h_idx))
        alive = [gi for gi in alive if not divides(h.lm, basis[gi].lm, guard)]
        alive.append(h_idx)

    def add(d: dict) -> None:
        basis.append(_make_elem(d, keys))
        update(len(basis) - 1)

    for d in inputs:
        r = reduce_keyed(d, [basis[i] for i in alive], keys, guard)
        if r:
            if 0 in r and len(r) == 1 or _is_unit(r, keys):
                return [ring.one]
            add(r)

    while heap:
        lk, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        spend.spend()
        gi, gj = basis[i], basis[j]
        si = lk - gi.lk
        sj = lk - gj.lk
        s: dict = {}
        for tk, tc in gi.tail:
            s[tk + si] = tc
        for tk, tc in gj.tail:
            nk = tk + sj
            v = s.get(nk, 0) - tc
            if v:
                s[nk] = v
            else:
                s.pop(nk, None)
        if not s:
            continue
        r = reduce_keyed(s, [basis[a] for a in alive], keys, guard)
        if r:
            if _is_unit(r, keys):
                return [ring.one]
            add(r)

    return _interreduce([basis[i] for i in alive], ring, keys, guard)


def _is_unit(d: dict, keys: OrderKeys) -> bool:
    return len(d) >= 1 and keys.packed_of_key(max(d)) == 0


def _interreduce(elems: list[_Elem], ring: Ring, keys: OrderKeys, guard: int) -> list[Polynomial]:
    elems = sorted(elems, key=lambda e: e.lk, reverse=True)
    out = []
    for idx, e in enumerate(elems):
        others = elems[:idx] + elems[idx + 1:]
        tail = reduce_keyed(dict(e.tail), others, keys, guard)
        tail[e.lk] = QQ(1)
        out.append(from_keyed(tail, ring, keys))
    return out


def normal_form(p: Polynomial, gb: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    ring = p.ring
    keys = order.bind(ring)
    basis = [_make_elem(to_keyed(g, keys), keys) for g in gb if not g.is_zero()]
    r = reduce_keyed(to_keyed(p, keys), basis, keys, ring.guard)
    return from_keyed(r, ring, keys)


class Reducer:
    """Reusable normal-form engine for a fixed basis."""

    def __init__(self, gb: Sequence[Polynomial], order: MonomialOrder, ring: Ring):
        self.ring = ring
        self.keys = order.bind(ring)
        self.basis = [_make_elem(to_keyed(g, self.keys), self.keys) for g in gb if not g.is_zero()]

    def __call__(self, p: Polynomial) -> Polynomial:
        r = reduce_keyed(to_keyed(p, self.keys), self.basis, self.keys, self.ring.guard)
        return from_keyed(r, self.ring, self.keys)

    def is_zero(self, p: Polynomial) -> bool:
        return not reduce_keyed(to_keyed(p, self.keys), self.basis, self.keys, self.ring.guard)
