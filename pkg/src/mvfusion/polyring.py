"""Exact multivariate polynomials over Q for Mirkovic-Vybornov slice matrices.

Monomials are stored *packed*: the exponent of the i-th ring variable lives in
bits ``[FIELD*i, FIELD*i + FIELD - 1)`` of a Python int and the top bit of each
field is a guard bit that stays clear.  Multiplying monomials is then integer
addition and divisibility is a single subtract-and-mask test (see
:func:`divides`).  The public API speaks exponent tuples; packing is an
implementation detail shared with :mod:`mvfusion.groebner`.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

try:  # gmpy2 rationals are several times faster than fractions.Fraction
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

FIELD = 16
EXP_LIMIT = (1 << (FIELD - 1)) - 1
_FIELD_MASK = (1 << FIELD) - 1


def pack(exps: Sequence[int]) -> int:
    m = 0
    for i, e in enumerate(exps):
        if e < 0 or e > EXP_LIMIT:
            raise ValueError(f"exponent {e} out of range")
        m |= e << (FIELD * i)
    return m


def unpack(m: int, n: int) -> tuple[int, ...]:
    return tuple((m >> (FIELD * i)) & _FIELD_MASK for i in range(n))


def guard_mask(n: int) -> int:
    return sum(1 << (FIELD * i + FIELD - 1) for i in range(n))


def divides(a: int, b: int, guard: int) -> bool:
    """True when packed monomial ``a`` divides packed monomial ``b``."""
    return ((b | guard) - a) & guard == guard


class RingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# variables and rings


@dataclass(frozen=True, order=True)
class VarId:
    """A ring variable: a slice coordinate ``A[i,j,k]``, the parameter ``s``,
    or an auxiliary variable used by tag-variable constructions."""

    kind: str
    i: int = 0
    j: int = 0
    k: int = 0
    label: str = ""

    @property
    def name(self) -> str:
        if self.kind == "slice":
            return f"A[{self.i},{self.j},{self.k}]"
        if self.kind == "parameter":
            return "s"
        return self.label

    def __str__(self) -> str:
        return self.name


S = VarId("parameter")


def slice_var(i: int, j: int, k: int) -> VarId:
    return VarId("slice", i, j, k)


def aux_var(label: str) -> VarId:
    return VarId("aux", label=label)


class Ring:
    """Polynomial ring Q[x_1, ..., x_n] with optional positive grading weights.

    Rings compare equal when their variable lists are equal; weights are a
    grading hint used by weighted orders and do not affect identity.
    """

    def __init__(self, variables: Iterable[VarId | str], weights: Sequence[int] | None = None):
        vs = []
        for v in variables:
            vs.append(aux_var(v) if isinstance(v, str) else v)
        self.variables: tuple[VarId, ...] = tuple(vs)
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise RingError(f"duplicate variables in {names}")
        self.names: tuple[str, ...] = tuple(names)
        self.index = {name: i for i, name in enumerate(names)}
        if weights is None:
            weights = (1,) * len(vs)
        if len(weights) != len(vs) or any(w <= 0 for w in weights):
            raise RingError("weights must be positive, one per variable")
        self.weights: tuple[int, ...] = tuple(int(w) for w in weights)
        self.ngens = len(vs)
        self.guard = guard_mask(self.ngens)
        # the parameter prints first inside a monomial: s*A[1,3,1]
        self.print_order = tuple(sorted(range(self.ngens),
                                        key=lambda i: self.variables[i].kind != "parameter"))

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.names)})"

    # construction helpers -------------------------------------------------

    @cached_property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @cached_property
    def one(self) -> "Polynomial":
        return Polynomial(self, {0: QQ(1)})

    def const(self, c) -> "Polynomial":
        c = QQ(c)
        return Polynomial(self, {0: c} if c else {})

    def gen(self, v: VarId | str | int) -> "Polynomial":
        idx = self._index_of(v)
        return Polynomial(self, {1 << (FIELD * idx): QQ(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.ngens)]

    def _index_of(self, v: VarId | str | int) -> int:
        if isinstance(v, int):
            if not 0 <= v < self.ngens:
                raise RingError(f"variable index {v} out of range")
            return v
        name = v.name if isinstance(v, VarId) else v
        try:
            return self.index[name]
        except KeyError:
            raise RingError(f"{name} is not a variable of {self}") from None

    def has(self, v: VarId | str) -> bool:
        name = v.name if isinstance(v, VarId) else v
        return name in self.index

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        if len(exps) != self.ngens:
            raise RingError("exponent vector has wrong length")
        c = QQ(coeff)
        return Polynomial(self, {pack(exps): c} if c else {})

    def from_terms(self, terms: Mapping[tuple[int, ...], object] | Iterable) -> "Polynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[int, object] = {}
        for exps, c in items:
            m = pack(exps)
            v = out.get(m, 0) + QQ(c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def extend(self, extra: Iterable[VarId | str], weights: Sequence[int] | None = None,
               front: bool = False) -> "Ring":
        """A new ring with extra variables (appended, or prepended if ``front``)."""
        extra = [aux_var(v) if isinstance(v, str) else v for v in extra]
        ew = tuple(weights) if weights is not None else (1,) * len(extra)
        if front:
            return Ring(extra + list(self.variables), ew + self.weights)
        return Ring(list(self.variables) + extra, self.weights + ew)

    def drop(self, drop: Iterable[VarId | str]) -> "Ring":
        names = {v.name if isinstance(v, VarId) else v for v in drop}
        keep = [(v, w) for v, w in zip(self.variables, self.weights) if v.name not in names]
        return Ring([v for v, _ in keep], [w for _, w in keep])

    def fresh_name(self, stem: str = "_t") -> str:
        for n in itertools.count():
            name = f"{stem}{n}"
            if name not in self.index:
                return name
        raise AssertionError  # pragma: no cover


def ring_new(mu: Sequence[int], with_parameter: bool = True, upper_only: bool = False) -> Ring:
    """Coordinate ring of the slice ``T_mu`` (or of ``T_mu`` cap n if ``upper_only``).

    Variables ``A[i,j,k]`` for every block (i, j) and slot k <= min(mu_i, mu_j),
    sorted by (i, j, k), then ``s`` last.  The natural grading gives ``A[i,j,k]``
    weight ``mu_i - k + 1`` and ``s`` weight 1; every rank-condition ideal built
    from the slice is homogeneous for it.
    """
    mu = tuple(int(x) for x in mu)
    if not mu:
        raise RingError("mu must be non-empty")
    if any(x < 0 for x in mu) or any(a < b for a, b in zip(mu, mu[1:])):
        raise RingError(f"mu={mu} is not a partition")
    m = len(mu)
    vs, ws = [], []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if upper_only and j <= i:
                continue
            for k in range(1, min(mu[i - 1], mu[j - 1]) + 1):
                vs.append(slice_var(i, j, k))
                ws.append(mu[i - 1] - k + 1)
    if with_parameter:
        vs.append(S)
        ws.append(1)
    return Ring(vs, ws)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial: packed monomial -> nonzero rational."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # basic protocol --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, type(QQ(0)))):
            return self._terms == ({0: QQ(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    @property
    def packed_terms(self) -> dict:
        return self._terms

    def terms(self) -> Iterator[tuple[tuple[int, ...], object]]:
        n = self.ring.ngens
        for m, c in self._terms.items():
            yield unpack(m, n), c

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(pack(exps), QQ(0))

    def constant_term(self):
        return self._terms.get(0, QQ(0))

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def degree(self, weights: Sequence[int] | None = None) -> int:
        """Total (or weighted) degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        w = weights or (1,) * self.ring.ngens
        return max(sum(a * b for a, b in zip(e, w)) for e, _ in self.terms())

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * self.ring.ngens
        degs = {sum(a * b for a, b in zip(e, w)) for e, _ in self.terms()}
        return len(degs) <= 1

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        acc = 0
        for m in self._terms:
            acc |= m
        return {i for i in range(self.ring.ngens) if (acc >> (FIELD * i)) & _FIELD_MASK}

    def variables(self) -> list[VarId]:
        return [self.ring.variables[i] for i in sorted(self.support())]

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = QQ(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, {m: a * c for m, a in self._terms.items()})
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = get(m, 0) + ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        return self * c

    def monic(self, order: "MonomialOrder | None" = None) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.lead_coefficient(order)
        return self * (1 / QQ(lc))

    # orders ----------------------------------------------------------------

    def lead_term(self, order: "MonomialOrder | None" = None) -> tuple[tuple[int, ...], object]:
        if not self._terms:
            raise ValueError("zero polynomial has no lead term")
        keys = (order or DEGREVLEX).bind(self.ring)
        m = max(self._terms, key=keys.key_of_packed)
        return unpack(m, self.ring.ngens), self._terms[m]

    def lead_monomial(self, order=None) -> tuple[int, ...]:
        return self.lead_term(order)[0]

    def lead_coefficient(self, order=None):
        return self.lead_term(order)[1]

    def sorted_terms(self, order: "MonomialOrder | None" = None) -> list[tuple[tuple[int, ...], object]]:
        keys = (order or DEGREVLEX).bind(self.ring)
        n = self.ring.ngens
        ms = sorted(self._terms, key=keys.key_of_packed, reverse=True)
        return [(unpack(m, n), self._terms[m]) for m in ms]

    # evaluation and substitution -------------------------------------------

    def evaluate(self, point: Mapping):
        """Exact value at a rational point ``{variable name or VarId: value}``."""
        vals = _point_values(self.ring, point, self.support())
        total = QQ(0)
        for exps, c in self.terms():
            t = c
            for i, e in enumerate(exps):
                if e:
                    t *= vals[i] ** e
            total += t
        return total

    def subs(self, assignment: Mapping) -> "Polynomial":
        """Substitute polynomials (or rationals) for some variables."""
        ring = self.ring
        repl: dict[int, Polynomial] = {}
        for v, val in assignment.items():
            idx = ring._index_of(v)
            repl[idx] = val if isinstance(val, Polynomial) else ring.const(val)
        result = ring.zero
        powers: dict[tuple[int, int], Polynomial] = {}
        for exps, c in self.terms():
            keep = list(exps)
            term = ring.const(c)
            for idx, p in repl.items():
                e = exps[idx]
                if e:
                    keep[idx] = 0
                    key = (idx, e)
                    if key not in powers:
                        powers[key] = p ** e
                    term = term * powers[key]
            result = result + term * ring.monomial(keep)
        return result

    def map_to(self, ring: Ring) -> "Polynomial":
        """Re-express in another ring containing every occurring variable."""
        if ring == self.ring:
            return self
        src = self.ring
        idx = []
        for i in range(src.ngens):
            idx.append(ring.index.get(src.names[i]))
        out: dict = {}
        for exps, c in self.terms():
            m = 0
            for i, e in enumerate(exps):
                if e:
                    if idx[i] is None:
                        raise RingError(f"{src.names[i]} missing from target ring")
                    m |= e << (FIELD * idx[i])
            out[m] = c
        return Polynomial(ring, out)

    def diff(self, v) -> "Polynomial":
        idx = self.ring._index_of(v)
        out = {}
        for exps, c in self.terms():
            e = exps[idx]
            if e:
                ex = list(exps)
                ex[idx] -= 1
                out[pack(ex)] = c * e
        return Polynomial(self.ring, out)

    # printing ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = self.ring.names
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for i in self.ring.print_order:
                e = exps[i]
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            mono = "*".join(factors)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = _fmt_q(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_fmt_q(a)}*{mono}"
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _fmt_q(q) -> str:
    q = QQ(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _point_values(ring: Ring, point: Mapping, needed: set[int]) -> dict[int, object]:
    vals = {}
    for v, x in point.items():
        name = v.name if isinstance(v, VarId) else v
        if name in ring.index:
            vals[ring.index[name]] = QQ(x)
    missing = [ring.names[i] for i in needed if i not in vals]
    if missing:
        raise RingError(f"no value given for {', '.join(missing)}")
    return vals


def evaluate(p: Polynomial, point: Mapping):
    return p.evaluate(point)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(A\[\s*\d+\s*,\s*\d+\s*,\s*\d+\s*\]|[A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise RingError(f"cannot parse {text[pos:]!r}")
        num, name, op = mt.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", re.sub(r"\s+", "", name)))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = mt.end()
    return out


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``A[1,2,1]*A[2,3,1] + s*A[1,3,1]`` style text (``^`` or ``**`` powers,
    rational coefficients ``3/2``, parentheses)."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        kind, val = peek()
        sign = 1
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        acc = term() * sign
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term():
        acc = power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                acc = acc * power()
            elif kind == "op" and val == "/":
                take()
                d = power()
                if not d.is_constant() or d.is_zero():
                    raise RingError("can only divide by a nonzero constant")
                acc = acc * (1 / d.constant_term())
            else:
                return acc

    def power():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            k2, e = take()
            if k2 != "num":
                raise RingError("exponent must be a non-negative integer")
            return base ** int(e)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return ring.const(int(val))
        if kind == "name":
            return ring.gen(val)
        if kind == "op" and val == "(":
            inner = expr()
            k2, v2 = take()
            if v2 != ")":
                raise RingError("unbalanced parentheses")
            return inner
        if kind == "op" and val == "-":
            return -atom()
        raise RingError(f"unexpected token {val!r}")

    if not toks:
        raise RingError("empty polynomial text")
    result = expr()
    if pos != len(toks):
        raise RingError(f"trailing input in {text!r}")
    return result


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order description, independent of any ring.

    ``kind`` is ``"lex"``, ``"degrevlex"`` or ``"elim"``.  Elimination orders put
    the named variables in a first block that dominates the second; each block
    is graded reverse lexicographic.  ``weighted=True`` grades by the ring's
    weights instead of total degree.
    """

    def __init__(self, kind: str = "degrevlex", eliminate: Iterable[VarId | str] = (),
                 weighted: bool = False):
        if kind not in ("lex", "degrevlex", "elim"):
            raise ValueError(f"unknown order {kind}")
        self.kind = kind
        self.eliminate = frozenset(v.name if isinstance(v, VarId) else v for v in eliminate)
        if kind == "elim" and not self.eliminate:
            raise ValueError("elimination order needs variables to eliminate")
        self.weighted = weighted
        self._bound: dict[Ring, OrderKeys] = {}

    def _ident(self):
        return (self.kind, self.eliminate, self.weighted)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        extra = f", eliminate={sorted(self.eliminate)}" if self.eliminate else ""
        w = ", weighted" if self.weighted else ""
        return f"MonomialOrder({self.kind}{extra}{w})"

    def bind(self, ring: Ring) -> "OrderKeys":
        keys = self._bound.get(ring)
        if keys is None:
            keys = self._bound[ring] = OrderKeys(self, ring)
        return keys

    def compare(self, ring: Ring, a: Sequence[int], b: Sequence[int]) -> int:
        ka, kb = self.bind(ring).key(a), self.bind(ring).key(b)
        return (ka > kb) - (ka < kb)


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")
WDEGREVLEX = MonomialOrder("degrevlex", weighted=True)


def elimination_order(variables: Iterable[VarId | str], weighted: bool = False) -> MonomialOrder:
    return MonomialOrder("elim", variables, weighted)


class OrderKeys:
    """Integer sort keys realizing a monomial order on one ring.

    The key is additive (key(uv) = key(u) + key(v)) and strictly monotone in the
    order, so the Groebner engine can keep every term keyed by a single int.
    A degrevlex block over variables x_1..x_n has key ``wdeg * B^n - R`` where
    ``R`` packs exponents with x_n most significant; a lex block packs with x_1
    most significant.  Two blocks combine as ``key1 * W + key2``.
    """

    _SLACK = 48

    def __init__(self, order: MonomialOrder, ring: Ring):
        self.order = order
        self.ring = ring
        n = ring.ngens
        self.n = n
        w = ring.weights if order.weighted else (1,) * n
        self.weights = w
        if order.kind == "elim":
            first = [i for i in range(n) if ring.names[i] in order.eliminate]
            second = [i for i in range(n) if ring.names[i] not in order.eliminate]
            self.blocks = [(first, "revlex"), (second, "revlex")]
            self.blocks = [b for b in self.blocks if b[0]]
        elif order.kind == "lex":
            self.blocks = [(list(range(n)), "lex")]
        else:
            self.blocks = [(list(range(n)), "revlex")]
        self.fast_revlex = len(self.blocks) == 1 and self.blocks[0][1] == "revlex"
        self.fast_lex = len(self.blocks) == 1 and self.blocks[0][1] == "lex"
        self._mask_n = (1 << (FIELD * n)) - 1
        self.guard = ring.guard
        self._cache: dict[int, int] = {}
        if len(self.blocks) == 2:
            self._W = 1 << (FIELD * len(self.blocks[1][0]) + self._SLACK)

    def _block_key(self, block, exps) -> int:
        idx, kind = block
        if kind == "lex":
            k, nb = 0, len(idx)
            for t, i in enumerate(idx):
                k |= exps[i] << (FIELD * (nb - 1 - t))
            return k
        r, wdeg = 0, 0
        for t, i in enumerate(idx):
            e = exps[i]
            r |= e << (FIELD * t)
            wdeg += self.weights[i] * e
        return (wdeg << (FIELD * len(idx))) - r

    def key(self, exps: Sequence[int]) -> int:
        if len(self.blocks) == 1:
            return self._block_key(self.blocks[0], exps)
        if not self.blocks:
            return 0
        return self._block_key(self.blocks[0], exps) * self._W + self._block_key(self.blocks[1], exps)

    def key_of_packed(self, m: int) -> int:
        if self.fast_revlex:
            wdeg = 0
            mm = m
            for w in self.weights:
                wdeg += w * (mm & _FIELD_MASK)
                mm >>= FIELD
            return (wdeg << (FIELD * self.n)) - m
        return self.key(unpack(m, self.n))

    def packed_of_key(self, k: int) -> int:
        """Ring-order packed monomial with this key."""
        if self.fast_revlex:
            return (-k) & self._mask_n
        m = self._cache.get(k)
        if m is None:
            m = self._cache[k] = pack(self.exps_of_key(k))
        return m

    def exps_of_key(self, k: int) -> tuple[int, ...]:
        exps = [0] * self.n
        if not self.blocks:
            return tuple(exps)
        if len(self.blocks) == 2:
            nb2 = len(self.blocks[1][0])
            off = 1 << (FIELD * nb2)
            k2 = ((k + off) % self._W) - off
            k1 = (k - k2) // self._W
            parts = [(self.blocks[0], k1), (self.blocks[1], k2)]
        else:
            parts = [(self.blocks[0], k)]
        for (idx, kind), bk in parts:
            nb = len(idx)
            if kind == "lex":
                for t, i in enumerate(idx):
                    exps[i] = (bk >> (FIELD * (nb - 1 - t))) & _FIELD_MASK
            else:
                r = (-bk) & ((1 << (FIELD * nb)) - 1)
                for t, i in enumerate(idx):
                    exps[i] = (r >> (FIELD * t)) & _FIELD_MASK
        return tuple(exps)


# ---------------------------------------------------------------------------
# symbolic matrices


class SymbolicMatrix:
    """Square matrix of polynomials from one ring."""

    def __init__(self, ring: Ring, rows: Sequence[Sequence]):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise RingError("matrix must be square")
        conv = []
        for r in rows:
            row = []
            for x in r:
                if isinstance(x, Polynomial):
                    if x.ring != ring:
                        raise RingError("matrix entries must share one ring")
                    row.append(x)
                else:
                    row.append(ring.const(x))
            conv.append(tuple(row))
        self.ring = ring
        self.rows: tuple[tuple[Polynomial, ...], ...] = tuple(conv)
        self.dim = n

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "SymbolicMatrix":
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, n: int) -> "SymbolicMatrix":
        return cls(ring, [[0] * n for _ in range(n)])

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolicMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        return SymbolicMatrix(self.ring, [[a + b for a, b in zip(r1, r2)]
                                          for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        return SymbolicMatrix(self.ring, [[a - b for a, b in zip(r1, r2)]
                                          for r1, r2 in zip(self.rows, other.rows)])

    def __matmul__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        n = self.dim
        if other.dim != n:
            raise RingError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = self.ring.zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SymbolicMatrix(self.ring, out)

    def shift(self, e) -> "SymbolicMatrix":
        """``M - e * Id`` for a scalar or polynomial ``e``."""
        if not isinstance(e, Polynomial):
            e = self.ring.const(e)
        if e.is_zero():
            return self
        return SymbolicMatrix(self.ring, [[x - e if i == j else x for j, x in enumerate(r)]
                                          for i, r in enumerate(self.rows)])

    def map(self, f) -> "SymbolicMatrix":
        return SymbolicMatrix(self.ring, [[f(x) for x in r] for r in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int] | None = None) -> list[list[Polynomial]]:
        cols = rows if cols is None else cols
        return [[self.rows[i][j] for j in cols] for i in rows]

    def leading(self, p: int) -> "SymbolicMatrix":
        return SymbolicMatrix(self.ring, [list(r[:p]) for r in self.rows[:p]])

    def evaluate(self, point: Mapping) -> list[list]:
        return [[x.evaluate(point) for x in r] for r in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __str__(self) -> str:
        cells = self.to_strings()
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)


DET_DIM_LIMIT = 10


class DimensionError(RingError):
    pass


class _MinorCache:
    """Laplace expansion along the lowest row with memoization on
    (row-set, column-set) bitmasks; shared by every minor of one matrix."""

    def __init__(self, entries: Sequence[Sequence[Polynomial]], ring: Ring):
        self.a = entries
        self.ring = ring
        self.memo: dict[tuple[int, int], Polynomial] = {}

    def det(self, rmask: int, cmask: int) -> Polynomial:
        if rmask == 0:
            return self.ring.one
        key = (rmask, cmask)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        r = (rmask & -rmask).bit_length() - 1
        rest = rmask & ~(1 << r)
        row = self.a[r]
        acc = self.ring.zero
        sign = 1
        cm = cmask
        while cm:
            low = cm & -cm
            c = low.bit_length() - 1
            x = row[c]
            if x:
                sub = self.det(rest, cmask & ~low)
                if sub:
                    acc = acc + x * sub if sign > 0 else acc - x * sub
            sign = -sign
            cm &= cm - 1
        self.memo[key] = acc
        return acc


def _check_square(entries) -> int:
    n = len(entries)
    if any(len(r) != n for r in entries):
        raise RingError("matrix must be square")
    return n


def determinant(M: SymbolicMatrix | Sequence[Sequence[Polynomial]], ring: Ring | None = None,
                bound: int = DET_DIM_LIMIT) -> Polynomial:
    """Determinant by memoized cofactor expansion."""
    if isinstance(M, SymbolicMatrix):
        entries, ring = M.rows, M.ring
    else:
        entries = M
    n = _check_square(entries)
    if n > bound:
        raise DimensionError(f"dimension {n} exceeds determinant bound {bound}")
    if ring is None:
        raise RingError("ring required for a bare list of entries")
    full = (1 << n) - 1
    return _MinorCache(entries, ring).det(full, full)


def colex_subsets(n: int, r: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(n), r), key=lambda c: c[::-1])


def minors(M: SymbolicMatrix, r: int) -> list[Polynomial]:
    """All r x r minors; row sets in colex order, then column sets in colex order."""
    n = M.dim
    if not 1 <= r <= n:
        raise DimensionError(f"minor size {r} out of range 1..{n}")
    cache = _MinorCache(M.rows, M.ring)
    subsets = colex_subsets(n, r)
    masks = [sum(1 << i for i in c) for c in subsets]
    return [cache.det(rm, cm) for rm in masks for cm in masks]


def matrix_power(M: SymbolicMatrix, c: int) -> SymbolicMatrix:
    if c < 0:
        raise ValueError("negative matrix power")
    result = SymbolicMatrix.identity(M.ring, M.dim)
    base = M
    first = True
    while c:
        if c & 1:
            result = base if first else result @ base
            first = False
        c >>= 1
        if c:
            base = base @ base
    return result
