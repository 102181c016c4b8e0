"""Semistandard Young tableaux with entries in {1..m}: enumeration, GT patterns,
Lusztig data, padding, the section sigma and dominance padding.

A tableau is determined by its Lusztig datum ``n[(a,b)]`` (number of b's in
row a, a < b) together with its padding ``mu0[a]`` (number of a's in row a):
row a is ``a^mu0[a]`` followed by the non-padding entries in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Coweight = tuple[int, ...]


class TableauError(ValueError):
    pass


def pair_index(m: int) -> list[tuple[int, int]]:
    """Pairs (a, b), a < b, in the order (1,2),...,(1,m),(2,3),...,(m-1,m)."""
    return [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]


def _pad(v: Sequence[int], m: int) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) > m:
        if any(v[m:]):
            raise TableauError(f"{v} has more than {m} nonzero parts")
        v = v[:m]
    return v + (0,) * (m - len(v))


def is_partition(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) and all(a >= b for a, b in zip(v, v[1:]))


def is_dominant(v: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


@dataclass(frozen=True)
class Tableau:
    """Rows of entries in 1..m; rows are stored without trailing empty rows."""

    rows: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        if len(rows) > self.m:
            raise TableauError(f"{len(rows)} rows exceed m={self.m}")
        for a, row in enumerate(rows, start=1):
            if not row:
                raise TableauError("empty row above a non-empty row")
            if any(x < 1 or x > self.m for x in row):
                raise TableauError(f"entries must lie in 1..{self.m}")
            if any(x > y for x, y in zip(row, row[1:])):
                raise TableauError(f"row {a} is not weakly increasing")
        for a in range(len(rows) - 1):
            upper, lower = rows[a], rows[a + 1]
            if len(lower) > len(upper):
                raise TableauError("shape is not a partition")
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise TableauError(f"column strictness fails between rows {a + 1} and {a + 2}")

    # text -----------------------------------------------------------------

    @classmethod
    def parse(cls, text: str, m: int) -> "Tableau":
        text = text.strip()
        if text in ("-", ""):
            return cls((), m)
        rows = []
        for part in text.split("/"):
            part = part.strip()
            if not part.isdigit():
                raise TableauError(f"bad tableau row {part!r}")
            rows.append(tuple(int(ch) for ch in part))
        return cls(tuple(rows), m)

    def __str__(self) -> str:
        if not self.rows:
            return "-"
        return "/".join("".join(str(x) for x in r) for r in self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self}, m={self.m})"

    # data -----------------------------------------------------------------

    @property
    def shape(self) -> Partition:
        return _pad([len(r) for r in self.rows], self.m)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def weight(self) -> Coweight:
        w = [0] * self.m
        for r in self.rows:
            for x in r:
                w[x - 1] += 1
        return tuple(w)

    def row(self, a: int) -> tuple[int, ...]:
        return self.rows[a - 1] if a <= len(self.rows) else ()

    def is_empty(self) -> bool:
        return not self.rows


def parse_tableau(text: str, m: int) -> Tableau:
    return Tableau.parse(text, m)


# ---------------------------------------------------------------------------
# enumeration


def _horizontal_strips_below(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions nu with lam/nu a horizontal strip of size k (interlacing)."""
    n = len(lam)
    out: list[int] = [0] * n

    def rec(j: int, remaining: int):
        if j == n:
            if remaining == 0:
                yield tuple(out)
            return
        hi = lam[j]
        lo = lam[j + 1] if j + 1 < n else 0
        # choose removal amount r = lam[j] - nu[j] in [0, lam[j] - lo]
        for nu_j in range(hi, lo - 1, -1):
            r = hi - nu_j
            if r > remaining:
                break
            out[j] = nu_j
            yield from rec(j + 1, remaining - r)

    yield from rec(0, k)


def enumerate_tableaux(lam: Sequence[int], mu: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of shape ``lam`` and content ``mu``."""
    m = len(mu)
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise TableauError("content must be non-negative")
    lam = _pad(lam, m)
    if not is_partition(lam):
        raise TableauError(f"{lam} is not a partition")
    if sum(lam) != sum(mu):
        raise TableauError(f"|lambda|={sum(lam)} differs from |mu|={sum(mu)}")
    results: list[Tableau] = []
    chain: list[Partition] = [()] * (m + 1)
    chain[m] = lam

    def rec(i: int):
        # chain[i] fixed; choose chain[i-1] with chain[i]/chain[i-1] of size mu[i-1]
        if i == 0:
            if sum(chain[0]) == 0:
                results.append(_from_chain(chain, m))
            return
        for nu in _horizontal_strips_below(chain[i], mu[i - 1]):
            if any(nu[j] for j in range(i - 1, m)):
                continue  # entries <= i-1 occupy at most i-1 rows
            chain[i - 1] = nu
            rec(i - 1)

    rec(m)
    return results


def _from_chain(chain: Sequence[Partition], m: int) -> Tableau:
    rows = []
    for a in range(m):
        row = []
        for i in range(1, m + 1):
            row.extend([i] * (chain[i][a] - chain[i - 1][a]))
        rows.append(tuple(row))
    return Tableau(tuple(rows), m)


# ---------------------------------------------------------------------------
# GT patterns and Lusztig data


def gt_pattern(tau: Tableau) -> list[tuple[int, ...]]:
    """Rows lambda(1), ..., lambda(m); lambda(i) is the shape of the entries <= i."""
    m = tau.m
    pattern = []
    for i in range(1, m + 1):
        pattern.append(tuple(sum(1 for x in tau.row(a) if x <= i) for a in range(1, i + 1)))
    return pattern


def lusztig_datum(tau: Tableau) -> tuple[int, ...]:
    return tuple(sum(1 for x in tau.row(a) if x == b) for a, b in pair_index(tau.m))


def datum_from_gt(pattern: Sequence[Sequence[int]], m: int) -> tuple[int, ...]:
    """``n[(a,b)] = lambda(b)_a - lambda(b-1)_a`` read off a GT pattern."""
    return tuple(pattern[b - 1][a - 1] - pattern[b - 2][a - 1] for a, b in pair_index(m))


def parse_datum(text: str, m: int | None = None) -> tuple[int, ...]:
    parts = [p.strip() for p in text.replace(" ", "").split(",") if p.strip()]
    try:
        n = tuple(int(p) for p in parts)
    except ValueError:
        raise TableauError(f"bad Lusztig datum {text!r}") from None
    if any(x < 0 for x in n):
        raise TableauError("Lusztig data are non-negative")
    mm = datum_rank(len(n))
    if m is not None and mm != m:
        raise TableauError(f"datum of length {len(n)} does not fit m={m}")
    return n


def datum_rank(length: int) -> int:
    """The m with m(m-1)/2 == length."""
    m = 1
    while m * (m - 1) // 2 < length:
        m += 1
    if m * (m - 1) // 2 != length:
        raise TableauError(f"length {length} is not m(m-1)/2")
    return max(m, 1)


def format_datum(n: Sequence[int]) -> str:
    return ",".join(str(x) for x in n)


def padding(tau: Tableau) -> tuple[int, ...]:
    return tuple(sum(1 for x in tau.row(a) if x == a) for a in range(1, tau.m + 1))


def rho_dot(nu: Sequence[int], m: int | None = None) -> int:
    m = len(nu) if m is None else m
    nu = _pad(nu, m)
    return sum((m + 1 - a) * x for a, x in enumerate(nu, start=1))


def beta_sum(n: Sequence[int], m: int) -> tuple[int, ...]:
    """``sum n[(a,b)] * (e_a - e_b)``."""
    v = [0] * m
    for (a, b), k in zip(pair_index(m), n):
        v[a - 1] += k
        v[b - 1] -= k
    return tuple(v)


# ---------------------------------------------------------------------------
# padding


def _content_rows(n: Sequence[int], m: int) -> list[list[int]]:
    rows: list[list[int]] = [[] for _ in range(m)]
    for (a, b), k in zip(pair_index(m), n):
        rows[a - 1].extend([b] * k)
    return rows


def _compatible(upper: Sequence[int], lower: Sequence[int]) -> bool:
    return len(upper) >= len(lower) and all(upper[c] < lower[c] for c in range(len(lower)))


def _build(n: Sequence[int], mu0: Sequence[int], m: int) -> list[tuple[int, ...]]:
    content = _content_rows(n, m)
    return [tuple([a] * mu0[a - 1] + content[a - 1]) for a in range(1, m + 1)]


def _fill(n: Sequence[int], m: int, floor) -> tuple[int, ...]:
    """Bottom-up minimal padding: mu0[a] is the least value >= floor(a, mu0)
    whose row a sits validly above row a+1."""
    content = _content_rows(n, m)
    mu0 = [0] * m
    below: tuple[int, ...] = ()
    for a in range(m, 0, -1):
        k = floor(a, mu0)
        while True:
            row = tuple([a] * k + content[a - 1])
            if _compatible(row, below):
                break
            k += 1
        mu0[a - 1] = k
        below = row
    return tuple(mu0)


def minimal_padding(n: Sequence[int], m: int) -> tuple[int, ...]:
    return _fill(n, m, lambda a, mu0: 0)


def from_datum(n: Sequence[int], mu0: Sequence[int], m: int) -> Tableau:
    """Tableau with Lusztig datum ``n`` and padding ``mu0``."""
    n = tuple(n)
    if len(n) != m * (m - 1) // 2:
        raise TableauError(f"datum length {len(n)} does not fit m={m}")
    mu0 = _pad(mu0, m)
    if any(x < 0 for x in mu0) or any(x < 0 for x in n):
        raise TableauError("padding and datum must be non-negative")
    return Tableau(tuple(_build(n, mu0, m)), m)


def strip_padding(tau: Tableau) -> Tableau:
    """The stable tableau with the same Lusztig datum (least valid padding)."""
    n = lusztig_datum(tau)
    return from_datum(n, minimal_padding(n, tau.m), tau.m)


def is_stable(tau: Tableau) -> bool:
    return strip_padding(tau) == tau


def add_padding(tau: Tableau, mu0: Sequence[int]) -> Tableau:
    """Re-pad ``tau`` so that row a holds exactly ``mu0[a]`` copies of a."""
    return from_datum(lusztig_datum(tau), mu0, tau.m)


def _datum_weight(n: Sequence[int], m: int) -> list[int]:
    """Per entry i, the number of non-padding boxes holding i."""
    w = [0] * m
    for (a, b), k in zip(pair_index(m), n):
        w[b - 1] += k
    return w


def sigma(n: Sequence[int], m: int | None = None) -> Tableau:
    """Section of the Lusztig datum map: the least padding for which the
    tableau is semistandard with dominant weight."""
    n = tuple(int(x) for x in n)
    if m is None:
        m = datum_rank(len(n))
    if len(n) != m * (m - 1) // 2:
        raise TableauError(f"datum length {len(n)} does not fit m={m}")
    w = _datum_weight(n, m)

    def floor(a, mu0):
        if a == m:
            return 0
        return max(0, mu0[a] + w[a] - w[a - 1])

    return from_datum(n, _fill(n, m, floor), m)


def dominance_padding(t1: Tableau, t2: Tableau) -> tuple[Tableau, Tableau]:
    """Increase the padding of the larger tableau (the first on ties) as little
    as possible so that ``weight(t1) + weight(t2)`` is dominant."""
    if t1.m != t2.m:
        raise TableauError("tableaux must share m")
    m = t1.m
    total = tuple(a + b for a, b in zip(t1.weight, t2.weight))
    if is_dominant(total):
        return t1, t2
    swap = t2.size > t1.size
    big, other = (t2, t1) if swap else (t1, t2)
    n = lusztig_datum(big)
    cur = padding(big)
    wd = _datum_weight(n, m)
    W = [wd[i] + other.weight[i] for i in range(m)]

    def floor(a, mu0):
        if a == m:
            return cur[a - 1]
        return max(cur[a - 1], mu0[a] + W[a] - W[a - 1])

    new = from_datum(n, _fill(n, m, floor), m)
    return (t1, new) if swap else (new, t2)
