"""Symbolic Mirkovic-Vybornov slice matrices: T_mu, the upper-triangular family
U^{mu', mu''}, companion blocks and the m x m polynomial matrix g(A)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .polyring import Polynomial, Ring, SymbolicMatrix, VarId, ring_new, slice_var


class SliceError(ValueError):
    pass


@dataclass(frozen=True)
class BlockLayout:
    mu: tuple[int, ...]

    @property
    def N(self) -> int:
        return sum(self.mu)

    @property
    def bounds(self) -> tuple[int, ...]:
        """Prefix sums ``|mu(1)|, ..., |mu(m)|``."""
        out, acc = [], 0
        for x in self.mu:
            acc += x
            out.append(acc)
        return tuple(out)

    def start(self, i: int) -> int:
        """0-based first row/column of block i (1-based)."""
        return sum(self.mu[: i - 1])

    def last_row(self, i: int) -> int:
        return self.start(i) + self.mu[i - 1] - 1


@dataclass(frozen=True)
class SliceMatrix:
    matrix: SymbolicMatrix
    layout: BlockLayout
    variant: str  # "T_mu", "U_family" or "U_nilpotent"
    mu_prime: tuple[int, ...] | None = None
    mu_double_prime: tuple[int, ...] | None = None

    @property
    def ring(self) -> Ring:
        return self.matrix.ring

    @property
    def mu(self) -> tuple[int, ...]:
        return self.layout.mu

    def variables(self) -> list[VarId]:
        return [v for v in self.ring.variables if v.kind == "slice"]

    def pretty(self) -> str:
        return pretty(self)

    def to_rows(self) -> list[list[str]]:
        return self.matrix.to_strings()


def _check_mu(mu: Sequence[int]) -> tuple[int, ...]:
    mu = tuple(int(x) for x in mu)
    if not mu:
        raise SliceError("mu must be non-empty")
    if any(x < 0 for x in mu):
        raise SliceError(f"{mu} has negative parts")
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise SliceError(f"mu={mu} is not weakly decreasing")
    return mu


def companion(coeffs: Sequence[Polynomial], ring: Ring | None = None) -> SymbolicMatrix:
    """Companion matrix of the monic ``t^d + c_{d-1} t^{d-1} + ... + c_0`` given
    ``coeffs = [c_0, ..., c_{d-1}, 1]``: ones on the superdiagonal and the
    negated coefficients along the last row."""
    if ring is None:
        ring = next(c.ring for c in coeffs if isinstance(c, Polynomial))
    cs = [c if isinstance(c, Polynomial) else ring.const(c) for c in coeffs]
    d = len(cs) - 1
    if d < 1:
        raise SliceError("companion needs degree at least 1")
    if cs[-1] != ring.one:
        raise SliceError("polynomial must be monic")
    rows = [[ring.zero] * d for _ in range(d)]
    for r in range(d - 1):
        rows[r][r + 1] = ring.one
    for c in range(d):
        rows[d - 1][c] = -cs[c]
    return SymbolicMatrix(ring, rows)


def root_power_coeffs(ring: Ring, a: int, b: int, s: Polynomial | None = None) -> list[Polynomial]:
    """Coefficients (low to high) of ``t^a (t - s)^b``."""
    s = ring.gen("s") if s is None else s
    coeffs = [ring.one]
    for _ in range(b):
        # multiply by (t - s)
        nxt = [ring.zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - s * c
        coeffs = nxt
    return [ring.zero] * a + coeffs


def build_T(mu: Sequence[int]) -> SliceMatrix:
    """``J_{0,mu} + X`` with ``A[i,j,k]`` in the first min(mu_i, mu_j) columns of
    the last row of block (i, j)."""
    mu = _check_mu(mu)
    ring = ring_new(mu, with_parameter=False)
    layout = BlockLayout(mu)
    N = layout.N
    rows = [[ring.zero] * N for _ in range(N)]
    m = len(mu)
    for i in range(1, m + 1):
        st = layout.start(i)
        for r in range(mu[i - 1] - 1):
            rows[st + r][st + r + 1] = ring.one
        last = layout.last_row(i)
        for j in range(1, m + 1):
            sj = layout.start(j)
            for k in range(1, min(mu[i - 1], mu[j - 1]) + 1):
                rows[last][sj + k - 1] = ring.gen(slice_var(i, j, k))
    return SliceMatrix(SymbolicMatrix(ring, rows), layout, "T_mu")


def build_U(mu_prime: Sequence[int], mu_double_prime: Sequence[int], nilpotent: bool = False) -> SliceMatrix:
    """Block upper-triangular family: companion blocks of ``t^{mu'_i}(t-s)^{mu''_i}``
    on the diagonal, slice variables in blocks (i, j) with i < j."""
    mp = tuple(int(x) for x in mu_prime)
    mpp = tuple(int(x) for x in mu_double_prime)
    if len(mp) != len(mpp):
        raise SliceError("mu' and mu'' must have the same length")
    if any(x < 0 for x in mp + mpp):
        raise SliceError("mu' and mu'' must be effective")
    mu = _check_mu([a + b for a, b in zip(mp, mpp)])
    ring = ring_new(mu, with_parameter=not nilpotent, upper_only=True)
    layout = BlockLayout(mu)
    N = layout.N
    rows = [[ring.zero] * N for _ in range(N)]
    m = len(mu)
    for i in range(1, m + 1):
        d = mu[i - 1]
        if d == 0:
            continue
        st = layout.start(i)
        if nilpotent:
            coeffs = [ring.zero] * d + [ring.one]
        else:
            coeffs = root_power_coeffs(ring, mp[i - 1], mpp[i - 1])
        block = companion(coeffs, ring)
        for r in range(d):
            for c in range(d):
                rows[st + r][st + c] = block[r, c]
        last = layout.last_row(i)
        for j in range(i + 1, m + 1):
            sj = layout.start(j)
            for k in range(1, min(mu[i - 1], mu[j - 1]) + 1):
                rows[last][sj + k - 1] = ring.gen(slice_var(i, j, k))
    variant = "U_nilpotent" if nilpotent else "U_family"
    return SliceMatrix(SymbolicMatrix(ring, rows), layout, variant, mp, mpp)


def t_ring(ring: Ring) -> Ring:
    return ring if ring.has("t") else ring.extend(["t"])


def g_of_A(A: SliceMatrix) -> SymbolicMatrix:
    """``g(A)_{ij} = delta_ij t^{mu_i} - sum_k A^k_{ji} t^{k-1}``; the (j, i) block of
    A feeds entry (i, j).  Entries live in the slice ring extended by ``t``."""
    ring = t_ring(A.ring)
    t = ring.gen("t")
    mu, lay = A.mu, A.layout
    m = len(mu)
    M = A.matrix
    out = [[ring.zero] * m for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            acc = t ** mu[i - 1] if i == j else ring.zero
            if mu[j - 1]:
                last = lay.last_row(j)
                si = lay.start(i)
                for k in range(1, mu[i - 1] + 1):
                    x = M[last, si + k - 1]
                    if x:
                        acc = acc - x.map_to(ring) * t ** (k - 1)
            out[i - 1][j - 1] = acc
    return SymbolicMatrix(ring, out)


def char_matrix(A: SliceMatrix) -> SymbolicMatrix:
    """``t * Id - A`` over the ring extended by ``t``."""
    ring = t_ring(A.ring)
    t = ring.gen("t")
    n = A.matrix.dim
    return SymbolicMatrix(ring, [[(t if r == c else ring.zero) - A.matrix[r, c].map_to(ring)
                                  for c in range(n)] for r in range(n)])


def submatrix(A: SliceMatrix | SymbolicMatrix, p: int, require_invariant: bool = False) -> SymbolicMatrix:
    """Upper-left p x p block ``A|_{C^p}``."""
    if isinstance(A, SliceMatrix):
        M = A.matrix
        if require_invariant and p not in (0,) + A.layout.bounds:
            raise SliceError(f"p={p} is not a block-prefix size of {A.mu}")
        if require_invariant and A.variant == "T_mu" and p != M.dim and p != 0:
            raise SliceError("only block upper-triangular matrices preserve C^p")
    else:
        M = A
    if not 0 <= p <= M.dim:
        raise SliceError(f"p={p} out of range 0..{M.dim}")
    return SymbolicMatrix(M.ring, [list(r[:p]) for r in M.rows[:p]])


def pretty(A: SliceMatrix) -> str:
    """Block layout with ``|`` and ``-`` separators between blocks."""
    cells = A.matrix.to_strings()
    width = max((len(c) for r in cells for c in r), default=1)
    cuts = set(A.layout.bounds[:-1])
    lines = []
    n = A.matrix.dim
    for r in range(n):
        if r in cuts:
            lines.append("-" * (n * (width + 1) + 2 * len(cuts)))
        parts = []
        for c in range(n):
            if c in cuts:
                parts.append("|")
            parts.append(cells[r][c].rjust(width))
        lines.append(" ".join(parts))
    return "\n".join(lines)
