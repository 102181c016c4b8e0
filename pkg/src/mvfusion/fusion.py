"""Fusion of MV cycles through rank conditions on the upper-triangular slice.

Pipeline for a pair of tableaux (t1, t2) with weights mu', mu'' and shapes
lambda', lambda'':

1. build the slice family U^{mu', mu''} over the parameter s;
2. I0: on every block-prefix submatrix A_i impose the rank bounds for
   eigenvalue 0 (from the GT row lambda'(i)) and eigenvalue s (lambda''(i));
3. F = I0 saturated by s, J = F + (s);
4. components: candidate tableaux tau of shape lambda and weight mu with
   J inside P_tau = X(tau) + (s); multiplicity = deg(Q_tau) / deg(P_tau).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .groebner import Reducer, ResourceBudgetExceeded
from .idealkit import (EmptySchemeError, Ideal, MultiplicityError, degree, dimension,
                       intersect, minimal_primes, saturate)
from .polyring import (DEGREVLEX, LEX, QQ, WDEGREVLEX, Polynomial, Ring, SymbolicMatrix,
                       _MinorCache, colex_subsets, matrix_power)
from .slice import BlockLayout, build_U, submatrix
from .tableaux import (Tableau, dominance_padding, enumerate_tableaux, gt_pattern,
                       is_dominant, lusztig_datum, rho_dot, sigma, strip_padding)

DEFAULT_SEED = 20160807


class TheoryViolation(RuntimeError):
    """A computed result contradicts a guarantee of the theory (a bug or a
    counterexample); carries human-readable diagnostics."""

    def __init__(self, message: str, diagnostics: Sequence[str] = ()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)


# ---------------------------------------------------------------------------
# rank conditions


def column_count(nu: Sequence[int], c: int) -> int:
    """Boxes in the first c columns of nu."""
    return sum(min(x, c) for x in nu)


@dataclass(frozen=True)
class RankBound:
    p: int            # submatrix size
    eigenvalue: str   # "0" or "s"
    power: int        # c
    rank: int         # maximal rank r


def rank_bounds(p: int, eigenvalue: str, nu: Sequence[int]) -> list[RankBound]:
    nu = [x for x in nu if x]
    if not nu:
        return []
    if sum(nu) > p:
        raise ValueError(f"|nu|={sum(nu)} exceeds p={p}")
    return [RankBound(p, eigenvalue, c, p - column_count(nu, c)) for c in range(1, nu[0] + 1)]


def _shifted_power(A: SymbolicMatrix, eigenvalue: str, c: int) -> SymbolicMatrix:
    M = A.shift(A.ring.gen("s")) if eigenvalue == "s" else A
    return matrix_power(M, c)


def _rect_minors(entries: Sequence[Sequence[Polynomial]], ring: Ring, r: int) -> list[Polynomial]:
    nr, nc = len(entries), len(entries[0]) if entries else 0
    if r > min(nr, nc):
        return []
    cache = _MinorCache(entries, ring)
    rmasks = [sum(1 << i for i in c) for c in colex_subsets(nr, r)]
    cmasks = [sum(1 << i for i in c) for c in colex_subsets(nc, r)]
    return [cache.det(rm, cm) for rm in rmasks for cm in cmasks]


def rank_ideal(A: SymbolicMatrix, eigenvalue: str, nu: Sequence[int]) -> list[Polynomial]:
    """All (r+1)-minors of (A - e)^c for c = 1..nu_1, zero minors omitted."""
    out: list[Polynomial] = []
    seen = set()
    for b in rank_bounds(A.dim, eigenvalue, nu):
        M = _shifted_power(A, eigenvalue, b.power)
        for g in _rect_minors(M.rows, A.ring, b.rank + 1):
            if g and g not in seen:
                seen.add(g)
                out.append(g)
    return out


def _unit_like(x: Polynomial, allow_s: bool) -> bool:
    if x.is_constant():
        return not x.is_zero()
    if not allow_s or len(x) != 1:
        return False
    ring = x.ring
    if not ring.has("s"):
        return False
    return x.support() == {ring.index["s"]}


def _drop_zero_lines(M: list[list[Polynomial]]) -> list[list[Polynomial]]:
    M = [row for row in M if any(row)]
    if not M:
        return M
    keep = [c for c in range(len(M[0])) if any(row[c] for row in M)]
    return [[row[c] for c in keep] for row in M]


def reduce_determinantal(entries: Sequence[Sequence[Polynomial]], size: int, ring: Ring,
                         reducer: Reducer | None = None, allow_s: bool = False
                         ) -> tuple[list[list[Polynomial]], int]:
    """Shrink (matrix, minor size) without changing the ideal of size-minors.

    Each pivot on a unit entry u replaces M by the fraction-free Schur
    complement u*M_ij - M_ib*M_aj and size by size - 1.  Constant pivots are
    exact; pivots on powers of s (``allow_s``) are exact after inverting s.
    Entries are reduced modulo ``reducer`` (valid when the result is added to
    the ideal the reducer represents).  A returned size <= 0 means the unit
    ideal; an empty matrix with positive size means the zero ideal.
    """
    M = [[reducer(x) if reducer and x else x for x in row] for row in entries]
    while True:
        M = _drop_zero_lines(M)
        if size <= 0:
            return M, size
        if not M or size > min(len(M), len(M[0])):
            return [], size
        pivot = None
        best = None
        for a, row in enumerate(M):
            for b, x in enumerate(row):
                if x and _unit_like(x, allow_s):
                    score = (0 if x.is_constant() else 1, x.degree())
                    if best is None or score < best:
                        best, pivot = score, (a, b)
        if pivot is None:
            return M, size
        a, b = pivot
        u = M[a][b]
        nxt = []
        for i, row in enumerate(M):
            if i == a:
                continue
            new_row = []
            mib = row[b]
            for j, x in enumerate(row):
                if j == b:
                    continue
                y = M[a][j]
                v = u * x if x else x
                if mib and y:
                    v = v - mib * y
                if v and reducer is not None:
                    v = reducer(v)
                new_row.append(v)
            nxt.append(new_row)
        M = nxt
        size -= 1


def _monic_unique(polys: Sequence[Polynomial]) -> list[Polynomial]:
    out, seen = [], set()
    for g in polys:
        if g.is_zero():
            continue
        g = g.monic()
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def reduced_rank_generators(A: SymbolicMatrix, bound: RankBound, reducer: Reducer | None,
                            allow_s: bool) -> list[Polynomial]:
    M = _shifted_power(A, bound.eigenvalue, bound.power)
    R, size = reduce_determinantal(M.rows, bound.rank + 1, A.ring, reducer, allow_s)
    if size <= 0:
        return [A.ring.one]
    return _monic_unique(_rect_minors(R, A.ring, size))


def witness(A: SymbolicMatrix, bound: RankBound, rng: random.Random, allow_s: bool) -> Polynomial | None:
    """A random combination of the r x r minors of (A - e)^c (after exact or
    s-local pivoting); None when the witness is a unit (nothing to saturate)."""
    if bound.rank <= 0:
        return None
    M = _shifted_power(A, bound.eigenvalue, bound.power)
    R, size = reduce_determinantal(M.rows, bound.rank, A.ring, None, allow_s)
    if size <= 0:
        return None
    minors = _monic_unique(_rect_minors(R, A.ring, size))
    if not minors:
        raise TheoryViolation(f"rank {bound.rank} is unattainable for {bound}")
    if any(g.is_constant() for g in minors):
        return None
    h = A.ring.zero
    for g in minors:
        h = h + g * rng.randint(1, 97)
    return h


# ---------------------------------------------------------------------------
# incremental ideal assembly


class _Builder:
    """Accumulates rank conditions, keeping a Groebner basis of the running
    ideal (saturated by s when ``saturate_s``) for reducing later entries."""

    def __init__(self, ring: Ring, saturate_s: bool):
        self.ring = ring
        self.saturate_s = saturate_s
        self.ideal = Ideal(ring, [])
        self.raw: list[Polynomial] = []
        self._reducer: Reducer | None = None

    def reducer(self) -> Reducer | None:
        if self.ideal.is_zero():
            return None
        if self._reducer is None:
            self._reducer = self.ideal.reducer(WDEGREVLEX)
        return self._reducer

    def add(self, gens: Sequence[Polynomial]) -> None:
        gens = [g for g in gens if g]
        if not gens:
            return
        self.raw.extend(gens)
        I = self.ideal + list(gens)
        if self.saturate_s:
            I = saturate(I, self.ring.gen("s"))
        self.ideal = Ideal(self.ring, I.groebner(WDEGREVLEX))
        self._reducer = None


def prefix_conditions(mu: Sequence[int], shapes: Sequence[Sequence[int]], eigenvalue: str
                      ) -> list[tuple[int, list[RankBound]]]:
    """(i, bounds) for every block i with mu_i > 0, p = |mu(i)|, nu = shapes[i-1]."""
    lay = BlockLayout(tuple(mu))
    out = []
    for i, p in enumerate(lay.bounds, start=1):
        if mu[i - 1] == 0 or p == 0:
            continue
        out.append((i, rank_bounds(p, eigenvalue, shapes[i - 1])))
    return out


# ---------------------------------------------------------------------------
# generalized orbital varieties


@dataclass
class GovarResult:
    tableau: Tableau
    ideal: Ideal                 # prime ideal of X(tau) in T_mu cap n
    rank_ideal: Ideal            # K_tau (s-free rank conditions)
    saturated: Ideal             # K_tau saturated by the witnesses
    dimension: int
    unverified: bool = False


def govar_ideal(tau: Tableau, seed: int = DEFAULT_SEED) -> Ideal:
    return govar(tau, seed).ideal


@lru_cache(maxsize=512)
def govar(tau: Tableau, seed: int = DEFAULT_SEED) -> GovarResult:
    """Prime ideal of the generalized orbital variety X(tau) in T_mu cap n."""
    mu = tau.weight
    if not is_dominant(mu):
        raise ValueError(f"weight {mu} of {tau} is not dominant")
    U = build_U(mu, (0,) * len(mu), nilpotent=True)
    ring = U.ring
    target = rho_dot([a - b for a, b in zip(tau.shape, mu)], tau.m)
    if ring.ngens == 0:
        I = Ideal(ring, [])
        return GovarResult(tau, I, I, I, 0)
    gt = gt_pattern(tau)
    rng = random.Random(seed)
    builder = _Builder(ring, saturate_s=False)
    witnesses: list[Polynomial] = []
    for i, bounds in prefix_conditions(mu, gt, "0"):
        Ai = submatrix(U, BlockLayout(mu).bounds[i - 1])
        for b in bounds:
            builder.add(reduced_rank_generators(Ai, b, builder.reducer(), allow_s=False))
        for b in bounds:
            h = witness(Ai, b, rng, allow_s=False)
            if h is not None:
                witnesses.append(h)
    K = builder.ideal
    sat = K
    for h in witnesses:
        if sat.is_unit():
            break
        hr = sat.reduce(h) if not sat.is_zero() else h
        if hr.is_constant():
            continue
        sat = Ideal(ring, saturate(sat, hr).groebner())
    if sat.is_unit():
        raise TheoryViolation(f"X({tau}) is empty after saturation")
    primes = minimal_primes(sat)
    top = [P for P in primes if dimension(P) == target]
    if len(top) != 1 or any(dimension(P) > target for P in primes):
        raise TheoryViolation(
            f"X({tau}) does not have a unique component of dimension {target}",
            [f"prime of dimension {dimension(P)}: {P}" for P in primes])
    P = top[0]
    return GovarResult(tau, P, K, sat, target, unverified=P in primes.unverified)


# ---------------------------------------------------------------------------
# generic ranks and points


def generic_rank(M: Sequence[Sequence[Polynomial]], P: Ideal) -> int:
    """Rank of M over the fraction field of R/P (P prime), by fraction-free
    elimination with normal-form zero tests."""
    red = P.reducer() if not P.is_zero() else (lambda x: x)
    rows = [[red(x) if x else x for x in r] for r in M]
    rank = 0
    while rows:
        piv = None
        for a, r in enumerate(rows):
            for b, x in enumerate(r):
                if x:
                    piv = (a, b)
                    break
            if piv:
                break
        if piv is None:
            break
        a, b = piv
        u = rows[a][b]
        nxt = []
        for i, r in enumerate(rows):
            if i == a:
                continue
            f = r[b]
            new = []
            for j, x in enumerate(r):
                if j == b:
                    continue
                v = u * x if x else x
                if f and rows[a][j]:
                    v = v - f * rows[a][j]
                new.append(red(v) if v else v)
            nxt.append(new)
        rows = nxt
        rank += 1
    return rank


def generic_jordan_type(P: Ideal, A: SymbolicMatrix, eigenvalue: str = "0") -> tuple[int, ...]:
    """Jordan type (for one eigenvalue) of the generic point of V(P)."""
    p = A.dim
    counts = [0]
    c = 1
    prev_rank = p
    while True:
        M = _shifted_power(A, eigenvalue, c)
        r = generic_rank(M.rows, P)
        if r > prev_rank:
            raise TheoryViolation("ranks of powers increase; input is not prime")
        counts.append(p - r)
        if r == prev_rank:
            break
        prev_rank = r
        c += 1
    conj = [counts[k] - counts[k - 1] for k in range(1, len(counts)) if counts[k] - counts[k - 1] > 0]
    # conj is the conjugate partition (column lengths); transpose back
    if not conj:
        return ()
    return tuple(sum(1 for x in conj if x > j) for j in range(conj[0]))


def random_point(P: Ideal, seed: int = DEFAULT_SEED) -> dict | None:
    """A random rational point of V(P), when fixing a maximal independent set of
    variables leaves a linear system; None otherwise."""
    ring = P.ring
    rng = random.Random(seed)
    lead = [g.lead_monomial(DEGREVLEX) for g in P.groebner()]
    n = ring.ngens
    supports = [sum(1 << i for i, e in enumerate(g) if e) for g in lead]
    free = None
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            mask = sum(1 << i for i in subset)
            if all(sup & ~mask for sup in supports):
                free = subset
                break
        if free is not None:
            break
    for _attempt in range(20):
        point = {ring.names[i]: QQ(rng.randint(-9, 9)) for i in free}
        subs = {i: point[ring.names[i]] for i in free}
        rest = [g.subs(subs) for g in P.groebner()]
        rest = [g for g in rest if g]
        if not rest:
            full = dict(point)
            for i in range(n):
                full.setdefault(ring.names[i], QQ(0))
            if all(g.evaluate(full) == 0 for g in P.gens):
                return full
            continue
        sol = Ideal(ring, rest).groebner(LEX)
        if len(sol) == 1 and sol[0].is_constant():
            continue
        if any(g.degree() > 1 for g in sol):
            return None
        full = dict(point)
        for g in sol:
            (lm, _), = [(e, c) for e, c in g.terms() if sum(e) == 1][:1] or [((), None)]
            if not lm:
                return None
            idx = lm.index(1)
            full[ring.names[idx]] = -g.constant_term()
        for i in range(n):
            full.setdefault(ring.names[i], QQ(0))
        if all(g.evaluate(full) == 0 for g in P.gens):
            return full
    return None


def numeric_rank(rows: Sequence[Sequence]) -> int:
    M = [[QQ(x) for x in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c] / M[rank][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# fusion


@dataclass
class FusionProblem:
    t1: Tableau
    t2: Tableau
    mode: str = "paper"
    given: tuple[Tableau, Tableau] | None = None

    @property
    def m(self) -> int:
        return self.t1.m

    @property
    def mu1(self) -> tuple[int, ...]:
        return self.t1.weight

    @property
    def mu2(self) -> tuple[int, ...]:
        return self.t2.weight

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.mu1, self.mu2))

    @property
    def lam1(self) -> tuple[int, ...]:
        return self.t1.shape

    @property
    def lam2(self) -> tuple[int, ...]:
        return self.t2.shape

    @property
    def lam(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.lam1, self.lam2))


def make_problem(t1: Tableau, t2: Tableau, mode: str = "paper") -> FusionProblem:
    if t1.m != t2.m:
        raise ValueError("tableaux must share m")
    if mode not in ("paper", "strict"):
        raise ValueError(f"unknown mode {mode}")
    p1, p2 = dominance_padding(t1, t2)
    return FusionProblem(p1, p2, mode, (t1, t2))


@dataclass
class ComponentReport:
    tableau: Tableau
    stable: Tableau
    prime: Ideal
    primary: Ideal
    multiplicity: int
    degree: int


@dataclass
class FusionResult:
    problem: FusionProblem
    components: list[ComponentReport]
    I0: Ideal
    F: Ideal
    J: Ideal
    degree_J: int
    mode: str
    diagnostics: list[str] = field(default_factory=list)

    def products(self) -> dict[str, int]:
        return {str(c.stable): c.multiplicity for c in self.components}

    def degree_sum(self) -> int:
        return sum(c.multiplicity * c.degree for c in self.components)

    def summary(self) -> str:
        return "  ".join(f"{c.stable}:{c.multiplicity}" for c in self.components)

    def to_dict(self) -> dict:
        t1, t2 = self.problem.given or (self.problem.t1, self.problem.t2)
        return {
            "input": [str(t1), str(t2)],
            "mode": self.mode,
            "mu": list(self.problem.mu),
            "lambda": list(self.problem.lam),
            "components": [
                {
                    "tableau": str(c.tableau),
                    "stable": str(c.stable),
                    "multiplicity": c.multiplicity,
                    "prime": [str(g) for g in _display_gens(c.prime)],
                    "primary": [str(g) for g in _display_gens(c.primary)],
                    "degree": c.degree,
                }
                for c in self.components
            ],
            "degree_J": self.degree_J,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _display_gens(I: Ideal) -> list[Polynomial]:
    return sorted(I.groebner(), key=lambda g: (g.degree(), len(g), str(g)))


def family_ideal(problem: FusionProblem, seed: int = DEFAULT_SEED) -> tuple[Ideal, Ideal]:
    """(I0, F) for the family over the parameter line.

    The returned I0 generators are the rank conditions after pivoting and
    reduction against earlier conditions; they generate I0 up to inverting s,
    which is all that F = I0 : s^oo depends on.
    """
    U = build_U(problem.mu1, problem.mu2)
    ring = U.ring
    mu = problem.mu
    gt1, gt2 = gt_pattern(problem.t1), gt_pattern(problem.t2)
    lay = BlockLayout(mu)
    builder = _Builder(ring, saturate_s=True)
    rng = random.Random(seed)
    witnesses = []
    conds1 = dict(prefix_conditions(mu, gt1, "0"))
    conds2 = dict(prefix_conditions(mu, gt2, "s"))
    for i in sorted(set(conds1) | set(conds2)):
        Ai = submatrix(U, lay.bounds[i - 1])
        for b in conds1.get(i, []) + conds2.get(i, []):
            builder.add(reduced_rank_generators(Ai, b, builder.reducer(), allow_s=True))
            h = witness(Ai, b, rng, allow_s=True)
            if h is not None:
                witnesses.append(h)
    I0 = Ideal(ring, builder.raw)
    F = _saturate_witnesses(builder.ideal, witnesses)
    if problem.mode == "strict":
        F = _strict_family(problem, F)
    return I0, F


def _saturate_witnesses(F: Ideal, witnesses: Sequence[Polynomial]) -> Ideal:
    """Impose the rank equalities: drop the loci where some rank falls short."""
    for h in witnesses:
        hr = F.reduce(h)
        if hr.is_constant():
            continue
        F = Ideal(F.ring, saturate(F, hr).groebner())
    return F


def _strict_family(problem: FusionProblem, F: Ideal) -> Ideal:
    target = rho_dot([a - b for a, b in zip(problem.lam, problem.mu)], problem.m) + 1
    primes = minimal_primes(F)
    top = [P for P in primes if dimension(P) == target]
    if len(top) != 1:
        raise TheoryViolation("family does not have a unique top-dimensional component",
                              [f"dim {dimension(P)}: {P}" for P in primes])
    return top[0]


def zero_fiber(F: Ideal) -> Ideal:
    """J = F + (s), with s set to 0 in a Groebner basis of F."""
    ring = F.ring
    s = ring.gen("s")
    gens = [g.subs({"s": 0}) for g in F.groebner(WDEGREVLEX)]
    return Ideal(ring, [g for g in gens if g] + [s])


def candidate_primes(problem: FusionProblem, ring: Ring, seed: int = DEFAULT_SEED
                     ) -> list[tuple[Tableau, Ideal]]:
    s = ring.gen("s")
    out = []
    for tau in enumerate_tableaux(problem.lam, problem.mu):
        X = govar(tau, seed).ideal
        out.append((tau, Ideal(ring, [g.map_to(ring) for g in X.gens] + [s])))
    return out


def identify_components(J: Ideal, problem: FusionProblem, seed: int = DEFAULT_SEED
                        ) -> list[tuple[Tableau, Ideal]]:
    found = [(tau, P) for tau, P in candidate_primes(problem, J.ring, seed) if P.contains(J)]
    for a in range(len(found)):
        for b in range(a + 1, len(found)):
            if found[a][1] == found[b][1]:
                raise TheoryViolation(f"candidates {found[a][0]} and {found[b][0]} share a prime")
    return found


def check_coverage(J: Ideal, found: Sequence[tuple[Tableau, Ideal]]) -> list[str]:
    """Minimal primes of J that match no candidate (should be empty)."""
    problems = []
    primes = minimal_primes(J)
    for Q in primes:
        if not any(Q == P for _, P in found):
            problems.append(f"minimal prime {Q} matches no candidate tableau")
    return problems


def fuse(t1: Tableau, t2: Tableau, mode: str = "paper", seed: int = DEFAULT_SEED,
         verify_coverage: bool = False) -> FusionResult:
    """Decompose the zero fiber of the fusion family of (t1, t2)."""
    problem = make_problem(t1, t2, mode)
    I0, F = family_ideal(problem, seed)
    J = zero_fiber(F)
    diagnostics = []
    if J.is_unit():
        raise TheoryViolation("zero fiber is empty")
    found = identify_components(J, problem, seed)
    if not found:
        raise TheoryViolation("no candidate tableau contains the zero fiber")
    if verify_coverage:
        missing = check_coverage(J, found)
        if missing:
            raise TheoryViolation("zero fiber has unexplained components", missing)
    degree_J = degree(J)
    rng = random.Random(seed)
    reports = []
    for idx, (tau, P) in enumerate(found):
        others = [Q for k, (_, Q) in enumerate(found) if k != idx]
        Q = primary_at(J, others, rng)
        dq, dp = degree(Q), degree(P)
        if dimension(Q) != dimension(P):
            raise TheoryViolation(f"primary component at {tau} has the wrong dimension")
        if dq % dp:
            raise MultiplicityError(f"degree ratio {dq}/{dp} at {tau} is not an integer")
        reports.append(ComponentReport(tau, strip_padding(tau), P, Q, dq // dp, dp))
    reports.sort(key=lambda c: (sum(1 for r in c.stable.rows if r), str(c.stable)))
    result = FusionResult(problem, reports, I0, F, J, degree_J, mode, diagnostics)
    if result.degree_sum() != degree_J:
        raise TheoryViolation(
            f"degree additivity fails: deg J = {degree_J}, sum = {result.degree_sum()}")
    return result


def primary_at(J: Ideal, others: Sequence[Ideal], rng: random.Random) -> Ideal:
    """J saturated by the intersection of ``others`` (J itself when empty).

    Saturating by an ideal H equals saturating by a generic element of H; the
    element is a random combination of generators of the intersection.
    """
    if not others:
        return J
    H = others[0]
    for Q in others[1:]:
        H = intersect(H, Q)
    h = J.ring.zero
    for g in H.groebner():
        h = h + g * rng.randint(1, 97)
    h = J.reduce(h)
    return Ideal(J.ring, saturate(J, h).groebner())


def flatness_degrees(result: FusionResult) -> tuple[int, int]:
    """(degree of the generic fiber F + (s - 1), degree of J)."""
    F = result.F
    s = F.ring.gen("s")
    return degree(F + (s - 1)), result.degree_J


def fuse_data(n1: Sequence[int], n2: Sequence[int], m: int, mode: str = "paper",
              seed: int = DEFAULT_SEED) -> FusionResult:
    """Fuse the cycles with Lusztig data n1, n2 via their sigma tableaux."""
    return fuse(sigma(n1, m), sigma(n2, m), mode, seed)


def multiplicities(result: FusionResult) -> dict[str, int]:
    return result.products()
