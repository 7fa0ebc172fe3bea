"""Integer lattices behind the spectral test, solved exactly.

The dual lattice of an LCG in dimension s is spanned by the rows
(N, 0, ..., 0) and (-(a^(j-1) mod N), ..., 1, ...); its nonzero minimum is the
spectral value v_s.  The solver is LLL reduction followed by exhaustive
Fincke-Pohst enumeration.  All Gram-Schmidt data is kept in exact rationals
and enumeration intervals are derived with integer square roots, so results
carry no floating-point error at all.  A direct congruence-scanning brute
force is provided as an independent cross-check.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionTooLarge, EmptyBox, InvalidParams

DEFAULT_ENUM_CAP = 12
ENUM_CAP_ENV = "LCGSPEC_ENUM_CAP"

_DELTA = Fraction(99, 100)


def resolve_enum_cap(cap: int | None = None) -> int:
    """Explicit argument, else the LCGSPEC_ENUM_CAP env var, else 12."""
    if cap is not None:
        return cap
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidParams(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None


def int_det(rows: tuple[tuple[int, ...], ...]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def canonical(vec: tuple[int, ...]) -> tuple[int, ...]:
    """Sign-normalize: first nonzero component made positive."""
    for x in vec:
        if x > 0:
            return tuple(vec)
        if x < 0:
            return tuple(-y for y in vec)
    return tuple(vec)


@dataclass(frozen=True)
class LatticeBasis:
    """Square integer basis, rows linearly independent."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n < 2:
            raise InvalidParams("lattice dimension must be >= 2")
        if any(len(r) != n for r in rows):
            raise InvalidParams("basis must be square")
        d = int_det(rows)
        if d == 0:
            raise InvalidParams("basis rows are linearly dependent")
        object.__setattr__(self, "_det", d)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def det(self) -> int:
        return self._det  # type: ignore[attr-defined]

    def to_json_dict(self) -> dict:
        return {"dim": self.dim, "rows": [[str(x) for x in r] for r in self.rows]}

    @staticmethod
    def from_json_dict(obj: dict) -> "LatticeBasis":
        rows = tuple(tuple(int(x) for x in r) for r in obj["rows"])
        basis = LatticeBasis(rows)
        if "dim" in obj and int(obj["dim"]) != basis.dim:
            raise InvalidParams("dim field disagrees with row count")
        return basis


@dataclass(frozen=True)
class ShortestVectorResult:
    norm_sq: int
    vector: tuple[int, ...]
    certified: bool

    def to_json_dict(self) -> dict:
        return {
            "norm_sq": str(self.norm_sq),
            "vector": [str(x) for x in self.vector],
            "certified": self.certified,
        }


def dual_basis(a: int, N: int, s: int) -> LatticeBasis:
    """Rows spanning {m : m_1 + a*m_2 + ... + a^(s-1)*m_s == 0 (mod N)}."""
    if N <= 0 or not 1 <= a < N:
        raise InvalidParams(f"need 1 <= a < N, got a={a}, N={N}")
    if s < 2:
        raise InvalidParams(f"dimension must be >= 2, got {s}")
    rows = [(N,) + (0,) * (s - 1)]
    for j in range(1, s):
        row = [0] * s
        row[0] = -pow(a, j, N)
        row[j] = 1
        rows.append(tuple(row))
    return LatticeBasis(tuple(rows))


def _gram_schmidt(rows) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact mu coefficients and squared orthogonal-vector norms."""
    n = len(rows)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar: list[list[Fraction]] = []
    bsq: list[Fraction] = []
    for i in range(n):
        v = [Fraction(x) for x in rows[i]]
        for j in range(i):
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(rows[i], bstar[j])) / bsq[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        q = sum(x * x for x in v)
        if q == 0:
            raise InvalidParams("basis rows are linearly dependent")
        bstar.append(v)
        bsq.append(q)
    return mu, bsq


def lll_reduce(basis: LatticeBasis, delta: Fraction = _DELTA) -> LatticeBasis:
    """Exact-arithmetic LLL; same lattice, size-reduced rows, Lovasz condition
    with the given delta (default 99/100)."""
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise InvalidParams(f"delta must lie in (1/4, 1), got {delta}")
    b = [list(r) for r in basis.rows]
    n = len(b)
    mu, bsq = _gram_schmidt(b)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                for jj in range(j):
                    mu[k][jj] -= r * mu[j][jj]
                mu[k][j] -= r
        if bsq[k] >= (delta - mu[k][k - 1] ** 2) * bsq[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, bsq = _gram_schmidt(b)
            k = max(k - 1, 1)
    return LatticeBasis(tuple(tuple(r) for r in b))


def _floor_add_sqrt(A: int, T: int, B: int) -> int:
    """floor((A + sqrt(T)) / B) computed exactly; needs T >= 0, B > 0."""
    x = (A + math.isqrt(T)) // B
    while True:
        y = B * (x + 1) - A
        if y <= 0 or y * y <= T:
            x += 1
        else:
            break
    while True:
        y = B * x - A
        if y > 0 and y * y > T:
            x -= 1
        else:
            break
    return x


def _interval(c: Fraction, q: Fraction) -> tuple[int, int]:
    """Integers u with (u + c)^2 <= q, as [lo, hi] (may be empty: lo > hi)."""
    cp, cr = c.numerator, c.denominator
    qn, qm = q.numerator, q.denominator
    T = cr * cr * qn * qm
    B = cr * qm
    hi = _floor_add_sqrt(-cp * qm, T, B)
    lo = -_floor_add_sqrt(cp * qm, T, B)
    return lo, hi


def shortest_vector(basis: LatticeBasis, cap: int | None = None) -> ShortestVectorResult:
    """Exact nonzero minimum of the lattice.

    LLL-reduces, seeds the search radius with the shortest reduced row, then
    enumerates every coefficient vector inside the radius.  Ties are broken by
    sign-canonicalizing and taking the lexicographically smallest vector.
    Candidate norms are recomputed in plain integer arithmetic.
    """
    cap = resolve_enum_cap(cap)
    if basis.dim > cap:
        raise DimensionTooLarge(f"dimension {basis.dim} exceeds enumeration cap {cap}")
    reduced = lll_reduce(basis)
    rows = reduced.rows
    n = reduced.dim
    mu, bsq = _gram_schmidt(rows)

    radius = min(sum(x * x for x in r) for r in rows)
    best_nsq = radius
    best_vec: tuple[int, ...] | None = None
    u = [0] * n

    def leaf() -> None:
        nonlocal best_nsq, best_vec
        v = [0] * n
        for j in range(n):
            if u[j]:
                for t in range(n):
                    v[t] += u[j] * rows[j][t]
        if not any(v):
            return
        nsq = sum(x * x for x in v)
        if nsq > best_nsq:
            return
        cand = canonical(tuple(v))
        if best_vec is None or nsq < best_nsq or (nsq == best_nsq and cand < best_vec):
            best_nsq = nsq
            best_vec = cand

    def rec(i: int, used: Fraction) -> None:
        rem = best_nsq - used
        if rem < 0:
            return
        c = Fraction(0)
        for j in range(i + 1, n):
            if u[j]:
                c += mu[j][i] * u[j]
        lo, hi = _interval(c, rem / bsq[i])
        if i == n - 1:
            lo = max(lo, 0)  # half-space is enough: -v is canonicalized to v
        for ui in range(lo, hi + 1):
            u[i] = ui
            term = bsq[i] * (ui + c) ** 2
            if used + term > best_nsq:
                continue
            if i == 0:
                leaf()
            else:
                rec(i - 1, used + term)
        u[i] = 0

    rec(n - 1, Fraction(0))
    assert best_vec is not None  # the shortest reduced row lies inside the radius
    return ShortestVectorResult(norm_sq=best_nsq, vector=best_vec, certified=True)


def brute_force_shortest(a: int, N: int, s: int, box: int) -> ShortestVectorResult:
    """Independent oracle: scan every nonzero m with |m_j| <= box satisfying
    m_1 + a*m_2 + ... + a^(s-1)*m_s == 0 (mod N), tracking the minimum norm.

    m_1 is solved from the congruence instead of looped, and branches whose
    partial sum already exceeds the best norm found are skipped (these can
    never improve on it, so the scan stays exhaustive in effect).  The result
    is certified only when box >= ceil(sqrt(norm_sq)): any vector sticking out
    of the box is then provably longer.
    """
    if N <= 0 or not 1 <= a < N:
        raise InvalidParams(f"need 1 <= a < N, got a={a}, N={N}")
    if s < 2:
        raise InvalidParams(f"dimension must be >= 2, got {s}")
    if box < 1:
        raise InvalidParams(f"box must be >= 1, got {box}")
    powers = [pow(a, j, N) for j in range(s)]
    best_nsq: int | None = None
    best_vec: tuple[int, ...] | None = None

    def consider(vec: tuple[int, ...]) -> None:
        nonlocal best_nsq, best_vec
        if not any(vec):
            return
        nsq = sum(x * x for x in vec)
        cand = canonical(vec)
        if best_nsq is None or nsq < best_nsq or (nsq == best_nsq and cand < best_vec):
            best_nsq = nsq
            best_vec = cand

    # trivial congruence solutions tighten the prune bound from the start
    if N <= box:
        consider((N,) + (0,) * (s - 1))
    if a <= box:
        consider((a, -1) + (0,) * (s - 2))

    m = [0] * s

    def bound() -> int:
        return best_nsq if best_nsq is not None else s * box * box

    def rec(j: int, acc: int, partial: int) -> None:
        if j == 0:
            r = (-acc) % N
            kmin = -((box - r) // N)
            kmax = (r + box) // N
            for k in range(kmin, kmax + 1):
                m1 = r - k * N
                if partial + m1 * m1 > bound():
                    continue
                m[0] = m1
                consider(tuple(m))
            m[0] = 0
            return
        d = 0
        while d <= box and partial + d * d <= bound():
            m[j] = d
            rec(j - 1, (acc + powers[j] * d) % N, partial + d * d)
            if d:
                m[j] = -d
                rec(j - 1, (acc - powers[j] * d) % N, partial + d * d)
            d += 1
        m[j] = 0

    rec(s - 1, 0, 0)
    if best_nsq is None or best_vec is None:
        raise EmptyBox(f"no nonzero solution with coordinates in [-{box}, {box}]")
    return ShortestVectorResult(
        norm_sq=best_nsq, vector=best_vec, certified=box * box >= best_nsq
    )
