"""Spectral figures of merit and the accuracy theorems.

v_s is the exact lattice minimum from `lattice`; mu_s rescales it against the
best packing achievable at the same modulus.  For maximum-period parameter
families, the potential profile (tau, lambda) selects one of four regimes and
each regime carries proven lower/upper estimates on v_s; those are encoded
here with their preconditions checked explicitly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParams, LcgspecError, NoPotential, PotentialOne, Unsupported
from .lattice import dual_basis, shortest_vector
from .lcg import PotentialProfile, compute_potential

# Best-known packing constants gamma_s for s = 2..8.
_GAMMA = {
    2: (4 / 3) ** 0.25,
    3: 2 ** (1 / 6),
    4: 2**0.25,
    5: 2**0.3,
    6: (64 / 3) ** (1 / 12),
    7: 2 ** (3 / 7),
    8: 2**0.5,
}


class Regime(enum.Enum):
    S_EQ_TAU_2 = "S_EQ_TAU_2"
    S_EQ_TAU_GE3 = "S_EQ_TAU_GE3"
    S_LT_TAU = "S_LT_TAU"
    S_GT_TAU = "S_GT_TAU"


def _log_int(n: int) -> float:
    """Natural log that survives integers far beyond float range."""
    if n <= 0:
        raise ValueError("log of non-positive integer")
    if n.bit_length() <= 512:
        return math.log(n)
    shift = n.bit_length() - 53
    return math.log(n >> shift) + shift * math.log(2)


def _log_value(x: int | Fraction) -> float:
    if isinstance(x, Fraction):
        return _log_int(x.numerator) - _log_int(x.denominator)
    return _log_int(x)


def _sqrt_to_float(sq: int | Fraction) -> float:
    return math.exp(0.5 * _log_value(sq))


def b_coefficient(s: int) -> int:
    """Largest magnitude among the negative coefficients of (x - 1)^s,
    i.e. max over odd k of C(s, k)."""
    if s < 2:
        raise InvalidParams(f"need s >= 2, got {s}")
    return max(math.comb(s, k) for k in range(1, s + 1, 2))


def merit(s: int, v_sq: int | Fraction, N: int) -> float:
    """mu_s = pi^(s/2) * v_s^s / (Gamma(s/2 + 1) * N), evaluated in floats
    (relative error well under 1e-12 even for huge inputs)."""
    if s < 2:
        raise InvalidParams(f"need s >= 2, got {s}")
    if N <= 0 or (v_sq if isinstance(v_sq, int) else v_sq.numerator) <= 0:
        raise InvalidParams("need v_sq > 0 and N > 0")
    half = s / 2.0
    return math.exp(
        half * math.log(math.pi)
        + half * _log_value(v_sq)
        - math.lgamma(half + 1.0)
        - _log_int(N)
    )


def knuth_bound(s: int, N: int) -> float:
    """Unconditional bound gamma_s * N^(1/s) on v_s, tabulated for s = 2..8."""
    if s not in _GAMMA:
        raise Unsupported(f"no tabulated constant for s = {s} (supported: 2..8)")
    if N <= 0:
        raise InvalidParams(f"N must be positive, got {N}")
    return _GAMMA[s] * math.exp(_log_int(N) / s)


def classify_regime(s: int, profile: PotentialProfile) -> Regime:
    if s < 2:
        raise InvalidParams(f"need s >= 2, got {s}")
    tau = profile.tau
    if s == tau:
        return Regime.S_EQ_TAU_2 if s == 2 else Regime.S_EQ_TAU_GE3
    return Regime.S_LT_TAU if s < tau else Regime.S_GT_TAU


@dataclass(frozen=True)
class TheoremBounds:
    """Proven estimates on v_s (and the induced mu_s window) for one regime.

    Square bounds are exact integers whenever the estimate is an integer
    expression.  `lower_unverified` marks the one estimate encoded from its
    source without independent verification; it is reported but must not be
    hard-asserted.
    """

    theorem_id: int
    s: int
    lower: float | None
    upper: float | None
    lower_exact_sq: int | None
    upper_exact_sq: int | None
    mu_lower: float | None
    mu_upper: float | None
    conditions_met: tuple[str, ...]
    violations: tuple[str, ...]
    lower_unverified: bool = False
    # squared bounds as exact rationals, even when not integer expressions
    lower_sq: int | Fraction | None = None
    upper_sq: int | Fraction | None = None

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "s": self.s,
            "lower": self.lower,
            "upper": self.upper,
            "lower_exact_sq": None if self.lower_exact_sq is None else str(self.lower_exact_sq),
            "upper_exact_sq": None if self.upper_exact_sq is None else str(self.upper_exact_sq),
            "mu_lower": self.mu_lower,
            "mu_upper": self.mu_upper,
            "conditions_met": list(self.conditions_met),
            "violations": list(self.violations),
            "lower_unverified": self.lower_unverified,
        }


def theorem_bounds(a: int, profile: PotentialProfile, s: int) -> TheoremBounds:
    """Select and evaluate the estimate matching (s, tau, lambda).

    Violated preconditions never raise: the affected side is omitted and the
    reason recorded, so reports stay total.
    """
    tau, lam = profile.tau, profile.lam
    if a < 2 or s < 2 or tau < 2 or lam < 1:
        raise InvalidParams("need a >= 2, s >= 2, tau >= 2, lambda >= 1")
    am1 = a - 1
    pw = am1**tau
    if pw % lam != 0:
        raise InvalidParams(f"lambda = {lam} does not divide (a-1)^tau")
    N = pw // lam
    regime = classify_regime(s, profile)

    met: list[str] = []
    bad: list[str] = []
    lower_sq: int | Fraction | None = None
    upper_sq: int | Fraction | None = None
    lower_unverified = False

    if regime is Regime.S_EQ_TAU_2:
        if lam == 1:
            theorem_id = 1
            if a >= 5:
                met.append("a >= 5")
                lower_sq = upper_sq = 1 + (a - 2) ** 2
            else:
                bad.append("a < 5")
        else:
            theorem_id = 3
            lower_sq = Fraction(1 + (a - 2) ** 2, lam * lam)
            lower_unverified = True  # encoded as printed, reported but not asserted
            if am1 % lam == 0:
                met.append("lambda divides a-1")
                upper_sq = 2 * (am1 // lam) ** 2
            else:
                bad.append("lambda does not divide a-1 (upper estimate needs it)")
    elif regime is Regime.S_EQ_TAU_GE3:
        b = b_coefficient(s)
        if lam == 1:
            theorem_id = 2
            if a >= b + 1:
                met.append(f"a >= b_{s} + 1")
                lower_sq = (a - b) ** 2
                upper_sq = a * a + 1
            else:
                bad.append(f"a <= b_{s} = {b}")
        else:
            theorem_id = 5
            if a >= b + 1:
                met.append(f"a >= b_{s} + 1")
                lower_sq = Fraction((a - b) ** 2, lam * lam)
                if am1 % lam == 0:
                    met.append("lambda divides a-1")
                    upper_sq = (am1 // lam) ** 2 * math.comb(2 * (s - 1), s - 1)
                else:
                    bad.append("lambda does not divide a-1 (upper estimate needs it)")
            else:
                bad.append(f"a <= b_{s} = {b}")
    elif regime is Regime.S_LT_TAU:
        theorem_id = 6
        b = b_coefficient(s)
        if a < b + 1:
            bad.append(f"a <= b_{s} = {b}")
        elif lam > am1 ** (tau - s):
            bad.append("lambda > (a-1)^(tau-s)")
        else:
            met.append(f"a >= b_{s} + 1")
            met.append("lambda <= (a-1)^(tau-s)")
            lower_sq = (a - b) ** 2
            upper_sq = a * a + 1
    else:
        theorem_id = 7
        upper_sq = math.comb(2 * tau, tau)  # sum of C(tau, k)^2

    def _f(x: int | Fraction | None) -> float | None:
        return None if x is None else _sqrt_to_float(x)

    def _m(x: int | Fraction | None) -> float | None:
        return None if x is None else merit(s, x, N)

    return TheoremBounds(
        theorem_id=theorem_id,
        s=s,
        lower=_f(lower_sq),
        upper=_f(upper_sq),
        lower_exact_sq=lower_sq if isinstance(lower_sq, int) else None,
        upper_exact_sq=upper_sq if isinstance(upper_sq, int) else None,
        mu_lower=_m(lower_sq),
        mu_upper=_m(upper_sq),
        conditions_met=tuple(met),
        violations=tuple(bad),
        lower_unverified=lower_unverified,
        lower_sq=lower_sq,
        upper_sq=upper_sq,
    )


@dataclass(frozen=True)
class SpectralResult:
    """Exact spectral value of (a, N) in dimension s plus derived figures."""

    a: int
    N: int
    s: int
    v_sq: int
    v: float
    vector: tuple[int, ...]
    mu: float
    certified: bool
    profile: PotentialProfile | None
    regime: Regime | None
    bounds: TheoremBounds | None

    @property
    def lg_v(self) -> float:
        return 0.5 * _log_value(self.v_sq) / math.log(10)

    def to_json_dict(self) -> dict:
        return {
            "a": str(self.a),
            "N": str(self.N),
            "s": self.s,
            "v_sq": str(self.v_sq),
            "v": self.v,
            "lg_v": self.lg_v,
            "vector": [str(x) for x in self.vector],
            "mu": self.mu,
            "certified": self.certified,
            "tau": None if self.profile is None else self.profile.tau,
            "lambda": None if self.profile is None else str(self.profile.lam),
            "regime": None if self.regime is None else self.regime.value,
            "bounds": None if self.bounds is None else self.bounds.to_json_dict(),
        }


def spectral_test(a: int, N: int, s: int, cap: int | None = None) -> SpectralResult:
    """Exact v_s via the dual-lattice shortest vector, with mu_s, the regime
    classification and theorem bounds attached when (a, N) has a potential
    profile; without one the lattice figures still come back.
    """
    if not 2 <= a < N:
        raise InvalidParams(f"need 2 <= a < N, got a={a}, N={N}")
    res = shortest_vector(dual_basis(a, N, s), cap)
    v_sq = res.norm_sq
    profile = regime = bounds = None
    try:
        profile = compute_potential(a, N)
    except (NoPotential, PotentialOne):
        pass
    if profile is not None:
        regime = classify_regime(s, profile)
        bounds = theorem_bounds(a, profile, s)
        if bounds.theorem_id == 1 and bounds.lower_exact_sq is not None:
            if v_sq != bounds.lower_exact_sq:
                raise LcgspecError(
                    f"solver value {v_sq} contradicts the exact dimension-2 "
                    f"formula {bounds.lower_exact_sq} for a={a}, N={N}"
                )
    return SpectralResult(
        a=a,
        N=N,
        s=s,
        v_sq=v_sq,
        v=_sqrt_to_float(v_sq),
        vector=res.vector,
        mu=merit(s, v_sq, N),
        certified=res.certified,
        profile=profile,
        regime=regime,
        bounds=bounds,
    )
