"""Tests for generator construction and certificate validation."""

import json
from fractions import Fraction

import pytest

from lcgspec import (
    InvalidParams,
    LambdaInvalid,
    LcgParams,
    PeriodBroken,
    PotentialProfile,
    TooSmall,
    compute_potential,
    theorem_bounds,
)
from lcgspec.builder import (
    BuildRequest,
    BuiltGenerator,
    MultiplierRecipe,
    build,
    build_range,
    build_single_dimension,
    validate,
)


class TestMultiplierRecipe:
    def test_explicit(self):
        r = MultiplierRecipe(a=26)
        assert r.resolve(2, None) == 26
        assert r.resolve(2, 20) == 26  # 26 - 2 = 24 > 20

    def test_explicit_min_accuracy_not_met(self):
        with pytest.raises(TooSmall):
            MultiplierRecipe(a=26).resolve(2, 30)

    def test_shape_kernel(self):
        r = MultiplierRecipe(d=3, primes=(2, 5), exponents=(3, 1))
        assert r.kernel() == 40
        assert r.resolve(2, None) == 121

    def test_shape_scales_whole_kernel(self):
        r = MultiplierRecipe(d=1, primes=(2,), exponents=(2,))
        # 5, 17, 65 all fail a - 2 > 100; 257 clears it
        assert r.resolve(2, 100) == 257

    def test_unit_kernel_cannot_scale(self):
        with pytest.raises(TooSmall):
            MultiplierRecipe(d=5).resolve(2, 10)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"a": 1},
            {"d": 0},
            {"primes": (2, 3), "exponents": (1,)},
            {"primes": (2,), "exponents": (0,)},
            {"primes": (9,), "exponents": (1,)},
            {"primes": (5, 3), "exponents": (1, 1)},
            {"primes": (3, 3), "exponents": (1, 1)},
            {"d": 2, "primes": (2,), "exponents": (1,)},
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(InvalidParams):
            MultiplierRecipe(**kwargs)


class TestBuildSingleDimension:
    def test_classic_small(self):
        g = build_single_dimension(2, MultiplierRecipe(a=26))
        assert g.params == LcgParams(a=26, c=1, N=625, x0=0)
        assert g.profile == PotentialProfile(2, 1)
        assert g.covers_s_max == 2
        assert g.uniform_lower_sq == 577
        assert not g.uniform_lower_unverified
        assert g.certificate()[0]["statement"] == "v_2^2 = 577 (theorem 1)"

    def test_tuned_large(self):
        g = build_single_dimension(2, MultiplierRecipe(a=1664525), min_accuracy=10**6)
        assert g.params.N == 1664524**2
        assert g.uniform_lower_sq == 1 + 1664523**2

    def test_prime_power_shape(self):
        g = build_single_dimension(5, MultiplierRecipe(d=1, primes=(2,), exponents=(7,)))
        assert g.params.a == 129
        assert g.params.N == 2**35
        assert g.covers_s_max == 5
        # weakest certified dimension is s = 5 with b_5 = 10
        assert g.uniform_lower_sq == (129 - 10) ** 2 == 14161

    def test_min_accuracy_scales_shape(self):
        g = build_single_dimension(2, MultiplierRecipe(d=1, primes=(2,), exponents=(2,)),
                                   min_accuracy=100)
        assert g.params.a == 257
        assert g.params.N == 256**2

    def test_profile_round_trip(self):
        for s, a in [(2, 21), (3, 21), (4, 30)]:
            g = build_single_dimension(s, MultiplierRecipe(a=a))
            assert compute_potential(g.params.a, g.params.N) == PotentialProfile(s, 1)

    def test_too_small(self):
        with pytest.raises(TooSmall):
            build_single_dimension(2, MultiplierRecipe(a=3))  # threshold is 5
        with pytest.raises(TooSmall):
            build_single_dimension(5, MultiplierRecipe(a=10))  # b_5 = 10 needs a >= 11

    def test_period_broken(self):
        # a = 7: N = 36 is divisible by 4 while a - 1 = 6 is not
        with pytest.raises(PeriodBroken, match="divisible by 4"):
            build_single_dimension(2, MultiplierRecipe(a=7))

    def test_rejects_small_s(self):
        with pytest.raises(InvalidParams):
            build_single_dimension(1, MultiplierRecipe(a=26))


class TestBuildRange:
    def test_full_range_tau_six(self):
        g = build_range(6, 0, 1, MultiplierRecipe(a=69069))
        assert g.params.N == 69068**6
        assert g.profile == PotentialProfile(6, 1)
        assert g.covers_s_max == 6
        assert g.uniform_lower_sq == (69069 - 20) ** 2 == 4767764401
        stmts = [e["statement"] for e in g.certificate()]
        assert len(stmts) == 5
        assert stmts[0] == "v_2^2 >= 4770250489; v_2^2 <= 4770526762 (theorem 6)"
        assert stmts[4] == "v_6^2 >= 4767764401; v_6^2 <= 4770526762 (theorem 2)"

    def test_excess_power_with_kernel(self):
        # t = tau + l = 3, lambda = 2 divides 4^3 and stays in the window
        g = build_range(2, 1, 2, MultiplierRecipe(a=5))
        assert g.params.N == 4**3 // 2 == 32
        assert g.profile == PotentialProfile(3, 2)
        assert g.covers_s_max == 2
        assert g.guaranteed[0].theorem_id == 6
        assert not g.uniform_lower_unverified

    def test_lambda_window(self):
        with pytest.raises(LambdaInvalid):
            build_range(3, 0, 7, MultiplierRecipe(a=6))  # window is [1, 1]
        with pytest.raises(LambdaInvalid):
            build_range(2, 1, 7, MultiplierRecipe(a=6))  # window is [1, 5]

    def test_lambda_must_divide(self):
        with pytest.raises(LambdaInvalid, match="does not divide"):
            build_range(2, 1, 3, MultiplierRecipe(a=5))  # 3 does not divide 64

    def test_rejects(self):
        with pytest.raises(InvalidParams):
            build_range(1, 0, 1, MultiplierRecipe(a=26))
        with pytest.raises(InvalidParams):
            build_range(2, -1, 1, MultiplierRecipe(a=26))
        with pytest.raises(LambdaInvalid):
            build_range(2, 0, 0, MultiplierRecipe(a=26))


class TestBuildDispatch:
    def test_single(self):
        req = BuildRequest(mode="single", s=2, recipe=MultiplierRecipe(a=26))
        assert build(req).params == LcgParams(26, 1, 625, 0)

    def test_range(self):
        req = BuildRequest(mode="range", tau=2, l=1, lam=2, recipe=MultiplierRecipe(a=5))
        assert build(req).params.N == 32

    def test_rejects(self):
        with pytest.raises(InvalidParams):
            build(BuildRequest(mode="single", recipe=MultiplierRecipe(a=26)))
        with pytest.raises(InvalidParams):
            build(BuildRequest(mode="range", recipe=MultiplierRecipe(a=26)))
        with pytest.raises(InvalidParams):
            build(BuildRequest(mode="best", s=2, recipe=MultiplierRecipe(a=26)))


class TestCertificateJson:
    def test_shape(self):
        d = build_range(6, 0, 1, MultiplierRecipe(a=69069)).to_json_dict()
        assert d["a"] == "69069" and d["c"] == "1" and d["x0"] == "0"
        assert d["N"] == str(69068**6)
        assert d["tau"] == 6 and d["lambda"] == "1"
        assert d["covers"] == {"s_min": 2, "s_max": 6}
        assert d["uniform_lower_sq"] == "4767764401"
        assert d["uniform_lower_unverified"] is False
        assert len(d["certificate"]) == 5
        json.dumps(d)

    def test_fraction_bound_rendering(self):
        g = BuiltGenerator(
            params=LcgParams(13, 1, 16, 0),
            profile=PotentialProfile(2, 9),
            covers_s_max=2,
            guaranteed=(theorem_bounds(13, PotentialProfile(2, 9), 2),),
            uniform_lower_sq=Fraction(122, 81),
            uniform_lower_unverified=True,
        )
        d = g.to_json_dict()
        assert d["uniform_lower_sq"] == "122/81"
        assert "v_2^2 >= 122/81" in d["certificate"][0]["statement"]


class TestValidate:
    def test_exact_build_passes(self):
        g = build_single_dimension(2, MultiplierRecipe(a=26))
        rep = validate(g, 3)
        assert rep.ok
        assert [r.s for r in rep.rows] == [2, 3]
        names = [c.name for c in rep.rows[0].checks]
        assert names == [
            "v_2^2 >= 577 (theorem 1)",
            "v_2^2 <= 577 (theorem 1)",
            "v_2 within the dimension-2 packing bound",
        ]
        # beyond coverage only the packing bound applies
        assert [c.name for c in rep.rows[1].checks] == [
            "v_3 within the dimension-3 packing bound"
        ]

    def test_tuned_build_passes(self):
        g = build_single_dimension(2, MultiplierRecipe(a=1664525))
        rep = validate(g, 3)
        assert rep.ok
        assert rep.rows[0].v_sq == 1 + 1664523**2

    def test_beyond_tabulated_dimensions(self):
        g = build_single_dimension(2, MultiplierRecipe(a=26))
        rep = validate(g, 9)
        assert rep.ok
        assert rep.rows[-1].s == 9
        assert rep.rows[-1].checks == ()  # no certificate, no tabulated constant
        assert rep.rows[-1].v_sq == 4

    def test_reports_failures_without_raising(self):
        good = build_single_dimension(2, MultiplierRecipe(a=26))
        # certificate for a = 27 pinned onto the a = 26 generator
        fake = BuiltGenerator(
            params=good.params,
            profile=good.profile,
            covers_s_max=2,
            guaranteed=(theorem_bounds(27, PotentialProfile(2, 1), 2),),
            uniform_lower_sq=626,
            uniform_lower_unverified=False,
        )
        rep = validate(fake, 2)
        assert not rep.ok
        lower = rep.rows[0].checks[0]
        assert lower.name == "v_2^2 >= 626 (theorem 1)"
        assert not lower.passed
        assert rep.rows[0].checks[1].passed  # upper still holds
        assert rep.to_json_dict()["ok"] is False

    def test_informational_checks_do_not_gate(self):
        g = BuiltGenerator(
            params=LcgParams(13, 1, 16, 0),
            profile=PotentialProfile(2, 9),
            covers_s_max=2,
            guaranteed=(theorem_bounds(13, PotentialProfile(2, 9), 2),),
            uniform_lower_sq=Fraction(122, 81),
            uniform_lower_unverified=True,
        )
        rep = validate(g, 2)
        assert rep.ok
        first = rep.rows[0].checks[0]
        assert first.informational and first.passed

    def test_json_round_trip(self):
        rep = validate(build_single_dimension(2, MultiplierRecipe(a=26)), 2)
        d = rep.to_json_dict()
        assert d["ok"] is True
        assert d["rows"][0]["v_sq"] == "577"
        assert json.loads(json.dumps(d)) == d

    def test_rejects_small_s_max(self):
        g = build_single_dimension(2, MultiplierRecipe(a=26))
        with pytest.raises(InvalidParams):
            validate(g, 1)
