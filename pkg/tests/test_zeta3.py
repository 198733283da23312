import math

import mpmath as mp
import pytest

from omega_zeta import (
    DivergenceError,
    PrecisionConfig,
    Zeta3Variant,
    hyperbolic_term,
    log_cosh,
    log_gamma,
    log_sinh,
    p_poly,
    q_poly,
    sine_term,
    zeta3_series,
    zeta_oracle,
    zeta_term,
)
from omega_zeta.zeta3 import beta_series_term, inner_double_sum

mp.mp.dps = 40

SQRT3 = math.sqrt(3.0)
ZETA3 = zeta_oracle(3)


def test_p_poly_small():
    assert abs(p_poly(1)) < 1e-15  # P(1) = 1
    assert abs(p_poly(2) - math.log(63)) < 1e-14


def test_q_poly_small():
    assert abs(q_poly(1) - math.log(4)) < 1e-15
    assert abs(q_poly(2) - math.log(208)) < 1e-14


@pytest.mark.parametrize("d", [10, 50])
def test_pq_poly_vs_multiprecision(d):
    p_ref = mp.fsum(mp.log((k - mp.mpf(1) / 2) ** 2
                           + mp.mpf(3) / 4 * (2 * d - 1) ** 2)
                    for k in range(1, d + 1))
    q_ref = mp.fsum(mp.log(k ** 2 + 3 * d ** 2) for k in range(1, d + 1))
    assert abs(p_poly(d) - float(p_ref)) < 1e-12 * float(p_ref)
    assert abs(q_poly(d) - float(q_ref)) < 1e-12 * float(q_ref)


def test_sine_terms_match_series_terms():
    for n in range(1, 21):
        ref = zeta_term(3, n).value
        assert abs(sine_term(n).value - ref) <= 1e-9 * abs(ref)


def test_hyperbolic_terms_match_series_terms():
    for n in range(1, 21):
        ref = zeta_term(3, n).value
        assert abs(hyperbolic_term(n).value - ref) <= 1e-9 * abs(ref)


def test_hyperbolic_first_odd_term():
    ref = 3 * math.pi / math.cosh(SQRT3 * math.pi / 2)
    assert abs(hyperbolic_term(1).value - ref) < 1e-13 * ref


def test_gamma_pair_identities():
    for d in range(1, 16):
        lhs = 2.0 * log_gamma(complex(1 + d, SQRT3 * d)).log_mag
        rhs = (math.log(SQRT3 * math.pi * d) + q_poly(d)
               - log_sinh(SQRT3 * math.pi * d))
        assert abs(math.expm1(lhs - rhs)) < 1e-9
        lhs = 2.0 * log_gamma(complex(0.5 + d, SQRT3 * (2 * d - 1) / 2)).log_mag
        rhs = (math.log(math.pi) + p_poly(d)
               - log_cosh(SQRT3 * math.pi * (2 * d - 1) / 2))
        assert abs(math.expm1(lhs - rhs)) < 1e-9


def test_hyperbolic_sum():
    rep = zeta3_series(Zeta3Variant.HYPERBOLIC, PrecisionConfig(max_terms=12))
    assert abs(rep.value - ZETA3) < 1e-9


def test_sine_sum():
    rep = zeta3_series(Zeta3Variant.SINE, PrecisionConfig(max_terms=40))
    assert abs(rep.value - ZETA3) < 1e-6


def test_beta_sum():
    rep = zeta3_series(Zeta3Variant.BETA, PrecisionConfig(max_terms=40))
    assert abs(rep.value - ZETA3) < 1e-5


def test_inner_double_sum_matches_term_decomposition():
    # the regularized inner sum plus the Beta part reassembles the
    # series term; classically convergent for n <= 3, regularized above
    for n in range(1, 16):
        ref = zeta_term(3, n).value - beta_series_term(n)
        value, noise = inner_double_sum(n)
        assert abs(value - ref) < max(1e-9, 10 * noise)


def test_inner_double_sum_divergence_flagged():
    with pytest.raises(DivergenceError):
        inner_double_sum(6, regularized=False)
    # raw summation converges, but only at an inverse-square rate
    value, _ = inner_double_sum(2, k_terms=1000, regularized=False)
    ref = zeta_term(3, 2).value - beta_series_term(2)
    assert abs(value - ref) < 1e-5


def test_no_overflow_to_200():
    for n in range(1, 201):
        assert math.isfinite(sine_term(n).log_mag)
        assert math.isfinite(hyperbolic_term(n).log_mag)


def test_variants_within_own_estimates():
    for variant in Zeta3Variant:
        rep = zeta3_series(variant, PrecisionConfig(max_terms=40))
        assert abs(rep.value - ZETA3) <= 5 * rep.error_estimate
