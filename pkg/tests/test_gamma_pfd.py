import math

import pytest

from omega_zeta import (
    AccelerationMethod,
    DivergenceError,
    gamma,
    gamma_pair,
    gamma_pfd_series,
    integer_sequence,
    inverse_square_series,
    modulus_product,
    shifted_integer_sequence,
    summation_identity_check,
    trigamma,
)

CVZ = AccelerationMethod.CHEBYSHEV_ALTERNATING
EULER = AccelerationMethod.EULER_TRANSFORM
NONE = AccelerationMethod.NO_ACCELERATION


def test_gamma_pair_values():
    assert abs(gamma_pair(1.0, 0.5) - math.pi / 2) < 1e-13
    a = 2.3
    assert abs(gamma_pair(a, 0.0) - gamma(a) ** 2) < 1e-12 * abs(gamma(a)) ** 2
    assert abs(gamma_pair(0.5, 0.25) - math.pi * math.sqrt(2)) < 1e-12


def test_summation_identity_integers():
    lhs, rhs = summation_identity_check(integer_sequence(), 64, CVZ)
    assert abs(rhs.real - math.pi ** 2 / 6) < 1e-9
    assert abs(lhs.real + trigamma(65.0) - math.pi ** 2 / 6) < 1e-13


def test_summation_identity_shifted_reduces_to_integers():
    seq = shifted_integer_sequence(1.0)
    for n in (1, 2, 5, 10):
        assert seq.term(n) == float(n)
        assert abs(seq.fprime_at(n) - (-1.0) ** n) < 1e-13


def test_summation_identity_shifted():
    seq = shifted_integer_sequence(1.3)
    lhs, _ = summation_identity_check(seq, 10000)
    assert abs(lhs.real + trigamma(1.3 + 10000.0) - trigamma(1.3)) < 1e-10
    _, rhs = summation_identity_check(seq, 256, EULER)
    assert abs(rhs.real - trigamma(1.3)) < 1e-6


def test_modulus_product_cases():
    assert abs(modulus_product(1.0, 0.5, 1000) - math.pi / 2) < 1e-8
    assert modulus_product(2.0, 0.0, 1) == 1.0
    ref = gamma_pair(2.5, 0.7j) / gamma(2.5) ** 2
    assert abs(modulus_product(2.5, 0.7j, 1000) - ref) < 1e-8 * abs(ref)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.5])
def test_modulus_product_agreement_grid(a):
    for frac in (0.1, 0.5, 0.9):
        z = frac * a
        ref = gamma_pair(a, z) / gamma(a) ** 2
        assert abs(modulus_product(a, z, 1000) - ref) < 1e-8 * abs(ref)


def test_series_raw_convergent_regime():
    for a in (0.5, 0.8, 1.0, 1.25):
        for z in (0.1, 0.3, 0.45, 0.2j):
            rep = gamma_pfd_series(a, z, 1000, NONE)
            err = abs(rep.value - gamma_pair(a, z))
            assert err <= 5 * rep.error_estimate


def test_series_z_zero_gives_gamma_squared():
    for a in (0.5, 1.7, 3.0):
        rep = gamma_pfd_series(a, 0.0, 1, NONE)
        assert abs(rep.value - gamma(a).real ** 2) < 1e-12 * gamma(a).real ** 2


def test_series_regularized_regime():
    for a in (1.5, 2.0, 3.0):
        for z in (0.1, 0.3, 0.45, 0.2j):
            rep = gamma_pfd_series(a, z, 64, EULER)
            ref = gamma_pair(a, z)
            assert abs(rep.value - ref) < 1e-6 * abs(ref)


def test_series_divergence_detected():
    with pytest.raises(DivergenceError):
        gamma_pfd_series(3.0, 0.4, 64, NONE)


def test_series_even_in_z():
    for a in (0.5, 2.0):
        for z in (0.3, 0.2j, 0.1 + 0.1j):
            assert (gamma_pfd_series(a, z, 48, EULER).value
                    == gamma_pfd_series(a, -z, 48, EULER).value)


def test_inverse_square_collapse_at_zero():
    rep = inverse_square_series(0.0, 1000, NONE)
    assert abs(rep.value - math.pi ** 2 / 6) < 1e-5


@pytest.mark.parametrize("q", [0.0, 0.5, 1.0, 2.5])
def test_inverse_square_vs_trigamma(q):
    rep = inverse_square_series(q, 64, EULER)
    assert abs(rep.value - trigamma(q + 1.0)) < 1e-6


def test_inverse_square_divergence_detected():
    with pytest.raises(DivergenceError):
        inverse_square_series(2.5, 64, NONE)
