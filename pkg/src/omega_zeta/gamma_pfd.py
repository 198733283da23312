"""Partial-fraction machinery for Gamma(a+z)Gamma(a-z).

Contains the summation identity for symmetric sequences, the product
form of Gamma(a+z)Gamma(a-z)/Gamma(a)^2, the partial-fraction series
for Gamma(a+z)Gamma(a-z), and the derived series for sum 1/(q+n)^2.

The partial-fraction series converges classically only while its terms
(which scale like k^(2a-3)) decay; outside that regime term growth is
detected at runtime and an Euler transform must be used, which
annihilates the polynomial growth by finite differencing.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .accel import (
    AccelerationMethod,
    ConvergenceReport,
    SeriesTermTrace,
    euler_average,
    sum_alternating,
)
from .errors import DivergenceError, DomainError, PoleError
from .special import log_gamma, trigamma

__all__ = [
    "SymmetricSequence",
    "integer_sequence",
    "shifted_integer_sequence",
    "summation_identity_check",
    "gamma_pair",
    "modulus_product",
    "gamma_pfd_series",
    "inverse_square_series",
]

_POLE_DIST = 1e-8


@dataclass(frozen=True)
class SymmetricSequence:
    """A sequence a_n with sum 1/|a_n|^2 < inf, together with F'(-a_n)
    for the canonical even-zero product F(z) = z * prod(1 - (z/a_n)^2).
    """

    label: str
    term: Callable[[int], complex]
    fprime_at: Callable[[int], complex]


def integer_sequence() -> SymmetricSequence:
    """a_n = n, for which F(z) = sin(pi z)/pi and F'(-n) = (-1)^n."""
    return SymmetricSequence(
        "integers",
        term=lambda n: float(n),
        fprime_at=lambda n: -1.0 if n % 2 else 1.0,
    )


def shifted_integer_sequence(a: float) -> SymmetricSequence:
    """a_n = a - 1 + n with the closed form
    F'(-a_n) = Gamma(a)^2 * (-1)^n * (a+n-1) * (n-1)! / Gamma(2a+n-1).
    """
    if a <= 0:
        raise DomainError(f"need a > 0, got {a}")
    two_lg_a = 2.0 * math.lgamma(a)

    def fprime(n: int) -> float:
        log_mag = (two_lg_a + math.log(a + n - 1.0) + math.lgamma(float(n))
                   - math.lgamma(2.0 * a + n - 1.0))
        sign = -1.0 if n % 2 else 1.0
        return sign * math.exp(log_mag)

    return SymmetricSequence(
        f"shifted(a={a})",
        term=lambda n: a - 1.0 + n,
        fprime_at=fprime,
    )


def summation_identity_check(seq: SymmetricSequence, n_terms: int,
                             rhs_method: AccelerationMethod | None = None):
    """Truncated left and right sides of sum 1/a_n^2 = sum -2/(F'(-a_n) a_n^2).

    With `rhs_method` set, the right side (whose terms alternate and may
    decay slowly or grow) is summed through the requested acceleration.
    """
    if n_terms < 1:
        raise DomainError("need n_terms >= 1")
    lhs = 0j
    rhs_terms = []
    for n in range(1, n_terms + 1):
        an = complex(seq.term(n))
        lhs += 1.0 / (an * an)
        rhs_terms.append(-2.0 / (complex(seq.fprime_at(n)) * an * an))
    if rhs_method is None or rhs_method is AccelerationMethod.NO_ACCELERATION:
        rhs = sum(rhs_terms)
    else:
        rhs = _sum_complex(rhs_terms, rhs_method).value
    return lhs, rhs


def gamma_pair(a: complex, z: complex) -> complex:
    """Gamma(a+z) * Gamma(a-z), through log-space."""
    a = complex(a)
    z = complex(z)
    return (log_gamma(a + z) * log_gamma(a - z)).to_complex()


def modulus_product(a: float, z: complex, n_factors: int) -> complex:
    """Truncated product for Gamma(a+z)Gamma(a-z)/Gamma(a)^2 with a
    first-order tail correction exp(z^2 * psi'(a + N))."""
    if n_factors < 1:
        raise DomainError("need n_factors >= 1")
    a = float(a)
    z = complex(z)
    z2 = z * z
    log_prod = 0j
    for k in range(1, n_factors + 1):
        den = a - 1.0 + k
        factor = 1.0 - z2 / (den * den)
        if abs(factor) <= _POLE_DIST:
            raise PoleError(f"z = {z} hits pole at a-1+{k}")
        log_prod -= cmath.log(factor)
    tail = z2 * trigamma(a + n_factors)
    return cmath.exp(log_prod + tail)


@dataclass
class _ComplexReport:
    value: complex
    terms_used: int
    error_estimate: float
    method: AccelerationMethod


def _sum_complex(terms, method: AccelerationMethod) -> _ComplexReport:
    """Sum complex terms; real input is routed through sum_alternating."""
    if all(abs(t.imag) == 0.0 for t in terms):
        rep = sum_alternating([t.real for t in terms], method)
        return _ComplexReport(complex(rep.value), rep.terms_used,
                              rep.error_estimate, method)
    if method is AccelerationMethod.NO_ACCELERATION:
        return _ComplexReport(sum(terms), len(terms), abs(terms[-1]), method)
    if method is AccelerationMethod.EULER_TRANSFORM:
        partials = []
        acc = 0j
        for t in terms:
            acc += t
            partials.append(acc)
        value, est = euler_average(partials)
        return _ComplexReport(value, len(terms), est, method)
    # Chebyshev scheme needs a strict real sign pattern; fall back to
    # per-component treatment.
    re = sum_alternating([t.real for t in terms], method)
    im = sum_alternating([t.imag for t in terms], method)
    return _ComplexReport(complex(re.value, im.value), len(terms),
                          math.hypot(re.error_estimate, im.error_estimate),
                          method)


def _terms_grow(mags) -> bool:
    n = len(mags)
    if n < 8:
        return False
    return mags[-1] > 1.2 * mags[n // 2]


def gamma_pfd_series(a: float, z: complex, n_terms: int,
                     method: AccelerationMethod) -> ConvergenceReport:
    """Partial-fraction series for Gamma(a+z)Gamma(a-z):

        Gamma(a)^2 + sum_{k>=0} (-1)^(k+1) Gamma(2a+k)/((a+k)k!)
                                * 2z^2/(z^2 - (a+k)^2)

    z enters only through z^2, so the result is even in z by
    construction.
    """
    a = float(a)
    if a == round(a) and a <= 0:
        raise PoleError(f"Gamma(a)^2 pole at a = {a}")
    if n_terms < 1:
        raise DomainError("need n_terms >= 1")
    z = complex(z)
    z2 = z * z
    lg_a = log_gamma(a)
    ga2 = (lg_a * lg_a).to_complex()

    terms = []
    traces = []
    for k in range(n_terms):
        ak = a + k
        den = z2 - ak * ak
        if abs(den) <= _POLE_DIST:
            raise PoleError(f"z = {z} within tolerance of pole at a+{k}")
        lg = log_gamma(2.0 * a + k)
        log_coef = lg.log_mag - math.lgamma(k + 1.0) - math.log(abs(ak))
        coef_sign = (1.0 if math.cos(lg.arg) > 0 else -1.0)
        if ak < 0:
            coef_sign = -coef_sign
        sign = -coef_sign if k % 2 == 0 else coef_sign
        t = sign * math.exp(log_coef) * 2.0 * z2 / den
        terms.append(t)
        traces.append(SeriesTermTrace(k, t.real if t.imag == 0 else abs(t),
                                      log_coef + math.log(2.0 * abs(z2 / den))
                                      if z2 != 0 else -math.inf,
                                      int(sign)))
    mags = [abs(t) for t in terms]
    if _terms_grow(mags) and method is AccelerationMethod.NO_ACCELERATION:
        raise DivergenceError(
            f"series terms grow at a = {a}; use an accelerated method"
        )
    rep = _sum_complex(terms, method)
    value = ga2 + rep.value
    out_value = value.real if abs(value.imag) <= 1e-12 * abs(value) else value
    report = ConvergenceReport(out_value, n_terms, rep.error_estimate, method)
    report.trace = traces
    return report


def inverse_square_series(q: float, n_terms: int,
                          method: AccelerationMethod) -> ConvergenceReport:
    """The series -2 sum_n (-1)^n Gamma(2q+n+1)/(Gamma(q+1)^2 (n-1)! (q+n)^3),
    whose (possibly regularized) value is psi'(q+1)."""
    if q <= -1:
        raise DomainError(f"need q > -1, got {q}")
    if n_terms < 1:
        raise DomainError("need n_terms >= 1")
    two_lg_q1 = 2.0 * math.lgamma(q + 1.0)
    terms = []
    for n in range(1, n_terms + 1):
        log_mag = (math.lgamma(2.0 * q + n + 1.0) - two_lg_q1
                   - math.lgamma(float(n)) - 3.0 * math.log(q + n))
        sign = 2.0 if n % 2 else -2.0
        terms.append(sign * math.exp(log_mag))
    mags = [abs(t) for t in terms]
    if _terms_grow(mags) and method is AccelerationMethod.NO_ACCELERATION:
        raise DivergenceError(
            f"series terms grow at q = {q}; use an accelerated method"
        )
    return sum_alternating(terms, method)
