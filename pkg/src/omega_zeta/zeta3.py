"""Three alternative series for zeta(3).

* Sine form: terms mix a rising complex product against sin(pi w) with
  |Im w| growing linearly, both of size exp(sqrt(3) pi n / 2); each
  term is assembled as a single log-space quantity so the huge factors
  cancel multiplicatively.
* Hyperbolic form: odd-index terms use the finite product P(d) against
  cosh, even-index terms Q(d) against sinh.  Interleaved they reproduce
  the alternating zeta(3) series term by term.
* Beta form: an alternating Beta-function series plus a double sum
  whose inner k-series diverges classically for n >= 4 and is summed
  with an Euler transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .accel import (
    AccelerationMethod,
    ConvergenceReport,
    SeriesTermTrace,
    euler_average,
    sum_alternating,
)
from .errors import DivergenceError, DomainError, ResidueError
from .oracle import PrecisionConfig
from .special import LogComplex, log_cosh, log_sin, log_sinh
from .zeta_series import zeta_term

__all__ = [
    "Zeta3Variant",
    "p_poly",
    "q_poly",
    "sine_term",
    "hyperbolic_term",
    "beta_series_term",
    "inner_double_sum",
    "zeta3_series",
]

_SQRT3 = math.sqrt(3.0)
_OMEGA3_SQ = complex(-0.5, -_SQRT3 / 2.0)  # exp(-2 pi i / 3)


class Zeta3Variant(Enum):
    SINE = "sine"
    HYPERBOLIC = "hyperbolic"
    BETA = "beta"


def p_poly(d: int) -> float:
    """log P(d), P(d) = prod_{k=1}^{d} ((k - 1/2)^2 + (3/4)(2d - 1)^2)."""
    if d < 1:
        raise DomainError("need d >= 1")
    c = 0.75 * (2 * d - 1) ** 2
    return sum(math.log((k - 0.5) ** 2 + c) for k in range(1, d + 1))


def q_poly(d: int) -> float:
    """log Q(d), Q(d) = prod_{k=1}^{d} (k^2 + 3 d^2)."""
    if d < 1:
        raise DomainError("need d >= 1")
    c = 3.0 * d * d
    return sum(math.log(k * k + c) for k in range(1, d + 1))


def sine_term(n: int) -> SeriesTermTrace:
    """n-th term of the sine-form series, entirely in log-space."""
    if n < 1:
        raise DomainError("need n >= 1")
    w = _OMEGA3_SQ * n
    acc = LogComplex(math.log(3.0 * math.pi), _OMEGA3_SQ_ARG)
    for k in range(1, n + 1):
        acc = acc * LogComplex.from_complex(k + w)
    acc = acc / LogComplex(math.lgamma(n + 1.0) + 2.0 * math.log(n), 0.0)
    acc = acc / log_sin(math.pi * w)
    phase = acc.arg if n % 2 else acc.arg + math.pi
    residual = abs(math.sin(phase))
    if residual > 1e-8:
        raise ResidueError(
            f"sine-form term n={n} has imaginary residual {residual:.3g}"
        )
    sign = 1 if math.cos(phase) > 0 else -1
    value = sign * math.exp(acc.log_mag) if acc.log_mag > -745.0 else 0.0
    return SeriesTermTrace(n, value, acc.log_mag, sign)


_OMEGA3_SQ_ARG = -2.0 * math.pi / 3.0


def hyperbolic_term(n: int) -> SeriesTermTrace:
    """n-th term of the interleaved hyperbolic-form series.

    Odd n = 2d-1 gives the (positive) P(d)/cosh term, even n = 2d the
    (negative) Q(d)/sinh term.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    if n % 2:
        d = (n + 1) // 2
        log_mag = (math.log(3.0 * math.pi) + p_poly(d)
                   - math.lgamma(2.0 * d) - 3.0 * math.log(2 * d - 1)
                   - log_cosh(_SQRT3 * math.pi * (2 * d - 1) / 2.0))
        sign = 1
    else:
        d = n // 2
        log_mag = (math.log(3.0 * _SQRT3 * math.pi / 8.0) + q_poly(d)
                   - log_sinh(_SQRT3 * math.pi * d)
                   - math.lgamma(2.0 * d + 1.0) - 2.0 * math.log(d))
        sign = -1
    value = sign * math.exp(log_mag) if log_mag > -745.0 else 0.0
    return SeriesTermTrace(n, value, log_mag, sign)


def beta_series_term(n: int) -> float:
    """3 * (-1)^(n-1) * B(n/2, n/2) / n^2, via log-gamma."""
    log_mag = (math.log(3.0) + 2.0 * math.lgamma(0.5 * n)
               - math.lgamma(float(n)) - 2.0 * math.log(n))
    sign = 1.0 if n % 2 else -1.0
    return sign * math.exp(log_mag)


# Inner Euler transforms are limited to term magnitudes below this, so
# the binomial cancellation noise stays under ~1e-8 absolute.
_INNER_LOG_CAP = math.log(1e8)


def inner_double_sum(n: int, k_terms: int | None = None,
                     regularized: bool = True):
    """Euler-transformed inner k-sum of the double series,

        sum_k (-1)^(n+k) * 36 * C(n+k-1, k) / ((n+2k)(3n^2 + (n+2k)^2)).

    The terms grow like k^(n-4); for n >= 4 the classical sum diverges
    and `regularized` must stay on.  Returns (value, noise) where noise
    estimates the cancellation error left by differencing the large
    binomial terms in double precision.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    if k_terms is None:
        k_terms = max(28, 2 * n + 12)
    lg_n = math.lgamma(float(n))
    terms = []
    base_sign = 1.0 if n % 2 == 0 else -1.0
    peak = 0.0
    for k in range(k_terms):
        log_mag = (math.log(36.0) + math.lgamma(float(n + k))
                   - math.lgamma(k + 1.0) - lg_n
                   - math.log(n + 2.0 * k)
                   - math.log(3.0 * n * n + (n + 2.0 * k) ** 2))
        if log_mag > _INNER_LOG_CAP and k > n:
            break
        peak = max(peak, log_mag)
        sign = base_sign if k % 2 == 0 else -base_sign
        terms.append(sign * math.exp(log_mag))
    noise = math.exp(peak) * len(terms) * 2.2e-16
    mags = [abs(t) for t in terms]
    growing = len(mags) >= 8 and mags[-1] > 1.2 * mags[len(mags) // 2]
    if not regularized:
        if growing or n >= 4:
            raise DivergenceError(
                f"inner k-series diverges classically for n = {n}"
            )
        return math.fsum(terms), noise
    partials = []
    acc = 0.0
    for t in terms:
        acc += t
        partials.append(acc)
    value, _ = euler_average(partials)
    return value, noise


def zeta3_series(variant: Zeta3Variant,
                 config: PrecisionConfig | None = None) -> ConvergenceReport:
    """Evaluate zeta(3) by the requested variant series."""
    config = config or PrecisionConfig(max_terms=40)
    method = AccelerationMethod.parse(config.method) if isinstance(
        config.method, str) else config.method

    if variant is Zeta3Variant.SINE:
        traces = [sine_term(n) for n in range(1, config.max_terms + 1)]
        report = sum_alternating([t.value for t in traces], method)
        if config.trace_enabled:
            report.trace = traces
        return report

    if variant is Zeta3Variant.HYPERBOLIC:
        # max_terms counts index pairs d; each contributes an odd and an
        # even interleaved term.
        traces = [hyperbolic_term(n) for n in range(1, 2 * config.max_terms + 1)]
        report = sum_alternating([t.value for t in traces], method)
        if config.trace_enabled:
            report.trace = traces
        return report

    if variant is Zeta3Variant.BETA:
        n_outer = config.max_terms
        beta_terms = [beta_series_term(n) for n in range(1, n_outer + 1)]
        # The inner Euler transforms lose accuracy as the binomial terms
        # outgrow double precision; stop the outer sum once the per-term
        # cancellation noise exceeds the budget and let the outer
        # acceleration extrapolate from the reliable terms.
        inner_terms = []
        total_noise = 0.0
        for n in range(1, n_outer + 1):
            value, noise = inner_double_sum(n)
            if noise > 1e-9 and n > 8:
                break
            inner_terms.append(value)
            total_noise += noise
        rep_beta = sum_alternating(beta_terms, method)
        rep_inner = sum_alternating(inner_terms, method)
        report = ConvergenceReport(
            rep_beta.value + rep_inner.value,
            len(inner_terms),
            rep_beta.error_estimate + rep_inner.error_estimate + total_noise,
            method,
        )
        if config.trace_enabled:
            report.trace = [
                SeriesTermTrace(n + 1, b + i,
                                math.log(abs(b + i)) if b + i else -math.inf,
                                1 if b + i > 0 else -1)
                for n, (b, i) in enumerate(zip(beta_terms, inner_terms))
            ]
        return report

    raise ValueError(f"unknown variant {variant!r}")
