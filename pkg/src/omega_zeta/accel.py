"""Summation of alternating series with optional acceleration.

Two schemes are provided on top of plain summation:

* Euler transform, implemented as repeated averaging of partial sums.
  Finite differencing annihilates polynomial term growth, so this also
  regularizes alternating series that diverge classically.
* The Chebyshev-polynomial scheme of Cohen, Rodriguez Villegas and
  Zagier, which converges like (3 + sqrt(8))^-N for well-behaved
  alternating series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import SignPatternError

__all__ = [
    "AccelerationMethod",
    "SeriesTermTrace",
    "ConvergenceReport",
    "sum_alternating",
    "euler_average",
]

_EPS = 2.220446049250313e-16


class AccelerationMethod(Enum):
    NO_ACCELERATION = "none"
    EULER_TRANSFORM = "euler"
    CHEBYSHEV_ALTERNATING = "cvz"

    @staticmethod
    def parse(name: str) -> "AccelerationMethod":
        for m in AccelerationMethod:
            if m.value == name:
                return m
        raise ValueError(f"unknown acceleration method {name!r}")


@dataclass(frozen=True)
class SeriesTermTrace:
    """One summand: index, signed value, and its log-space form."""

    n: int
    value: float
    log_mag: float
    sign: int


@dataclass
class ConvergenceReport:
    """Result of a series evaluation."""

    value: float
    terms_used: int
    error_estimate: float
    method: AccelerationMethod
    trace: list = field(default_factory=list)


def euler_average(values):
    """Euler transform via repeated averaging of partial sums.

    `values` are the partial sums (real or complex).  Returns
    (limit, error_estimate).  The estimate is the magnitude of the last
    averaging step.
    """
    row = list(values)
    if len(row) == 1:
        return row[0], abs(row[0])
    prev = row[0]
    while len(row) > 1:
        prev = row[0]
        row = [(row[i] + row[i + 1]) / 2.0 for i in range(len(row) - 1)]
    last = row[0]
    return last, abs(last - prev)


def _cvz(magnitudes):
    """Cohen-Rodriguez Villegas-Zagier sum of sum_k (-1)^k magnitudes[k]."""
    n = len(magnitudes)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * magnitudes[k]
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d, d


def sum_alternating(terms, method: AccelerationMethod) -> ConvergenceReport:
    """Sum a list of real terms with the requested scheme.

    ChebyshevAlternating requires strictly alternating signs; the other
    methods accept any sign pattern.
    """
    terms = [float(t) for t in terms]
    if not terms:
        raise ValueError("empty term list")
    n = len(terms)
    abs_terms = [abs(t) for t in terms]

    if method is AccelerationMethod.NO_ACCELERATION:
        value = math.fsum(terms)
        return ConvergenceReport(value, n, abs_terms[-1], method)

    if method is AccelerationMethod.EULER_TRANSFORM:
        partials = []
        acc = 0.0
        for t in terms:
            acc += t
            partials.append(acc)
        value, est = euler_average(partials)
        return ConvergenceReport(value, n, est, method)

    if method is AccelerationMethod.CHEBYSHEV_ALTERNATING:
        signs = [1 if t > 0 else -1 if t < 0 else 0 for t in terms]
        for k in range(n):
            if signs[k] == 0 or (k > 0 and signs[k] == signs[k - 1]):
                raise SignPatternError(
                    f"terms must strictly alternate in sign (index {k})"
                )
        s, d = _cvz(abs_terms)
        value = signs[0] * s
        a_max = max(abs_terms)
        est = max(3.0 * a_max / d, 8.0 * _EPS * a_max)
        return ConvergenceReport(value, n, est, method)

    raise ValueError(f"unknown method {method}")
