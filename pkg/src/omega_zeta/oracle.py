"""Independent reference values for the test surface.

zeta_oracle uses only the Dirichlet series plus Euler-Maclaurin
corrections with a fixed Bernoulli table; it never touches gamma
products or any series implemented elsewhere in the package, so
cross-checks against it are not circular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UnknownConstantError

__all__ = ["PrecisionConfig", "zeta_oracle", "known_constant"]


@dataclass
class PrecisionConfig:
    """Truncation and acceleration settings for series evaluations."""

    max_terms: int = 64
    target_abs_error: float = 1e-12
    method: str = "cvz"  # one of "none", "euler", "cvz"
    trace_enabled: bool = True

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if self.target_abs_error <= 0:
            raise DomainError("target_abs_error must be > 0")


# B_2 .. B_12 as exact rationals evaluated to double precision.
_B2J = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
        5.0 / 66.0, -691.0 / 2730.0)


def zeta_oracle(s: int, cutoff: int = 20, corrections: int = 6) -> float:
    """zeta(s) for integer s >= 2 via Euler-Maclaurin summation.

    Partial Dirichlet sum to `cutoff`, integral + midpoint terms, then
    `corrections` Bernoulli correction terms.  Accurate to well below
    1e-13 relative for the default parameters.
    """
    if s < 2:
        raise DomainError(f"zeta_oracle needs s >= 2, got {s}")
    n = cutoff
    total = sum(k ** (-float(s)) for k in range(1, n))
    total += n ** (1.0 - s) / (s - 1.0)
    total += 0.5 * n ** (-float(s))
    # sum_j B_2j/(2j)! * rising(s, 2j-1) * n^(1-s-2j)
    rising = float(s)  # rising factorial s(s+1)...(s+2j-2)
    fact = 2.0         # (2j)!
    for j in range(1, corrections + 1):
        total += _B2J[j - 1] / fact * rising * n ** (1.0 - s - 2 * j)
        # extend rising to 2(j+1)-1 factors, fact to (2j+2)!
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return total


def tail_power_sum(p: int, cutoff: int, corrections: int = 6) -> float:
    """sum_{s > cutoff} s^-p via Euler-Maclaurin, avoiding the
    cancellation of zeta(p) minus a partial sum.

    The correction terms form an asymptotic series in the cutoff, so for
    small cutoffs the leading terms are summed explicitly before the
    corrections are applied at 20.
    """
    if p < 2:
        raise DomainError(f"tail_power_sum needs p >= 2, got {p}")
    n = max(cutoff, 20)
    total = sum(k ** (-float(p)) for k in range(cutoff + 1, n + 1))
    total += n ** (1.0 - p) / (p - 1.0) - 0.5 * n ** (-float(p))
    rising = float(p)
    fact = 2.0
    for j in range(1, corrections + 1):
        total += _B2J[j - 1] / fact * rising * n ** (1.0 - p - 2 * j)
        rising *= (p + 2 * j - 1) * (p + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return total


_CONSTANTS = {
    "pi": math.pi,
    "euler_gamma": 0.5772156649015328606,
    "zeta2": math.pi ** 2 / 6.0,
    "zeta3": 1.2020569031595942854,
    "zeta4": math.pi ** 4 / 90.0,
    "zeta6": math.pi ** 6 / 945.0,
}


def known_constant(name: str) -> float:
    try:
        return _CONSTANTS[name]
    except KeyError:
        raise UnknownConstantError(f"unknown constant {name!r}") from None
