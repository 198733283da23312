"""Complex special functions: log-gamma, gamma, digamma, trigamma, beta,
roots of unity, and log-space trigonometric/hyperbolic helpers.

Everything works in double precision.  Products of gamma values whose
magnitudes exceed the floating-point range are handled through the
LogComplex representation (log-magnitude plus argument) and only
exponentiated when the final result is known to be representable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PoleError

__all__ = [
    "LogComplex",
    "UnityRoots",
    "log_gamma",
    "gamma",
    "digamma",
    "trigamma",
    "beta",
    "roots_of_unity",
    "log_sin",
    "log_sinh",
    "log_cosh",
]

_TWO_PI = 2.0 * math.pi
_LOG_SQRT_TWO_PI = 0.5 * math.log(_TWO_PI)

# Largest log-magnitude exp() can turn into a finite double.
_EXP_OVERFLOW = 709.0

# Lanczos approximation, g = 7, 9 coefficients (standard double-precision set).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_POLE_TOL = 1e-12


def _wrap_angle(theta: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    theta = math.fmod(theta, _TWO_PI)
    if theta > math.pi:
        theta -= _TWO_PI
    elif theta <= -math.pi:
        theta += _TWO_PI
    return theta


@dataclass(frozen=True)
class LogComplex:
    """A nonzero complex number stored as (log-magnitude, argument)."""

    log_mag: float
    arg: float

    def __post_init__(self):
        object.__setattr__(self, "arg", _wrap_angle(self.arg))

    @staticmethod
    def from_complex(w: complex) -> "LogComplex":
        if w == 0:
            raise ValueError("zero has no logarithm")
        return LogComplex(math.log(abs(w)), cmath.phase(w))

    def to_complex(self) -> complex:
        if self.log_mag > _EXP_OVERFLOW:
            raise OverflowError(
                f"log-magnitude {self.log_mag:.3g} exceeds double range"
            )
        r = math.exp(self.log_mag)
        return complex(r * math.cos(self.arg), r * math.sin(self.arg))

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        return LogComplex(self.log_mag + other.log_mag, self.arg + other.arg)

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        return LogComplex(self.log_mag - other.log_mag, self.arg - other.arg)

    def conjugate(self) -> "LogComplex":
        return LogComplex(self.log_mag, -self.arg)


@dataclass(frozen=True)
class UnityRoots:
    """All m-th roots of unity, roots[j] = exp(2*pi*i*j/m)."""

    m: int
    roots: tuple


def roots_of_unity(m: int) -> UnityRoots:
    if m < 2:
        raise DomainError(f"need m >= 2, got {m}")
    roots = []
    for j in range(m):
        # Snap the axis-aligned roots to exact values.
        if (4 * j) % m == 0:
            quarter = (4 * j // m) % 4
            roots.append((1 + 0j, 1j, -1 + 0j, -1j)[quarter])
        else:
            roots.append(cmath.exp(2j * math.pi * j / m))
    return UnityRoots(m, tuple(roots))


def _near_nonpositive_integer(z: complex, tol: float = _POLE_TOL) -> bool:
    if abs(z.imag) > tol:
        return False
    k = round(z.real)
    return k <= 0 and abs(z.real - k) <= tol


def log_gamma(z: complex) -> LogComplex:
    """A logarithm of Gamma(z); exponentiating reproduces Gamma(z).

    Lanczos approximation for Re z >= 0.5, reflection otherwise.  No
    attempt is made to keep the imaginary part on a continuous branch;
    only exp() of the result is meaningful.
    """
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # Gamma(z) = pi / (sin(pi z) * Gamma(1 - z))
        ls = log_sin(math.pi * z)
        lg = log_gamma(1.0 - z)
        return LogComplex(
            math.log(math.pi) - ls.log_mag - lg.log_mag, -ls.arg - lg.arg
        )
    if z.imag == 0.0 and z.real == round(z.real) and z.real <= 171:
        # Positive integers: exact log-factorial path.
        return LogComplex(math.lgamma(z.real), 0.0)
    w = z - 1.0
    x = complex(_LANCZOS_COEF[0])
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        x += c / (w + i)
    t = w + _LANCZOS_G + 0.5
    lg = _LOG_SQRT_TWO_PI + (w + 0.5) * cmath.log(t) - t + cmath.log(x)
    return LogComplex(lg.real, lg.imag)


def gamma(z: complex) -> complex:
    """Gamma(z) in double precision; raises OverflowError when too large."""
    return log_gamma(z).to_complex()


_BERN_OVER_2N = (  # B_{2n}/(2n) for n = 1..6
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
)


def digamma(z: complex) -> complex:
    """psi(z) for complex z away from the poles 0, -1, -2, ..."""
    z = complex(z)
    if _near_nonpositive_integer(z):
        raise PoleError(f"digamma pole at z = {z}")
    acc = 0j
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    s = cmath.log(z) - 0.5 / z
    p = inv2
    for b in _BERN_OVER_2N:
        s -= b * p
        p *= inv2
    result = acc + s
    if abs(result.imag) == 0.0:
        return complex(result.real, 0.0)
    return result


_BERNOULLI = (1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
              5.0 / 66.0, -691.0 / 2730.0)


def trigamma(x: float) -> float:
    """psi'(x) = sum_{k>=0} 1/(x+k)^2 for real x > 0."""
    if x <= 0:
        raise DomainError(f"trigamma needs x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    s = inv + 0.5 * inv2
    p = inv * inv2
    for b in _BERNOULLI:
        s += b * p
        p *= inv2
    return acc + s


def beta(a: complex, b: complex) -> complex:
    """B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), assembled in log-space."""
    return (log_gamma(a) * log_gamma(b) / log_gamma(complex(a) + complex(b))).to_complex()


def log_sin(z: complex) -> LogComplex:
    """A logarithm of sin(z), safe for large |Im z|."""
    z = complex(z)
    k = round(z.real / math.pi)
    if abs(z.imag) <= _POLE_TOL and abs(z.real - k * math.pi) <= _POLE_TOL:
        raise PoleError(f"sin zero at z = {z}")
    if abs(z.imag) <= 20.0:
        return LogComplex.from_complex(cmath.sin(z))
    if z.imag < 0:
        return log_sin(z.conjugate()).conjugate()
    # sin z = e^{-iz} (e^{2iz} - 1) / (2i); |e^{2iz}| = e^{-2 Im z} is tiny.
    rest = cmath.log((cmath.exp(2j * z) - 1.0) / 2j)
    return LogComplex(z.imag + rest.real, -z.real + rest.imag)


def log_sinh(x: float) -> float:
    """log(sinh(x)) for real x > 0 without overflow."""
    if x <= 0:
        raise DomainError(f"log_sinh needs x > 0, got {x}")
    if x <= 20.0:
        return math.log(math.sinh(x))
    # sinh x = e^x (1 - e^{-2x}) / 2
    return x - math.log(2.0) + math.log1p(-math.exp(-2.0 * x))


def log_cosh(x: float) -> float:
    """log(cosh(x)) for real x >= 0 without overflow."""
    if x < 0:
        raise DomainError(f"log_cosh needs x >= 0, got {x}")
    if x <= 20.0:
        return math.log(math.cosh(x))
    return x - math.log(2.0) + math.log1p(math.exp(-2.0 * x))
