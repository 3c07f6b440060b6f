"""Complex special-function kernel.

Log-gamma, Kummer (regular) and Tricomi (recessive) confluent
hypergeometric functions with complex parameters, Whittaker M/W and their
derivatives, classical associated Laguerre polynomials and their analytic
continuation to complex degree/order.

Conventions fixed here and used everywhere else in the library:
  * double precision throughout; every complex power, root and logarithm
    is taken on the principal branch (argument in (-pi, pi]);
  * the function argument of the confluent/Whittaker family is real
    (positive for Tricomi/Whittaker); parameters may be complex;
  * all functions are pure and hold no mutable state, so repeated calls
    with identical inputs are bit-identical and thread-safe.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import IntegerB, NonConvergence, ParameterPole, PoleError

# Kummer series controls: stop once three consecutive terms fall below
# _STOP_REL of the running sum, give up at _MAX_TERMS.
_MAX_TERMS = 10_000
_STOP_REL = 1e-17

# For negative argument the direct series is alternating and can cancel
# catastrophically (relative error amplified by ~e^{|z|}); sum the Kummer
# transformation M(a,b,z) = e^z M(b-a,b,-z) instead, whose terms are
# single-signed in the dominant factor.
_TRANSFORM_BELOW = 0.0

# Lanczos approximation, g = 7, 9 coefficients (Godfrey/Pugh set).
# Valid for Re z > 0; the reflection formula covers the left half plane.
_LANCZOS_G = 7
_LANCZOS = (
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


def _nonpositive_int_near(z: complex, tol: float):
    """Return the nonpositive integer within tol of z, or None."""
    r = round(z.real)
    if r <= 0 and abs(z - r) <= tol:
        return r
    return None


def log_gamma(z: complex) -> complex:
    """Principal-branch log Gamma(z) for complex z.

    Lanczos rational approximation on Re z >= 0.5, reflection formula on
    the left half plane (there the imaginary part is correct only modulo
    2*pi*i, which is immaterial for the gamma *ratios* this library
    exponentiates).
    """
    z = complex(z)
    if _nonpositive_int_near(z, 1e-12) is not None:
        raise PoleError(f"log_gamma pole at z = {z}")
    if z.real < 0.5:
        # log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - log_gamma(1.0 - z)
    zz = z - 1.0
    s = complex(_LANCZOS[0])
    for i in range(1, len(_LANCZOS)):
        s += _LANCZOS[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (zz + 0.5) * cmath.log(t) - t + cmath.log(s)


def reciprocal_gamma(z: complex) -> complex:
    """1/Gamma(z); exactly 0 at the poles (nonpositive integers)."""
    z = complex(z)
    if _nonpositive_int_near(z, 1e-12) is not None:
        return 0.0 + 0.0j
    return cmath.exp(-log_gamma(z))


def _terminating_degree(a: complex):
    """If a is (numerically) a nonpositive integer -n, return n, else None."""
    r = _nonpositive_int_near(a, 1e-12)
    return None if r is None else -r


def _kummer_series(a: complex, b: complex, z: complex) -> complex:
    """Plain forward summation of 1F1(a; b; z) with term-ratio stopping.

    Terminating series (a at a nonpositive integer) are summed exactly.
    """
    n_term = _terminating_degree(a)
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    if n_term is not None:
        for n in range(n_term):
            term *= (a + n) / (b + n) * z / (n + 1)
            total += term
        return total
    small = 0
    for n in range(_MAX_TERMS):
        term *= (a + n) / (b + n) * z / (n + 1)
        total += term
        if abs(term) <= _STOP_REL * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NonConvergence(f"kummer series did not converge: a={a}, b={b}, z={z}")


def kummer_m(a: complex, b: complex, z: float) -> complex:
    """Confluent hypergeometric function 1F1(a; b; z), real argument z.

    Terminating series (a a nonpositive integer) are allowed even for
    b at a nonpositive integer, provided the numerator zero comes first.
    """
    a = complex(a)
    b = complex(b)
    z = float(z)
    pole = _nonpositive_int_near(b, 1e-12)
    if pole is not None:
        n_term = _terminating_degree(a)
        if n_term is None or n_term > -pole:
            raise ParameterPole(f"kummer_m: b = {b} at a nonpositive integer")
    if z < _TRANSFORM_BELOW:
        return cmath.exp(z) * _kummer_series(b - a, b, -z)
    return _kummer_series(a, b, z)


def kummer_m_dz(a: complex, b: complex, z: float) -> complex:
    """d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z)."""
    return complex(a) / complex(b) * kummer_m(complex(a) + 1, complex(b) + 1, z)


def _near_integer(z: complex, tol: float):
    r = round(z.real)
    return r if abs(z - r) <= tol else None


# The connection formula cancels like e^z; beyond this argument the
# divergent asymptotic series truncated at its smallest term is far more
# accurate than the cancellation-dominated exact formula.
_TRICOMI_ASYMPTOTIC_FROM = 20.0


def _tricomi_asymptotic(a: complex, b: complex, z: float) -> complex:
    # U(a,b,z) ~ z^{-a} sum_n (a)_n (a-b+1)_n / (n! (-z)^n), optimal truncation
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    smallest = abs(term)
    for n in range(200):
        nxt = term * (a + n) * (a - b + 1.0 + n) / (-(n + 1) * z)
        if abs(nxt) >= smallest:
            break
        term = nxt
        smallest = abs(term)
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
    return cmath.exp(-a * math.log(z)) * total


def tricomi_u(a: complex, b: complex, z: float) -> complex:
    """Tricomi confluent hypergeometric function U(a, b, z), z > 0.

    Two-term connection formula through 1F1 for moderate z; b within 1e-6
    of any integer is rejected (the formula degenerates there and this
    library does not take limits). For large z the asymptotic series is
    used instead, truncated at its smallest term.
    """
    a = complex(a)
    b = complex(b)
    z = float(z)
    if z <= 0.0:
        raise ValueError(f"tricomi_u requires z > 0, got {z}")
    if _near_integer(b, 1e-6) is not None:
        raise IntegerB(f"tricomi_u: b = {b} within 1e-6 of an integer")
    if z >= _TRICOMI_ASYMPTOTIC_FROM:
        return _tricomi_asymptotic(a, b, z)
    c1 = cmath.exp(log_gamma(1.0 - b)) * reciprocal_gamma(a - b + 1.0)
    c2 = cmath.exp(log_gamma(b - 1.0)) * reciprocal_gamma(a) * cmath.exp((1.0 - b) * math.log(z))
    first = c1 * kummer_m(a, b, z) if c1 != 0.0 else 0.0j
    second = c2 * kummer_m(a - b + 1.0, 2.0 - b, z) if c2 != 0.0 else 0.0j
    return first + second


def tricomi_u_dz(a: complex, b: complex, z: float) -> complex:
    """d/dz U(a, b, z) = -a U(a+1, b+1, z)."""
    return -complex(a) * tricomi_u(complex(a) + 1, complex(b) + 1, z)


@dataclass(frozen=True)
class WhittakerIndices:
    """The complex index pair (kappa, mu) of a Whittaker function."""

    kappa: complex
    mu: complex

    @property
    def series_a(self) -> complex:
        return self.mu - self.kappa + 0.5

    @property
    def series_b(self) -> complex:
        return 2.0 * self.mu + 1.0

    def check(self) -> None:
        """Reject 2*mu + 1 near a nonpositive integer unless terminating."""
        pole = _nonpositive_int_near(complex(self.series_b), 1e-6)
        if pole is not None and _terminating_degree(complex(self.series_a)) is None:
            raise ParameterPole(f"inadmissible Whittaker indices: 2*mu+1 = {self.series_b}")


def _whittaker_prefactor(mu: complex, y: float) -> complex:
    # e^{-y/2} y^{mu + 1/2}, principal branch of the power
    return cmath.exp(-0.5 * y + (mu + 0.5) * math.log(y))


def whittaker_m(idx: WhittakerIndices, y: float) -> complex:
    """Whittaker M_{kappa,mu}(y) = e^{-y/2} y^{mu+1/2} 1F1(mu-kappa+1/2; 2mu+1; y)."""
    y = float(y)
    if y <= 0.0:
        raise ValueError(f"whittaker_m requires y > 0, got {y}")
    idx.check()
    return _whittaker_prefactor(idx.mu, y) * kummer_m(idx.series_a, idx.series_b, y)


def whittaker_w(idx: WhittakerIndices, y: float) -> complex:
    """Whittaker W_{kappa,mu}(y), recessive solution, via the Tricomi core."""
    y = float(y)
    if y <= 0.0:
        raise ValueError(f"whittaker_w requires y > 0, got {y}")
    return _whittaker_prefactor(idx.mu, y) * tricomi_u(idx.series_a, idx.series_b, y)


def _core_derivs(core, core_d1, core_d2, mu: complex, y: float) -> tuple[complex, complex, complex]:
    """Value and first two y-derivatives of e^{-y/2} y^{mu+1/2} F(y).

    The core derivatives are supplied analytically (contiguous-parameter
    identities), never through the differential equation, so residual
    checks built on these stay non-circular.
    """
    pre = _whittaker_prefactor(mu, y)
    s = mu + 0.5
    l1 = -0.5 + s / y  # (d/dy prefactor) / prefactor
    l2 = l1 * l1 - s / (y * y)  # (d2/dy2 prefactor) / prefactor
    f = pre * core
    d1 = pre * (l1 * core + core_d1)
    d2 = pre * (l2 * core + 2.0 * l1 * core_d1 + core_d2)
    return f, d1, d2


def whittaker_m_derivs(idx: WhittakerIndices, y: float) -> tuple[complex, complex, complex]:
    """(M, dM/dy, d2M/dy2) with analytic derivatives of the Kummer core."""
    y = float(y)
    if y <= 0.0:
        raise ValueError(f"whittaker_m_derivs requires y > 0, got {y}")
    idx.check()
    a, b = idx.series_a, idx.series_b
    core = kummer_m(a, b, y)
    core_d1 = a / b * kummer_m(a + 1, b + 1, y)
    core_d2 = a * (a + 1) / (b * (b + 1)) * kummer_m(a + 2, b + 2, y)
    return _core_derivs(core, core_d1, core_d2, idx.mu, y)


def whittaker_m_dy(idx: WhittakerIndices, y: float) -> complex:
    """dM_{kappa,mu}/dy, exact product rule plus the 1F1 derivative identity."""
    return whittaker_m_derivs(idx, y)[1]


def whittaker_w_derivs(idx: WhittakerIndices, y: float) -> tuple[complex, complex, complex]:
    """(W, dW/dy, d2W/dy2) with analytic derivatives of the Tricomi core."""
    y = float(y)
    if y <= 0.0:
        raise ValueError(f"whittaker_w_derivs requires y > 0, got {y}")
    a, b = idx.series_a, idx.series_b
    core = tricomi_u(a, b, y)
    core_d1 = -a * tricomi_u(a + 1, b + 1, y)
    core_d2 = a * (a + 1) * tricomi_u(a + 2, b + 2, y)
    return _core_derivs(core, core_d1, core_d2, idx.mu, y)


def whittaker_w_dy(idx: WhittakerIndices, y: float) -> complex:
    return whittaker_w_derivs(idx, y)[1]


def laguerre_poly(n: int, p: float, y: float) -> float:
    """Classical associated Laguerre polynomial L_n^p(y), three-term recurrence."""
    if n < 0:
        raise ValueError(f"laguerre_poly requires n >= 0, got {n}")
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + p - y
    for k in range(2, n + 1):
        prev, cur = cur, ((2 * k - 1 + p - y) * cur - (k - 1 + p) * prev) / k
    return cur


def kummer_core(nu: complex, alpha: complex, y: float) -> complex:
    """Unnormalized Laguerre-like core: 1F1(-nu; alpha+1; y).

    Chosen so that M_{kappa,mu}(y) = y^{mu+1/2} e^{-y/2}
    kummer_core(kappa - mu - 1/2, 2*mu, y) holds exactly.
    """
    return kummer_m(-complex(nu), complex(alpha) + 1.0, y)


def laguerre_function(nu: complex, alpha: complex, y: float) -> complex:
    """Associated Laguerre function of complex degree/order.

    Gamma(nu+alpha+1) / (Gamma(nu+1) Gamma(alpha+1)) * kummer_core(nu, alpha, y);
    reduces to laguerre_poly for nonnegative integer nu and real alpha.
    """
    nu = complex(nu)
    alpha = complex(alpha)
    coef = cmath.exp(log_gamma(nu + alpha + 1.0) - log_gamma(nu + 1.0) - log_gamma(alpha + 1.0))
    return coef * kummer_core(nu, alpha, y)
