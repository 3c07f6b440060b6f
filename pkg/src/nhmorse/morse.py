"""Closed-form solutions of the non-Hermitian Morse problem.

The second-order equations for the two spinor components, after the
substitution y = (2B/a) e^{-a x}, reduce to Whittaker normal form with
complex indices. Two index maps coexist deliberately:

  * PRINTED: mu^2 = (K'^2 - K^2 - 2iKA) / a^2, the formula as published;
  * DERIVED: mu^2 = (A^2 + K'^2 - K^2 - 2iKA) / a^2, obtained by matching
    the constant term of the expanded coefficient to the Whittaker normal
    form.

They differ by the A^2 term under the root; the residual oracle in
`verify` is the arbiter of which one actually solves the printed
equations (the derived map does; the printed map fails for A != 0 with
K != 0 or K' != 0). kappa_1 and kappa_2 agree between the maps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from . import riccati, specfun
from .errors import NonNormalizable
from .riccati import MorseRiccati, RiccatiSign
from .specfun import WhittakerIndices
from .susy import Sector


class ParameterMap(str, Enum):
    PRINTED = "printed"
    DERIVED = "derived"


class BoundStateConvention(str, Enum):
    PAPER = "paper"      # K' = A - a n
    SHIFTED = "shifted"  # K' = A - a (n + 1)


@dataclass(frozen=True)
class MorseParameters:
    """Full parameter record: Morse shape (A, B, a), extension (K, K'),
    and superposition amplitudes for both sectors.

    Defaults reproduce the canonical operating point A=1, B=2, a=0.5,
    K'=2, alpha=1, beta=0.
    """

    A: float = 1.0
    B: float = 2.0
    a: float = 0.5
    K: float = 0.0
    Kprime: float = 2.0
    alpha1: complex = 1.0 + 0.0j
    beta1: complex = 0.0 + 0.0j
    alpha2: complex = 1.0 + 0.0j
    beta2: complex = 0.0 + 0.0j

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.B > 0.0):
            raise ValueError(f"require a > 0 and B > 0, got a = {self.a}, B = {self.B}")

    @property
    def B_bar(self) -> float:
        return self.B * self.B

    @property
    def C1_bar(self) -> float:
        return self.B * (2.0 * self.A + self.a)

    @property
    def C2_bar(self) -> float:
        return self.B * (2.0 * self.A - self.a)

    def shape(self) -> MorseRiccati:
        return MorseRiccati(A=self.A, B=self.B, a=self.a)

    def amplitudes(self, sector: Sector) -> tuple[complex, complex]:
        if sector is Sector.FERMIONIC:
            return self.alpha1, self.beta1
        return self.alpha2, self.beta2


@dataclass(frozen=True)
class Indices:
    kappa1: complex
    kappa2: complex
    mu: complex

    def for_sector(self, sector: Sector) -> WhittakerIndices:
        kappa = self.kappa1 if sector is Sector.FERMIONIC else self.kappa2
        return WhittakerIndices(kappa=kappa, mu=self.mu)


def _principal_sqrt(z: complex) -> complex:
    # cmath.sqrt already selects Re >= 0 with Im >= 0 on the branch cut
    return cmath.sqrt(z)


def indices(params: MorseParameters, pmap: ParameterMap) -> Indices:
    """Whittaker indices (kappa_1, kappa_2, mu) for the chosen map.

    The published kappa formulas are expanded to the pole-free form
    kappa_{1,2} = A/a +/- 1/2 - iK/a, valid for any A.
    """
    A, a, K, Kp = params.A, params.a, params.K, params.Kprime
    base = A / a - 1j * K / a
    kappa1 = base + 0.5
    kappa2 = base - 0.5
    under = complex(Kp * Kp - K * K, -2.0 * K * A)
    if pmap is ParameterMap.DERIVED:
        under += A * A
    mu = _principal_sqrt(under) / a
    return Indices(kappa1=kappa1, kappa2=kappa2, mu=mu)


def ode_coefficient(params: MorseParameters, sector: Sector, x: float) -> complex:
    """Expanded coefficient of the Morse second-order equation.

    -(B_bar e^{-2ax} - C_i e^{-ax}) + (K^2 - K'^2) - A^2 + 2iK(A - B e^{-ax});
    identical (to roundoff) to the generic bracket evaluated on the Morse
    superpotential.
    """
    A, B, a, K, Kp = params.A, params.B, params.a, params.K, params.Kprime
    C = params.C1_bar if sector is Sector.FERMIONIC else params.C2_bar
    e = math.exp(-a * x)
    return (
        -(params.B_bar * e * e - C * e)
        + (K * K - Kp * Kp)
        - A * A
        + 2j * K * (A - B * e)
    )


def _whittaker_wave_derivs(
    idx: WhittakerIndices,
    shape: MorseRiccati,
    x: float,
    kind: str,
) -> tuple[complex, complex, complex]:
    """(w, w', w'') in x for w(x) = e^{ax/2} F(y(x)), F a Whittaker function.

    Chain rule with y' = -a y, y'' = a^2 y; F-derivatives are analytic
    (never obtained from the differential equation).
    """
    a = shape.a
    y = riccati.morse_y(shape, x)
    if kind == "m":
        f, f1, f2 = specfun.whittaker_m_derivs(idx, y)
    elif kind == "w":
        f, f1, f2 = specfun.whittaker_w_derivs(idx, y)
    else:
        raise ValueError(f"unknown solution kind {kind!r}")
    g = math.exp(0.5 * a * x)
    yp = -a * y
    ypp = a * a * y
    w = g * f
    dw = g * (0.5 * a * f + f1 * yp)
    d2w = g * (0.25 * a * a * f + a * f1 * yp + f2 * yp * yp + f1 * ypp)
    return w, dw, d2w


def wavefunction_derivs(
    params: MorseParameters, sector: Sector, pmap: ParameterMap, x: float
) -> tuple[complex, complex, complex]:
    """Value and first two x-derivatives of the superposed wavefunction
    alpha e^{ax/2} M + beta e^{ax/2} W.

    The W branch is only evaluated when beta is nonzero, so purely M-type
    parameter sets never trip the integer-b rejection of the Tricomi core.
    """
    alpha, beta = params.amplitudes(sector)
    idx = indices(params, pmap).for_sector(sector)
    shape = params.shape()
    w = dw = d2w = 0.0 + 0.0j
    if alpha != 0.0:
        m, m1, m2 = _whittaker_wave_derivs(idx, shape, x, "m")
        w += alpha * m
        dw += alpha * m1
        d2w += alpha * m2
    if beta != 0.0:
        v, v1, v2 = _whittaker_wave_derivs(idx, shape, x, "w")
        w += beta * v
        dw += beta * v1
        d2w += beta * v2
    return w, dw, d2w


def wavefunction(params: MorseParameters, sector: Sector, pmap: ParameterMap, x: float) -> complex:
    """Superposed closed-form wavefunction for the chosen sector and map."""
    return wavefunction_derivs(params, sector, pmap, x)[0]


def wavefunction_laguerre_form(
    params: MorseParameters, sector: Sector, pmap: ParameterMap, x: float
) -> complex:
    """Laguerre-like form alpha (2B/a)^{1/2} y^mu e^{-y/2} core(kappa-mu-1/2, 2mu, y).

    Algebraically identical to the M-only wavefunction through
    e^{ax/2} = (2B/a)^{1/2} y^{-1/2}.
    """
    alpha, _ = params.amplitudes(sector)
    idx = indices(params, pmap).for_sector(sector)
    shape = params.shape()
    y = riccati.morse_y(shape, x)
    core = specfun.kummer_core(idx.kappa - idx.mu - 0.5, 2.0 * idx.mu, y)
    pre = math.sqrt(2.0 * params.B / params.a)
    return alpha * pre * cmath.exp(idx.mu * math.log(y) - 0.5 * y) * core


def bound_state_exponent(A: float, a: float, n: int, convention: BoundStateConvention) -> float:
    """The power of y in the hermitic bound-state profile."""
    if convention is BoundStateConvention.PAPER:
        return A / a - n
    return A / a - n - 1


def bound_state_kprime(A: float, a: float, n: int, convention: BoundStateConvention) -> float:
    """Quantized K' value under the chosen convention."""
    if convention is BoundStateConvention.PAPER:
        return A - a * n
    return A - a * (n + 1)


def hermitic_bound_state(
    A: float,
    B: float,
    a: float,
    n: int,
    convention: BoundStateConvention,
    x: float,
    alpha2: complex = 1.0 + 0.0j,
) -> complex:
    """Hermitic (K = 0) bound-state candidate
    alpha2 (2B/a)^{1/2} y^s e^{-y/2} L_n^{2s}(y), s per convention."""
    if n < 0:
        raise ValueError(f"require n >= 0, got {n}")
    s = bound_state_exponent(A, a, n, convention)
    if s <= 0.0:
        raise NonNormalizable(f"bound-state exponent {s} <= 0 for n = {n}")
    shape = MorseRiccati(A=A, B=B, a=a)
    y = riccati.morse_y(shape, x)
    return alpha2 * math.sqrt(2.0 * B / a) * y**s * math.exp(-0.5 * y) * specfun.laguerre_poly(n, 2.0 * s, y)


def bound_state_wave_derivs(
    A: float, B: float, a: float, n: int, convention: BoundStateConvention, x: float
) -> tuple[complex, complex, complex]:
    """(w, w', w'') of the bound-state candidate, up to its constant amplitude.

    Uses the exact proportionality of the candidate to
    e^{ax/2} M_{s+n+1/2, s}(y) (terminating Kummer series), so the
    derivatives are analytic.
    """
    s = bound_state_exponent(A, a, n, convention)
    if s <= 0.0:
        raise NonNormalizable(f"bound-state exponent {s} <= 0 for n = {n}")
    idx = WhittakerIndices(kappa=complex(s + n + 0.5), mu=complex(s))
    return _whittaker_wave_derivs(idx, MorseRiccati(A=A, B=B, a=a), x, "m")


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n, empty product = 1."""
    out = 1.0
    for k in range(n):
        out *= x + k
    return out


def whittaker_laguerre_identity(n: int, p: float, y: float) -> tuple[complex, float, float]:
    """Both sides of the Whittaker-to-Laguerre reduction.

    Returns (lhs, rhs_printed, rhs_corrected) where
      lhs           = M_{p/2+n+1/2, p/2}(y),
      rhs_printed   = y^{(p+1)/2} e^{-y/2} L_n^p(y)  (as published),
      rhs_corrected = rhs_printed * n! / (p+1)_n     (classical relation).
    """
    if n < 0:
        raise ValueError(f"require n >= 0, got {n}")
    lhs = specfun.whittaker_m(WhittakerIndices(kappa=complex(0.5 * p + n + 0.5), mu=complex(0.5 * p)), y)
    rhs_printed = y ** (0.5 * (p + 1.0)) * math.exp(-0.5 * y) * specfun.laguerre_poly(n, p, y)
    rhs_corrected = rhs_printed * math.factorial(n) / pochhammer(p + 1.0, n)
    return lhs, rhs_printed, rhs_corrected


def morse_solution(params: MorseParameters, sign: RiccatiSign = RiccatiSign.PLUS):
    """Convenience: the Morse Riccati bundle for these parameters."""
    return riccati.morse_riccati(params.shape(), sign)
