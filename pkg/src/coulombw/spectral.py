"""Spectral data of the half-line Coulomb operators: eigenvalue conditions
for the three boundary-condition families, Green's function kernels
(including the doubly degenerate lattice), eigenprojection kernels, the
blow-up reparameterizations, and the self-adjointness predicate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .branching import as_cvalue, principal_ln, principal_pow, lower_edge, upper_edge
from .core import EULER_GAMMA, digamma, gamma, is_nonpositive_int, rgamma, trigamma
from .errors import PreconditionError, SpectrumHit
from .params import SNAP_TOL, WhittakerParams, dist_to_natural
from .whittaker import whittaker_h, whittaker_i_ext, whittaker_k, whittaker_x
from .bessel1 import bessel1_h

INFINITY = complex(math.inf, 0.0)

_SPECTRUM_TOL = 1e-12
_LATTICE_TOL = 1e-10


def is_infinite(v) -> bool:
    v = complex(v)
    return cmath.isinf(v)


class Family(Enum):
    GENERIC = "generic"
    NU_ZERO = "nu-zero"
    NU_HALF = "nu-half"


@dataclass(frozen=True)
class BoundaryCondition:
    """One of the three holomorphic boundary-condition families.

    Generic carries kappa (m generic), NU_ZERO/NU_HALF carry nu for m = 0
    and m = 1/2 (m = -1/2 is routed to the 1/2-family).  The value lives
    on the Riemann sphere: complex(inf, 0) encodes infinity.
    """

    family: Family
    value: complex

    def validate_m(self, m: complex):
        m = complex(m)
        if self.family is Family.GENERIC:
            if abs(m.real) >= 1:
                raise PreconditionError("generic family needs |Re m| < 1")
            if min(abs(m), abs(m - 0.5), abs(m + 0.5)) <= SNAP_TOL:
                raise PreconditionError("m in {-1/2, 0, 1/2} belongs to the nu-families")
        elif self.family is Family.NU_ZERO:
            if abs(m) > SNAP_TOL:
                raise PreconditionError("nu-zero family requires m = 0")
        else:
            if abs(abs(m.real) - 0.5) > SNAP_TOL or abs(m.imag) > SNAP_TOL:
                raise PreconditionError("nu-half family requires m = +-1/2")


class Regime(Enum):
    NEGATIVE = "NegativeEnergy"
    POSITIVE_UPPER = "PositiveEnergyUpper"
    POSITIVE_LOWER = "PositiveEnergyLower"
    ZERO = "ZeroEnergy"


@dataclass(frozen=True)
class SpectralPoint:
    lam: complex
    k_or_mu: Optional[complex]
    regime: Regime
    residual: float = 0.0


@dataclass(frozen=True)
class KernelQuery:
    params: WhittakerParams
    bc: BoundaryCondition
    k: complex
    x: float
    y: float

    def __post_init__(self):
        if complex(self.k).real <= 0:
            raise PreconditionError("Re k must be > 0")
        if not (self.x > 0 and self.y > 0):
            raise PreconditionError("x, y must be > 0")


# ---------------------------------------------------------------------------
# eigenvalue conditions

def _check_re_k(k: complex):
    if complex(k).real <= 0:
        raise PreconditionError("Re k must be > 0")


def kappa_of_k(beta, m, k) -> complex:
    """Mixing parameter kappa for which lambda = -k^2 is an eigenvalue.

    Zero on the pure lattice beta/2k - m - 1/2 in N (the denominator gamma
    pole), infinite on beta/2k + m - 1/2 in N; the latter set is excluded
    here (the stated condition degenerates) and raises instead.
    """
    beta, m, k = complex(beta), complex(m), complex(k)
    _check_re_k(k)
    d = beta / (2 * k)
    if dist_to_natural(d + m - 0.5) < _LATTICE_TOL:
        raise PreconditionError("beta/2k + m - 1/2 in N is excluded")
    pref = principal_pow(2 * k, -2 * m) * gamma(2 * m) * rgamma(-2 * m)
    return pref * gamma(0.5 - m - d) * rgamma(0.5 + m - d)


def inv_kappa_of_k(beta, m, k) -> complex:
    """1/kappa as a holomorphic condition; used to invert kappa = infinity."""
    beta, m, k = complex(beta), complex(m), complex(k)
    _check_re_k(k)
    d = beta / (2 * k)
    if dist_to_natural(d - m - 0.5) < _LATTICE_TOL:
        raise PreconditionError("beta/2k - m - 1/2 in N is excluded for 1/kappa")
    pref = principal_pow(2 * k, 2 * m) * gamma(-2 * m) * rgamma(2 * m)
    return pref * gamma(0.5 + m - d) * rgamma(0.5 - m - d)


def nu_half_of_k(beta, k) -> complex:
    """nu(k) for the m = 1/2 family; reduces to -k as beta -> 0."""
    beta, k = complex(beta), complex(k)
    _check_re_k(k)
    if beta == 0:
        return -k
    d = beta / (2 * k)
    if dist_to_natural(d) < _LATTICE_TOL:
        raise PreconditionError("beta/2k in N is excluded")
    return -beta * (0.5 * digamma(1 - d) + 0.5 * digamma(-d)
                    + 2 * EULER_GAMMA - 1 + cmath.log(2 * k))


def nu_zero_of_k(beta, k) -> complex:
    """nu(k) for the m = 0 family; gamma + ln(k/2) at beta = 0."""
    beta, k = complex(beta), complex(k)
    _check_re_k(k)
    d = beta / (2 * k)
    if dist_to_natural(d - 0.5) < _LATTICE_TOL:
        raise PreconditionError("beta/2k - 1/2 in N is excluded")
    return digamma(0.5 - d) + 2 * EULER_GAMMA + cmath.log(2 * k)


def _edge_ln(beta, edge: int) -> complex:
    bv = as_cvalue(beta)
    if bv.on_cut:
        bv = upper_edge(bv.re) if edge > 0 else lower_edge(bv.re)
    return principal_ln(bv)


def positive_energy_condition(family: Family, beta, m, mu: float, edge: int) -> complex:
    """kappa or nu putting lambda = mu^2 +- i0 in the point spectrum."""
    beta, m = complex(beta), complex(m)
    e = +1 if edge > 0 else -1
    mu = float(mu)
    if not (0 < mu < e * beta.imag):
        raise PreconditionError("need 0 < mu < +-Im(beta) matching the edge")
    d = beta / (2 * mu)
    if family is Family.GENERIC:
        return (cmath.exp(e * 1j * cmath.pi * m) * (2 * mu) ** (-2 * m)
                * gamma(2 * m) * rgamma(-2 * m)
                * gamma(0.5 - m - e * 1j * d) * rgamma(0.5 + m - e * 1j * d))
    if family is Family.NU_HALF:
        return -beta * (0.5 * digamma(1 - e * 1j * d) + 0.5 * digamma(-e * 1j * d)
                        + 2 * EULER_GAMMA - 1 + math.log(2 * mu) - e * 1j * cmath.pi / 2)
    return (digamma(0.5 - e * 1j * d) - e * 1j * cmath.pi / 2
            + 2 * EULER_GAMMA + math.log(2 * mu))


def zero_energy_condition(family: Family, beta, m, edge: int) -> complex:
    """kappa or nu putting lambda = 0 in the point spectrum."""
    m = complex(m)
    e = +1 if edge > 0 else -1
    bv = as_cvalue(beta)
    bc = complex(bv)
    if bc == 0:
        raise PreconditionError("beta must be nonzero")
    if family is Family.GENERIC:
        neg = as_cvalue(-bc)
        if neg.on_cut:
            neg = upper_edge(neg.re) if e > 0 else lower_edge(neg.re)
        return gamma(2 * m) * rgamma(-2 * m) / principal_pow(neg, 2 * m)
    lnb = _edge_ln(bv, e)
    sq_im = (cmath.exp(0.5 * lnb)).imag
    if not e * sq_im > 0:
        raise PreconditionError("need +-Im sqrt(beta) > 0 matching the edge")
    if family is Family.NU_HALF:
        return -bc * (lnb + 2 * EULER_GAMMA - 1 - e * 1j * cmath.pi)
    return lnb + 2 * EULER_GAMMA + 2 * math.log(2.0) - e * 1j * cmath.pi


def _inv_nu_half(beta, k) -> complex:
    """1/nu for the 1/2-family; analytic zero on the pole lattice."""
    beta, k = complex(beta), complex(k)
    _check_re_k(k)
    if beta == 0:
        return -1.0 / k
    d = beta / (2 * k)
    if dist_to_natural(d) < 1e-13 and abs(d) > 0.5:
        return 0.0 + 0.0j
    return 1.0 / (-beta * (0.5 * digamma(1 - d) + 0.5 * digamma(-d)
                           + 2 * EULER_GAMMA - 1 + cmath.log(2 * k)))


def _inv_nu_zero(beta, k) -> complex:
    """1/nu for the 0-family; analytic zero on the pole lattice."""
    beta, k = complex(beta), complex(k)
    _check_re_k(k)
    d = beta / (2 * k)
    if dist_to_natural(d - 0.5) < 1e-13:
        return 0.0 + 0.0j
    return 1.0 / (digamma(0.5 - d) + 2 * EULER_GAMMA + cmath.log(2 * k))


def condition_for(bc: BoundaryCondition, params: WhittakerParams):
    """The map k -> condition value used for eigenvalue search."""
    beta, m = params.beta, params.m
    if bc.family is Family.GENERIC:
        if is_infinite(bc.value):
            return (lambda k: inv_kappa_of_k(beta, m, k)), 0.0 + 0.0j
        if abs(complex(bc.value)) > 1.0:
            return (lambda k: inv_kappa_of_k(beta, m, k)), 1.0 / complex(bc.value)
        return (lambda k: kappa_of_k(beta, m, k)), complex(bc.value)
    if is_infinite(bc.value):
        fn_inv = _inv_nu_half if bc.family is Family.NU_HALF else _inv_nu_zero
        return (lambda k: fn_inv(beta, k)), 0.0 + 0.0j
    fn = nu_half_of_k if bc.family is Family.NU_HALF else nu_zero_of_k
    return (lambda k: fn(beta, k)), complex(bc.value)


# ---------------------------------------------------------------------------
# omega / eta / xi / zeta

def gamma_factor(beta, m, k) -> complex:
    """(2k)^{-m} / (Gamma(1/2+m-beta/2k) Gamma(1-2m))."""
    beta, m, k = complex(beta), complex(m), complex(k)
    d = beta / (2 * k)
    return principal_pow(2 * k, -m) * rgamma(0.5 + m - d) * rgamma(1 - 2 * m)


def eta(beta, m, kappa, k) -> complex:
    """Resolvent denominator gamma_m + kappa gamma_{-m} (kappa finite)."""
    if is_infinite(kappa):
        raise PreconditionError("eta is defined for finite kappa")
    return gamma_factor(beta, m, k) + complex(kappa) * gamma_factor(beta, -complex(m), k)


def omega_generic(beta, m, kappa, k) -> complex:
    m = complex(m)
    if is_infinite(kappa):
        return cmath.pi / cmath.sin(2 * cmath.pi * m)
    kappa = complex(kappa)
    if kappa == 0:
        return INFINITY
    gp = gamma_factor(beta, m, k)
    gm = gamma_factor(beta, -m, k)
    return (gp + kappa * gm) / (kappa * gm) * cmath.pi / cmath.sin(2 * cmath.pi * m)


def omega_half(beta, nu, k) -> complex:
    beta, k = complex(beta), complex(k)
    d = beta / (2 * k)
    return (-0.5 * digamma(1 - d) - 0.5 * digamma(-d) - 2 * EULER_GAMMA
            - cmath.log(2 * k) + 1 - complex(nu) / beta)


def omega_zero(beta, nu, k) -> complex:
    beta, k = complex(beta), complex(k)
    d = beta / (2 * k)
    return digamma(0.5 - d) + 2 * EULER_GAMMA + cmath.log(2 * k) - complex(nu)


def xi_half(beta, nu, k) -> complex:
    beta, k = complex(beta), complex(k)
    d = beta / (2 * k)
    return (0.5 * digamma(1 + d) + 0.5 * digamma(d) + 2 * EULER_GAMMA
            + cmath.log(2 * k) - 1 + complex(nu) / beta)


def xi_zero(beta, nu, k) -> complex:
    beta, k = complex(beta), complex(k)
    d = beta / (2 * k)
    return -digamma(0.5 + d) - 2 * EULER_GAMMA - cmath.log(2 * k) + complex(nu)


def zeta(beta, m, k) -> complex:
    """Normalization function for the eigenprojections; even in m.

    Analytic in k, so the positive-energy values are obtained by feeding
    k = -+ i mu.  Near m in {0, +-1/2} the continuous trigamma extensions
    are used.
    """
    beta, m, k = complex(beta), complex(m), complex(k)
    d = beta / (2 * k)
    if abs(m) <= SNAP_TOL:
        return 1 + d * trigamma(0.5 - d)
    if abs(abs(m) - 0.5) <= SNAP_TOL and abs(m.imag) <= SNAP_TOL:
        return -(1 + d / 2 * trigamma(1 - d) + d / 2 * trigamma(-d))
    return (cmath.pi * (2 * m + d * digamma(0.5 + m - d) - d * digamma(0.5 - m - d))
            / cmath.sin(2 * cmath.pi * m))


# ---------------------------------------------------------------------------
# resolvent kernels

def _pure_kernel(beta, m, k, xs, xl) -> complex:
    """Kernel of the pure operator (boundary condition ~ x^{1/2+m})."""
    d = complex(beta) / (2 * k)
    arg = 0.5 + complex(m) - d
    if is_nonpositive_int(arg, _SPECTRUM_TOL):
        raise SpectrumHit("-k^2 in the pure point spectrum", k=k)
    iv = whittaker_i_ext(WhittakerParams(d, m), 2 * k * xs).value
    kv = whittaker_k(WhittakerParams(d, m), 2 * k * xl).value
    return gamma(arg) / (2 * k) * iv * kv


def resolvent_kernel(q: KernelQuery) -> complex:
    """Green's function R(-k^2; x, y) of the selected operator.

    Symmetric in (x, y); raises SpectrumHit when the resolvent denominator
    vanishes (then -k^2 is an eigenvalue).  The doubly degenerate lattice
    of the nu-families is routed to the X-based kernels.
    """
    beta = complex(q.params.beta)
    m = complex(q.params.m)
    k = complex(q.k)
    q.bc.validate_m(m)
    xs, xl = (q.x, q.y) if q.x <= q.y else (q.y, q.x)
    d = beta / (2 * k)
    zs, zl = 2 * k * xs, 2 * k * xl
    pw = WhittakerParams(d, m)

    if q.bc.family is Family.GENERIC:
        kappa = q.bc.value
        if is_infinite(kappa):
            return _pure_kernel(beta, -m, k, xs, xl)
        kappa = complex(kappa)
        gp = gamma_factor(beta, m, k)
        gm = gamma_factor(beta, -m, k)
        den = gp + kappa * gm
        if abs(den) <= _SPECTRUM_TOL * (abs(gp) + abs(kappa) * abs(gm)):
            raise SpectrumHit("eta vanished: -k^2 is an eigenvalue", k=k)
        u = (principal_pow(2 * k, -m) * rgamma(1 - 2 * m)
             * whittaker_i_ext(pw, zs).value
             + kappa * principal_pow(2 * k, m) * rgamma(1 + 2 * m)
             * whittaker_i_ext(WhittakerParams(d, -m), zs).value)
        return u * whittaker_k(pw, zl).value / (2 * k * den)

    nu = q.bc.value
    if q.bc.family is Family.NU_HALF:
        mm = 0.5
        on_lattice = dist_to_natural(d) <= SNAP_TOL and abs(d) > 0.5
        if is_infinite(nu):
            return _pure_kernel(beta, mm, k, xs, xl)
        if on_lattice:
            # X-based kernel on the lattice beta/2k in N; the overall sign
            # is fixed by the jump condition Wr(u, K) = -1, which the
            # boundary mixture with (-1)^n X fails by -1 for every n
            # (checked against both the nearby regular kernel and the
            # applied-operator residual), hence the leading minus.
            n = round(d.real)
            xi = xi_half(beta, nu, k)
            pwm = WhittakerParams(d, mm)
            u = ((-1.0) ** (n + 1) * whittaker_x(pwm, zs).value
                 - xi * rgamma(d) * rgamma(1 + d) * whittaker_k(pwm, zs).value)
            return u * whittaker_k(pwm, zl).value / (2 * k)
        om = omega_half(beta, nu, k)
        scale = (abs(digamma(1 - d)) / 2 + abs(digamma(-d)) / 2 + 2 * EULER_GAMMA
                 + abs(cmath.log(2 * k)) + 1 + abs(complex(nu) / beta))
        if abs(om) <= _SPECTRUM_TOL * scale:
            raise SpectrumHit("omega vanished: -k^2 is an eigenvalue", k=k)
        pwm = WhittakerParams(d, mm)
        u = (om * rgamma(-d) * whittaker_i_ext(pwm, zs).value
             + whittaker_k(pwm, zs).value)
        return gamma(-d) * gamma(1 - d) / (2 * k * om) * u * whittaker_k(pwm, zl).value

    # NU_ZERO
    mm = 0.0
    on_lattice = dist_to_natural(d - 0.5) <= SNAP_TOL
    if is_infinite(nu):
        return _pure_kernel(beta, mm, k, xs, xl)
    if on_lattice:
        n = round((d - 0.5).real)
        xi = xi_zero(beta, nu, k)
        pwm = WhittakerParams(d, mm)
        u = ((-1.0) ** (n + 1) * whittaker_x(pwm, zs).value
             + xi * rgamma(0.5 + d) ** 2 * whittaker_k(pwm, zs).value)
        return u * whittaker_k(pwm, zl).value / (2 * k)
    om = omega_zero(beta, nu, k)
    scale = (abs(digamma(0.5 - d)) + 2 * EULER_GAMMA + abs(cmath.log(2 * k))
             + abs(complex(nu)))
    if abs(om) <= _SPECTRUM_TOL * scale:
        raise SpectrumHit("omega vanished: -k^2 is an eigenvalue", k=k)
    pwm = WhittakerParams(d, mm)
    u = (om * rgamma(0.5 - d) * whittaker_i_ext(pwm, zs).value
         + whittaker_k(pwm, zs).value)
    return gamma(0.5 - d) ** 2 / (2 * k * om) * u * whittaker_k(pwm, zl).value


# ---------------------------------------------------------------------------
# eigenprojection kernels

def _sin_factor(m: complex) -> complex:
    """sin(2 pi m) / (m (4m^2 - 1)) with the continuous extensions."""
    if abs(m) <= SNAP_TOL:
        return -2 * cmath.pi
    if abs(abs(m) - 0.5) <= SNAP_TOL and abs(m.imag) <= SNAP_TOL:
        return -cmath.pi
    return cmath.sin(2 * cmath.pi * m) / (m * (4 * m * m - 1))


def projection_kernel(p: WhittakerParams, pt: SpectralPoint, x: float, y: float) -> complex:
    """Rank-one eigenprojection kernel P(lambda; x, y), bilinear-normalized."""
    beta, m = complex(p.beta), complex(p.m)
    if not (x > 0 and y > 0):
        raise PreconditionError("x, y must be > 0")
    if pt.regime is Regime.NEGATIVE:
        k = complex(pt.k_or_mu)
        _check_re_k(k)
        d = beta / (2 * k)
        pw = WhittakerParams(d, m)
        c = (k * gamma(0.5 + m - d) * gamma(0.5 - m - d) / zeta(beta, m, k))
        return c * whittaker_k(pw, 2 * k * x).value * whittaker_k(pw, 2 * k * y).value
    if pt.regime in (Regime.POSITIVE_UPPER, Regime.POSITIVE_LOWER):
        e = +1 if pt.regime is Regime.POSITIVE_UPPER else -1
        mu = float(complex(pt.k_or_mu).real)
        if not (0 < mu < e * beta.imag):
            raise PreconditionError("mu outside the admissible strip")
        d = beta / (2 * mu)
        pw = WhittakerParams(d, m)
        c = (cmath.exp(e * 1j * cmath.pi * m) * mu
             * gamma(0.5 + m - e * 1j * d) * gamma(0.5 - m - e * 1j * d)
             / zeta(beta, m, -e * 1j * mu))
        hx = whittaker_h(pw, e, 2 * mu * x).value
        hy = whittaker_h(pw, e, 2 * mu * y).value
        return c * hx * hy
    # zero energy
    bv = as_cvalue(beta)
    if bv.on_cut:
        e, sq = +1, 1j * math.sqrt(-bv.re)
    else:
        if beta == 0 or (beta.imag == 0 and beta.real > 0):
            raise PreconditionError("lambda = 0 needs beta outside [0, inf)")
        sq = cmath.sqrt(beta)
        e = +1 if sq.imag > 0 else -1
    c = 3 * cmath.exp(e * 2j * cmath.pi * m) * beta * _sin_factor(m)
    wx = 2 * sq * math.sqrt(x)
    wy = 2 * sq * math.sqrt(y)
    hx = (beta * x) ** 0.25 * bessel1_h(2 * m, e, wx).value
    hy = (beta * y) ** 0.25 * bessel1_h(2 * m, e, wy).value
    return c * hx * hy


# ---------------------------------------------------------------------------
# blow-up maps and self-adjointness

def blowup_kappa0(m, nu) -> complex:
    """kappa^(0)(m, nu) = -1/(1 + 2 m nu) on the Riemann sphere."""
    m = complex(m)
    if m == 0:
        return complex(-1.0)
    if is_infinite(nu):
        return 0.0 + 0.0j
    den = 1 + 2 * m * complex(nu)
    if den == 0:
        return INFINITY
    return -1.0 / den


def blowup_kappa_half(beta, m, nu) -> complex:
    """kappa^(1/2)(beta, m, nu) = 1/(-beta/(2m-1) + nu)."""
    beta, m = complex(beta), complex(m)
    if is_infinite(nu):
        return 0.0 + 0.0j
    if m == 0.5:
        if beta != 0:
            return 0.0 + 0.0j
        den = complex(nu)
    else:
        den = -beta / (2 * m - 1) + complex(nu)
    if den == 0:
        return INFINITY
    return 1.0 / den


def is_self_adjoint(p: WhittakerParams, bc: BoundaryCondition, tol: float = 1e-12) -> bool:
    """Self-adjointness predicate for the three families."""
    beta, m = complex(p.beta), complex(p.m)
    if abs(beta.imag) > tol:
        return False
    if bc.family is Family.GENERIC:
        kappa = bc.value
        real_m = abs(m.imag) <= tol and -1 < m.real < 1
        imag_m = abs(m.real) <= tol and abs(m.imag) > tol
        if real_m:
            return is_infinite(kappa) or abs(complex(kappa).imag) <= tol
        if imag_m:
            return (not is_infinite(kappa)) and abs(abs(complex(kappa)) - 1.0) <= tol
        return False
    nu = bc.value
    return is_infinite(nu) or abs(complex(nu).imag) <= tol
