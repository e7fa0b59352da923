"""Whittaker-type special functions for the hyperbolic half-line equation.

Four solutions are provided: the regularized series solution I (finite at
0 for Re m > -1/2), the exponentially decaying K, the exponentially
exploding X built from the two edge continuations of K, and the rotated
trigonometric variants J and H+-.

Regimes: direct series for |z| <= 40 (one audited path), optimally
truncated 2F0 asymptotics beyond, logarithmic series when 2m snaps to an
integer, Laguerre closed forms on the polynomial lattices.  Inside the
series regime the combinations defining K and X cancel like e^|z|; the
evaluator estimates the required working precision up front and runs the
same series code over mpmath when doubles cannot deliver the target,
reporting the achieved accuracy in err_est either way.
"""

from __future__ import annotations

import cmath
import math
import mpmath as mp

from .branching import Branch, ComplexValue, as_cvalue, principal_ln, principal_pow, rotate_half_pi, rotate_pi
from .core import Evaluation, Method, digamma, gamma, rgamma
from .errors import DomainError, NonConvergenceError
from .params import SNAP_TOL, WARN_TOL, WhittakerParams, dist_to_integer, dist_to_natural

SERIES_CAP = 40.0          # |z| above which the direct series is refused
_MAX_TERMS = 4000
_LOG10E = 0.4342944819032518


# ---------------------------------------------------------------------------
# arithmetic backends: plain complex vs mpmath at a chosen precision

class _FB:
    """Double-precision backend."""

    eps = 2.3e-16
    is_mp = False

    @staticmethod
    def c(x):
        return complex(x)

    @staticmethod
    def exp(x):
        return cmath.exp(x)

    @staticmethod
    def sin(x):
        return cmath.sin(x)

    @staticmethod
    def cos(x):
        return cmath.cos(x)

    pi = math.pi

    rgamma = staticmethod(rgamma)
    digamma = staticmethod(digamma)

    @staticmethod
    def ln_tagged(zv: ComplexValue):
        return principal_ln(zv)

    @staticmethod
    def to_complex(x):
        return complex(x)

    @staticmethod
    def mag(x):
        return abs(x)


class _MB:
    """mpmath backend; caller must hold mp.workdps(dps)."""

    is_mp = True

    def __init__(self, dps: int):
        self.dps = dps
        self.eps = float(mp.mpf(10) ** (1 - dps))
        self.pi = mp.pi

    @staticmethod
    def c(x):
        return mp.mpc(x)

    @staticmethod
    def exp(x):
        return mp.exp(x)

    @staticmethod
    def sin(x):
        return mp.sin(x)

    @staticmethod
    def cos(x):
        return mp.cos(x)

    @staticmethod
    def rgamma(x):
        return mp.rgamma(x)

    @staticmethod
    def digamma(x):
        return mp.digamma(x)

    @staticmethod
    def ln_tagged(zv: ComplexValue):
        zc = complex(zv)
        if zv.branch is Branch.PRINCIPAL:
            return mp.log(mp.mpc(zc))
        return mp.mpc(mp.log(abs(mp.mpc(zc)))) + mp.mpc(0, 1) * zv.arg() / math.pi * mp.pi

    @staticmethod
    def to_complex(x):
        return complex(x)

    @staticmethod
    def mag(x):
        # |re| + |im| bound: within sqrt(2) of the modulus and much cheaper
        x = mp.mpc(x)
        return abs(float(x.real)) + abs(float(x.imag))


def _run(digits: float, fn):
    """Run fn(backend) in doubles if they suffice, else in mpmath."""
    if digits <= 18.5:
        return fn(_FB)
    dps = int(math.ceil(digits)) + 4
    with mp.workdps(dps):
        return fn(_MB(dps))


def _digits_i(z: complex, extra: float = 0.0) -> float:
    return 17.0 + _LOG10E * (abs(z) - z.real) + extra


def _digits_k(z: complex, extra: float = 0.0) -> float:
    return 17.0 + _LOG10E * abs(z) + extra


def _digits_x(z: complex, extra: float = 0.0) -> float:
    az = abs(z)
    return 17.0 + _LOG10E * max(az - z.real, 2.0 * math.sqrt(az)) + extra


# ---------------------------------------------------------------------------
# series kernels (backend generic)

def _i_sum(a, two_m, z, be, k0: int = 0):
    """sum_{k>=k0} (a)_k z^k / (k! Gamma(1+two_m+k)).

    k0 > 0 enters when 2m is a negative integer -k0: the earlier terms
    vanish through the Gamma in the denominator.
    """
    a = be.c(a)
    z = be.c(z)
    tm = be.c(two_m)
    if k0 == 0:
        t = be.c(be.rgamma(1 + tm))
        k_start = 1
    else:
        t = be.c(1)
        for i in range(k0):
            t *= (a + i) * z
        for i in range(1, k0 + 1):
            t /= i
        k_start = k0 + 1
    s = t
    mx = be.mag(t)
    last = mx
    small = 0
    for k in range(k_start, _MAX_TERMS):
        t = t * (a + (k - 1)) * z / (k * (tm + k))
        s += t
        last = be.mag(t)
        if last > mx:
            mx = last
        if last <= be.eps * be.mag(s) or t == 0:
            small += 1
            if small >= 3 or t == 0:
                return s, mx, float(last)
        else:
            small = 0
    raise NonConvergenceError("series cap hit at |z|=%g" % abs(complex(z)))


def _i_value(beta, m, zv: ComplexValue, be, k0: int):
    """I_{beta,m}(z) = z^{1/2+m} e^{-z/2} * sum, in the given backend."""
    lz = be.ln_tagged(zv)
    z = be.c(complex(zv))
    s, mx, last = _i_sum(be.c(0.5) + be.c(m) - be.c(beta), 2 * complex(m), z, be, k0)
    pref = be.exp((be.c(0.5) + be.c(m)) * lz - z / 2)
    val = pref * s
    err = be.mag(pref) * (be.eps * mx + last)
    return val, float(err)


def _snap_two_m(m: complex):
    """Return (p, dist) where p = round(2m) when 2m is near an integer."""
    d = dist_to_integer(2 * m)
    return round((2 * m).real), d


def _i_start_index(m: complex) -> int:
    p, d = _snap_two_m(m)
    if d <= SNAP_TOL and p <= -1:
        return -p
    return 0


def whittaker_i(p: WhittakerParams, z) -> Evaluation:
    """Regular series solution; raises NonConvergence beyond |z| = 40.

    The sign option in the defining series is fixed to e^{-z/2} with
    argument +z; arguments with Re z < 0 are first reflected to the right
    half-plane, which keeps the summation well conditioned.
    """
    zv = as_cvalue(z)
    zc = complex(zv)
    if zc == 0:
        raise DomainError("z must be nonzero")
    if abs(zc) > SERIES_CAP:
        raise NonConvergenceError(
            "direct series refused for |z|=%g > %g; use the connection "
            "formula through K and X" % (abs(zc), SERIES_CAP)
        )
    return _i_eval(p.beta, p.m, zv)


def _i_eval(beta, m, zv: ComplexValue) -> Evaluation:
    zc = complex(zv)
    if zc.real < 0:
        # reflect to Re z > 0: I_{b,m}(z) = e^{s i pi(1/2+m)} I_{-b,m}(e^{-s i pi} z)
        s = 1 if zv.arg() > 0 else -1
        w = rotate_pi(zv, -s)
        factor = cmath.exp(1j * s * cmath.pi * (0.5 + complex(m)))
        inner = _i_eval(-complex(beta), m, w)
        return Evaluation(factor * inner.value, abs(factor) * inner.err_est, inner.method)
    k0 = _i_start_index(complex(m))
    m_eff = complex(m)
    if k0 > 0:
        m_eff = round((2 * m_eff).real) / 2.0
    digits = _digits_i(zc)

    def body(be):
        val, err = _i_value(beta, m_eff, zv, be, k0)
        return be.to_complex(val), err

    val, err = _run(digits, body)
    return Evaluation(val, err, Method.DIRECT_SERIES)


# ---------------------------------------------------------------------------
# K: decaying solution

def _canonical_m(m: complex) -> complex:
    """K and related even-in-m objects are evaluated at a canonical m."""
    if m.real < 0 or (m.real == 0 and m.imag < 0):
        return -m
    return m


def laguerre(n: int, p, z) -> complex:
    """Laguerre polynomial L_n^(p)(z) by its finite double-factorial sum."""
    n = int(n)
    if n < 0:
        raise DomainError("Laguerre index must be a natural number")
    p = complex(p)
    z = complex(z)
    total = 0j
    for k in range(n + 1):
        c = 1.0 + 0.0j
        for i in range(n - k):
            c *= p + k + 1 + i
        total += c * (-z) ** k / (math.factorial(n - k) * math.factorial(k))
    return total


def _k_asym_tagged(beta, m, zv: ComplexValue):
    """z^beta e^{-z/2} 2F0(1/2+m-beta, 1/2-m-beta; -; -1/z), optimally truncated."""
    zc = complex(zv)
    a = 0.5 + complex(m) - complex(beta)
    b = 0.5 - complex(m) - complex(beta)
    w = -1.0 / zc
    t = 1.0 + 0.0j
    s = t
    prev = abs(t)
    err = prev
    n = 0
    while n < 2 * abs(zc) + 20:
        t_next = t * (a + n) * (b + n) * w / (n + 1)
        if abs(t_next) >= prev and n > 2:
            err = abs(t_next)
            break
        t = t_next
        s += t
        prev = abs(t)
        err = prev
        n += 1
        if prev <= 1e-18 * abs(s):
            break
    pref = cmath.exp(complex(beta) * principal_ln(zv) - zc / 2)
    return pref * s, abs(pref) * err


def _k_degenerate_value(beta, p_int: int, zv: ComplexValue, be):
    """Logarithmic series for K at 2m = p_int >= 0."""
    z = be.c(complex(zv))
    lz = be.ln_tagged(zv)
    a = be.c((1 + p_int) / 2.0) - be.c(beta)
    g = a - p_int
    sign = be.c((-1.0) ** (p_int + 1))
    rg_g = be.c(be.rgamma(g))
    rg_a = be.c(be.rgamma(a))
    epref = be.exp(-z / 2)
    zpref = be.exp(be.c((1 + p_int) / 2.0) * lz)

    mx = be.mag(zpref) * be.mag(epref)
    pieces = be.c(0)
    err_terms = 0.0
    if rg_g != 0:
        i_sum, i_mx, i_last = _i_sum(a, p_int, z, be, 0)
        log_term = lz * zpref * epref * i_sum
        # infinite psi-weighted sum
        t = be.c(1) / math.factorial(p_int)
        psi_a = be.digamma(a)
        psi_p = be.digamma(be.c(p_int + 1))
        psi_1 = be.digamma(be.c(1))
        ssum = t * (psi_a - psi_p - psi_1)
        smx = be.mag(ssum)
        last = smx
        small = 0
        for k in range(1, _MAX_TERMS):
            t = t * (a + (k - 1)) * z / (k * (p_int + k))
            psi_a += 1 / (a + (k - 1))
            psi_p += 1 / be.c(p_int + k)
            psi_1 += 1 / be.c(k)
            term = t * (psi_a - psi_p - psi_1)
            ssum += term
            last = be.mag(term)
            smx = max(smx, last)
            if last <= be.eps * max(be.mag(ssum), 1e-300):
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
        else:
            raise NonConvergenceError("degenerate series cap hit")
        pieces = rg_g * (log_term + epref * zpref * ssum)
        mx_piece = be.mag(rg_g) * (be.mag(lz) * be.mag(zpref) * be.mag(epref) * i_mx
                                   + be.mag(epref) * be.mag(zpref) * smx)
        err_terms += be.eps * mx_piece
    # finite part, written with entire coefficients (g)_{p-j} / Gamma(a)
    if p_int > 0:
        fsum = be.c(0)
        for j in range(1, p_int + 1):
            coef = be.c(1)
            for i in range(p_int - j):
                coef *= g + i
            term = (coef * ((-1.0) ** (j - 1)) * math.factorial(j - 1)
                    / math.factorial(p_int - j) * be.exp(be.c(-j) * lz))
            fsum += term
        pieces += rg_a * epref * zpref * fsum
        err_terms += be.eps * be.mag(rg_a) * be.mag(epref) * be.mag(zpref) * be.mag(fsum)
    val = sign * pieces
    return val, err_terms


def whittaker_k(p: WhittakerParams, z, _extra_digits: float = 0.0) -> Evaluation:
    """Exponentially decaying solution K_{beta,m}(z); even in m.

    Generic m: combination of two series solutions.  2m within snap of an
    integer: logarithmic series, or the Laguerre closed form on the
    polynomial lattice.  |z| > 40: optimally truncated asymptotics.
    Between the snap and warn tolerances the generic combination is
    returned with accuracy_loss set and err_est inflated.
    """
    zv = as_cvalue(z)
    zc = complex(zv)
    if zc == 0:
        raise DomainError("z must be nonzero")
    beta = complex(p.beta)
    m = _canonical_m(complex(p.m))
    if abs(zc) > SERIES_CAP:
        val, err = _k_asym_tagged(beta, m, zv)
        return Evaluation(val, err, Method.ASYMPTOTIC_SERIES)
    p_int, d2 = _snap_two_m(m)
    if d2 <= SNAP_TOL:
        n_lag = beta - (1 + p_int) / 2.0
        if dist_to_natural(n_lag) <= SNAP_TOL:
            n = round(n_lag.real)
            val = ((-1.0) ** n * math.factorial(n)
                   * principal_pow(zv, (1 + p_int) / 2.0) * cmath.exp(-zc / 2)
                   * laguerre(n, float(p_int), zc))
            return Evaluation(val, 1e-15 * abs(val) * (1 + abs(zc)), Method.CLOSED_FORM)

        def body(be):
            val, err = _k_degenerate_value(beta, p_int, zv, be)
            return be.to_complex(val), err

        val, err = _run(_digits_k(zc, _extra_digits), body)
        return Evaluation(val, err, Method.DEGENERATE_SERIES)

    accuracy_loss = d2 < WARN_TOL
    digits = _digits_k(zc, _extra_digits) if not accuracy_loss else 17.0

    def body(be):
        lz = be.ln_tagged(zv)
        z_n = be.c(zc)
        mm = be.c(m)
        s_plus, mx_p, last_p = _i_sum(be.c(0.5) + mm - be.c(beta), 2 * m, z_n, be, 0)
        s_minus, mx_m, last_m = _i_sum(be.c(0.5) - mm - be.c(beta), -2 * m, z_n, be,
                                       _i_start_index(-m))
        zp = be.exp(mm * lz)
        zm = be.exp(-mm * lz)
        base = be.exp(be.c(0.5) * lz - z_n / 2)
        combo = (-be.c(be.rgamma(0.5 - mm - be.c(beta))) * zp * s_plus
                 + be.c(be.rgamma(0.5 + mm - be.c(beta))) * zm * s_minus)
        factor = be.pi / be.sin(2 * be.pi * mm)
        val = factor * base * combo
        scale = be.mag(factor) * be.mag(base) * (
            be.mag(zp) * (be.eps * mx_p + last_p) + be.mag(zm) * (be.eps * mx_m + last_m)
        )
        return be.to_complex(val), float(scale)

    val, err = _run(digits, body)
    if accuracy_loss:
        # inside the warn band the combination cancels to O(dist) of its
        # pieces on top of the e^|z| series cancellation
        err = max(err, abs(val) * 2.3e-16 * math.exp(min(abs(zc), 40.0))
                  / (2 * math.pi * max(d2, 1e-16)))
    return Evaluation(val, err, Method.DIRECT_SERIES, accuracy_loss=accuracy_loss)


# ---------------------------------------------------------------------------
# X: exploding companion built from the edge continuations of K

def _x_degenerate_value(beta, p_int: int, zv: ComplexValue, be):
    """Logarithmic series for X at 2m = p_int >= 0."""
    z = be.c(complex(zv))
    lz = be.ln_tagged(zv)
    a = be.c((1 + p_int) / 2.0) + be.c(beta)
    g = a - p_int
    sign = be.c((-1.0) ** (p_int + 1))
    rg_g = be.c(be.rgamma(g))
    rg_a = be.c(be.rgamma(a))
    epref = be.exp(z / 2)
    zpref = be.exp(be.c((1 + p_int) / 2.0) * lz)
    pieces = be.c(0)
    err_terms = 0.0
    if rg_g != 0:
        i_sum, i_mx, i_last = _i_sum(be.c(0.5 + p_int / 2.0) - be.c(beta), p_int, z, be, 0)
        ipref = be.exp(-z / 2)
        log_term = lz * zpref * ipref * i_sum
        t = be.c(1) / math.factorial(p_int)
        psi_a = be.digamma(a)
        psi_p = be.digamma(be.c(p_int + 1))
        psi_1 = be.digamma(be.c(1))
        ssum = t * (psi_a - psi_p - psi_1)
        smx = be.mag(ssum)
        small = 0
        for k in range(1, _MAX_TERMS):
            t = t * (a + (k - 1)) * (-z) / (k * (p_int + k))
            psi_a += 1 / (a + (k - 1))
            psi_p += 1 / be.c(p_int + k)
            psi_1 += 1 / be.c(k)
            term = t * (psi_a - psi_p - psi_1)
            ssum += term
            last = be.mag(term)
            smx = max(smx, last)
            if last <= be.eps * max(be.mag(ssum), 1e-300):
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
        else:
            raise NonConvergenceError("degenerate series cap hit")
        pieces = rg_g * (log_term + epref * zpref * ssum)
        err_terms += be.eps * be.mag(rg_g) * (
            be.mag(lz) * be.mag(zpref) * be.mag(ipref) * i_mx
            + be.mag(epref) * be.mag(zpref) * smx
        )
    if p_int > 0:
        fsum = be.c(0)
        for j in range(1, p_int + 1):
            coef = be.c(1)
            for i in range(p_int - j):
                coef *= g + i
            fsum += (coef * math.factorial(j - 1) / math.factorial(p_int - j)
                     * be.exp(be.c(-j) * lz))
        pieces -= rg_a * epref * zpref * fsum
        err_terms += be.eps * be.mag(rg_a) * be.mag(epref) * be.mag(zpref) * be.mag(fsum)
    val = sign * pieces
    return val, err_terms


def _x_asym(beta, m, zv: ComplexValue):
    """Large-|z| X from the edge continuations of the decaying asymptotics."""
    zc = complex(zv)
    a = zv.arg()
    out = []
    errs = []
    for s in (+1, -1):
        if abs(a + s * math.pi) > math.pi + 1e-12:
            continue
        w = rotate_pi(zv, s)
        kv, ke = _k_asym_tagged(-beta, m, w)
        factor = cmath.exp(-1j * s * cmath.pi * (0.5 + complex(m)))
        out.append(factor * kv)
        errs.append(abs(factor) * ke)
    if len(out) == 2:
        val = (out[0] + out[1]) / 2.0
        err = (errs[0] + errs[1]) / 2.0 + 2.3e-16 * (abs(out[0]) + abs(out[1]))
        return val, err
    # off the real axis only one edge rotation stays on the sheet; correct
    # the single continuation by the regular solution (exact relation).
    s = +1 if a <= 0 else -1
    w = rotate_pi(zv, s)
    kv, ke = _k_asym_tagged(-beta, m, w)
    factor = cmath.exp(-1j * s * cmath.pi * (0.5 + complex(m)))
    ival, ierr = _i_large(beta, -complex(m), zv)
    corr = 1j * s * cmath.pi * rgamma(0.5 + complex(m) + beta)
    return factor * kv + corr * ival, abs(factor) * ke + abs(corr) * ierr


def whittaker_x(p: WhittakerParams, z) -> Evaluation:
    """Exponentially exploding companion solution X_{beta,m}(z).

    Snaps to the K-proportional closed relation when m + beta is an
    integer (there the two are dependent); otherwise combination of the
    series solutions, logarithmic series at integer 2m, Laguerre closed
    form on the exploding lattice, and edge-continued asymptotics for
    |z| > 40.
    """
    zv = as_cvalue(z)
    zc = complex(zv)
    if zc == 0:
        raise DomainError("z must be nonzero")
    beta = complex(p.beta)
    m = complex(p.m)
    d_mb = dist_to_integer(m + beta)
    if d_mb <= SNAP_TOL:
        kv = whittaker_k(p, zv)
        ratio = gamma(0.5 - m - beta) * rgamma(0.5 - m + beta)
        return Evaluation(ratio * kv.value, abs(ratio) * kv.err_est + 1e-16 * abs(ratio * kv.value),
                          kv.method, kv.accuracy_loss)
    if abs(zc) > SERIES_CAP:
        val, err = _x_asym(beta, m, zv)
        return Evaluation(val, err, Method.ASYMPTOTIC_SERIES)
    extra = 0.0
    if d_mb < 1e-2:
        extra = _LOG10E * min(-math.log(math.pi * d_mb), max(zc.real, 0.0))
    p_int, d2 = _snap_two_m(m)
    if d2 <= SNAP_TOL:
        pa = abs(p_int)
        flip = (-1.0) ** p_int if p_int < 0 else 1.0
        n_exp = -beta - (1 + pa) / 2.0
        if dist_to_natural(n_exp) <= SNAP_TOL:
            n = round(n_exp.real)
            val = ((-1.0) ** n * math.factorial(n)
                   * principal_pow(zv, (1 + pa) / 2.0) * cmath.exp(zc / 2)
                   * laguerre(n, float(pa), -zc)) * flip
            return Evaluation(val, 1e-15 * abs(val) * (1 + abs(zc)), Method.CLOSED_FORM)

        def body(be):
            val, err = _x_degenerate_value(beta, pa, zv, be)
            return be.to_complex(val), err

        val, err = _run(_digits_x(zc, extra), body)
        return Evaluation(flip * val, err, Method.DEGENERATE_SERIES)

    accuracy_loss = d2 < WARN_TOL
    digits = _digits_x(zc, extra) if not accuracy_loss else 17.0

    def body(be):
        lz = be.ln_tagged(zv)
        z_n = be.c(zc)
        mm = be.c(m)
        bb = be.c(beta)
        s_plus, mx_p, last_p = _i_sum(be.c(0.5) + mm - bb, 2 * m, z_n, be, _i_start_index(m))
        s_minus, mx_m, last_m = _i_sum(be.c(0.5) - mm - bb, -2 * m, z_n, be, _i_start_index(-m))
        zp = be.exp(mm * lz)
        zm = be.exp(-mm * lz)
        base = be.exp(be.c(0.5) * lz - z_n / 2)
        combo = (be.c(be.rgamma(0.5 - mm + bb)) * zp * s_plus
                 - be.cos(2 * be.pi * mm) * be.c(be.rgamma(0.5 + mm + bb)) * zm * s_minus)
        factor = -be.pi / be.sin(2 * be.pi * mm)
        val = factor * base * combo
        scale = be.mag(factor) * be.mag(base) * (
            be.mag(zp) * (be.eps * mx_p + last_p) + be.mag(zm) * (be.eps * mx_m + last_m)
        )
        return be.to_complex(val), float(scale)

    val, err = _run(digits, body)
    if accuracy_loss:
        err = max(err, abs(val) * 2.3e-16 * math.exp(min(abs(zc), 40.0))
                  / (2 * math.pi * max(d2, 1e-16)))
    return Evaluation(val, err, Method.DIRECT_SERIES, accuracy_loss=accuracy_loss)


# ---------------------------------------------------------------------------
# large-|z| regular solution through the well-conditioned {K, edge-K} basis

def _i_large(beta, m, zv: ComplexValue):
    """I for |z| > 40 via I = A*K(z) + B*E(z), E the single-edge continuation.

    The {K, E} pair has Wronskian of unit modulus for every (beta, m), so
    the coefficients below stay bounded; both pieces are evaluated by the
    decaying asymptotics on their own sheets.
    """
    beta = complex(beta)
    m = complex(m)
    zc = complex(zv)
    s = -1 if zv.arg() > 0 else +1
    w = rotate_pi(zv, s)
    theta = cmath.pi * (m + beta)
    a_coef = -s * 1j * rgamma(0.5 + m + beta) * cmath.exp(s * 1j * (theta - 2 * cmath.pi * m))
    b_coef = s * 1j * rgamma(0.5 + m - beta) * cmath.exp(s * 1j * theta)
    kv, ke = _k_asym_tagged(beta, m, zv)
    ev, ee = _k_asym_tagged(-beta, m, w)
    e_pref = cmath.exp(-s * 1j * cmath.pi * (0.5 + m))
    val = a_coef * kv + b_coef * e_pref * ev
    err = abs(a_coef) * ke + abs(b_coef) * ee
    return val, err


def whittaker_i_ext(p: WhittakerParams, z) -> Evaluation:
    """I_{beta,m} for any |z|: series below the cap, connected asymptotics above."""
    zv = as_cvalue(z)
    if abs(complex(zv)) <= SERIES_CAP:
        return whittaker_i(p, zv)
    val, err = _i_large(p.beta, p.m, zv)
    return Evaluation(val, err, Method.ASYMPTOTIC_SERIES)


# ---------------------------------------------------------------------------
# trigonometric rotations

def whittaker_h(p: WhittakerParams, sign: int, z) -> Evaluation:
    """H^+ or H^- (sign = +1 / -1), the rotated decaying solutions."""
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    zv = as_cvalue(z)
    w = rotate_half_pi(zv, -sign)
    factor = cmath.exp(-sign * 1j * cmath.pi / 2 * (0.5 + complex(p.m)))
    kv = whittaker_k(WhittakerParams(sign * 1j * complex(p.beta), p.m), w)
    return Evaluation(factor * kv.value, abs(factor) * kv.err_est, kv.method, kv.accuracy_loss)


def whittaker_j(p: WhittakerParams, z) -> Evaluation:
    """Rotated regular solution; both admissible rotations must agree."""
    zv = as_cvalue(z)
    results = []
    for s in (+1, -1):
        try:
            w = rotate_half_pi(zv, s)
        except Exception:
            continue
        factor = cmath.exp(-s * 1j * cmath.pi / 2 * (0.5 + complex(p.m)))
        iv = whittaker_i(WhittakerParams(-s * 1j * complex(p.beta), p.m), w)
        results.append(Evaluation(factor * iv.value, abs(factor) * iv.err_est, iv.method))
    if not results:
        raise DomainError("argument leaves the principal sheet under both rotations")
    if len(results) == 2:
        diff = abs(results[0].value - results[1].value)
        return Evaluation(results[0].value, max(results[0].err_est, diff), results[0].method)
    return results[0]


def whittaker_j_ext(p: WhittakerParams, z) -> Evaluation:
    """J for any |z| via the extended regular solution."""
    zv = as_cvalue(z)
    if abs(complex(zv)) <= SERIES_CAP:
        return whittaker_j(p, zv)
    s = +1 if zv.arg() <= 0 else -1
    w = rotate_half_pi(zv, s)
    factor = cmath.exp(-s * 1j * cmath.pi / 2 * (0.5 + complex(p.m)))
    iv = whittaker_i_ext(WhittakerParams(-s * 1j * complex(p.beta), p.m), w)
    return Evaluation(factor * iv.value, abs(factor) * iv.err_est, iv.method)


# ---------------------------------------------------------------------------
# derivatives via the ladder recurrences (never finite differences)

_I_LIKE = {"I"}
_K_LIKE = {"K"}
_X_LIKE = {"X"}


def _deriv_i(beta, m, zv: ComplexValue, ext: bool = False):
    zc = complex(zv)
    f = (whittaker_i_ext if ext else whittaker_i)
    p0 = WhittakerParams(beta, m)
    p1 = WhittakerParams(complex(beta) + 1, m)
    f0 = f(p0, zv)
    f1 = f(p1, zv)
    c = 0.5 + complex(m) + complex(beta)
    val = (c * f1.value - (complex(beta) - zc / 2) * f0.value) / zc
    err = (abs(c) * f1.err_est + abs(complex(beta) - zc / 2) * f0.err_est) / abs(zc)
    return val, err, f0


def _deriv_k(beta, m, zv: ComplexValue):
    zc = complex(zv)
    p0 = WhittakerParams(beta, m)
    p1 = WhittakerParams(complex(beta) + 1, m)
    f0 = whittaker_k(p0, zv)
    f1 = whittaker_k(p1, zv)
    val = (-f1.value - (complex(beta) - zc / 2) * f0.value) / zc
    err = (f1.err_est + abs(complex(beta) - zc / 2) * f0.err_est) / abs(zc)
    return val, err, f0


def _deriv_x(beta, m, zv: ComplexValue):
    zc = complex(zv)
    p0 = WhittakerParams(beta, m)
    p1 = WhittakerParams(complex(beta) + 1, m)
    f0 = whittaker_x(p0, zv)
    f1 = whittaker_x(p1, zv)
    c = (0.5 + complex(m) + complex(beta)) * (0.5 - complex(m) + complex(beta))
    val = (c * f1.value - (complex(beta) - zc / 2) * f0.value) / zc
    err = (abs(c) * f1.err_est + abs(complex(beta) - zc / 2) * f0.err_est) / abs(zc)
    return val, err, f0


def whittaker_deriv(which: str, p: WhittakerParams, z) -> Evaluation:
    """d/dz of I, K, X, J, H+ or H- from the parameter-ladder identities."""
    zv = as_cvalue(z)
    beta, m = complex(p.beta), complex(p.m)
    if which == "I":
        val, err, _ = _deriv_i(beta, m, zv)
    elif which == "K":
        val, err, _ = _deriv_k(beta, m, zv)
    elif which == "X":
        val, err, _ = _deriv_x(beta, m, zv)
    elif which == "J":
        s = +1 if zv.arg() <= 0 else -1
        w = rotate_half_pi(zv, s)
        factor = cmath.exp(-s * 1j * cmath.pi / 2 * (0.5 + m)) * cmath.exp(s * 1j * cmath.pi / 2)
        dv, de, _ = _deriv_i(-s * 1j * beta, m, w)
        val, err = factor * dv, abs(factor) * de
    elif which in ("H+", "H-"):
        s = +1 if which == "H+" else -1
        w = rotate_half_pi(zv, -s)
        factor = cmath.exp(-s * 1j * cmath.pi / 2 * (0.5 + m)) * cmath.exp(-s * 1j * cmath.pi / 2)
        dv, de, _ = _deriv_k(s * 1j * beta, m, w)
        val, err = factor * dv, abs(factor) * de
    else:
        raise DomainError("unknown function tag %r" % (which,))
    return Evaluation(val, err, Method.DIRECT_SERIES)


class WhittakerSolution:
    """Callable handle bundling value/derivative/second derivative.

    Derivatives come from the beta-ladder, the second derivative from
    applying the ladder twice (three evaluations at beta, beta+1, beta+2).
    """

    def __init__(self, which: str, params: WhittakerParams, ext: bool = False):
        if which not in ("I", "K", "X", "J", "H+", "H-"):
            raise DomainError("unknown function tag %r" % (which,))
        self.which = which
        self.params = params
        self.ext = ext

    def _base(self, which, params, zv):
        if which == "I":
            return (whittaker_i_ext if self.ext else whittaker_i)(params, zv).value
        if which == "K":
            return whittaker_k(params, zv).value
        if which == "X":
            return whittaker_x(params, zv).value
        raise DomainError(which)

    def _rotation(self):
        # J and H are rotated I / K; returns (inner_kind, beta', rot_sign, prefactor)
        m = complex(self.params.m)
        beta = complex(self.params.beta)
        if self.which == "J":
            s = -1
            return "I", -s * 1j * beta, s, cmath.exp(-s * 1j * cmath.pi / 2 * (0.5 + m))
        s = +1 if self.which == "H+" else -1
        return "K", s * 1j * beta, -s, cmath.exp(-s * 1j * cmath.pi / 2 * (0.5 + m))

    def value(self, x) -> complex:
        zv = as_cvalue(x)
        if self.which in ("I", "K", "X"):
            return self._base(self.which, self.params, zv)
        kind, b2, rs, pref = self._rotation()
        w = rotate_half_pi(zv, rs)
        return pref * self._base(kind, WhittakerParams(b2, self.params.m), w)

    def _ladder(self, kind, beta, m, zv):
        zc = complex(zv)
        pz = WhittakerParams(beta, m)
        p1 = WhittakerParams(beta + 1, m)
        f0 = self._base(kind, pz, zv)
        f1 = self._base(kind, p1, zv)
        if kind == "I":
            c = 0.5 + m + beta
        elif kind == "K":
            c = -1.0
        else:
            c = (0.5 + m + beta) * (0.5 - m + beta)
        return (c * f1 - (beta - zc / 2) * f0) / zc, f0, f1, c

    def deriv(self, x) -> complex:
        zv = as_cvalue(x)
        m = complex(self.params.m)
        if self.which in ("I", "K", "X"):
            d, _, _, _ = self._ladder(self.which, complex(self.params.beta), m, zv)
            return d
        kind, b2, rs, pref = self._rotation()
        w = rotate_half_pi(zv, rs)
        d, _, _, _ = self._ladder(kind, b2, m, w)
        return pref * cmath.exp(rs * 1j * cmath.pi / 2) * d

    def deriv2(self, x) -> complex:
        zv = as_cvalue(x)
        m = complex(self.params.m)
        if self.which in ("I", "K", "X"):
            return self._second(self.which, complex(self.params.beta), m, zv)
        kind, b2, rs, pref = self._rotation()
        w = rotate_half_pi(zv, rs)
        rot = cmath.exp(rs * 1j * cmath.pi / 2)
        return pref * rot * rot * self._second(kind, b2, m, w)

    def _second(self, kind, beta, m, zv):
        # f'' = (c f'_{b+1} + f/2 - (b - z/2) f' - f')/z with f' from the ladder
        zc = complex(zv)
        d0, f0, f1, c = self._ladder(kind, beta, m, zv)
        d1, _, _, _ = self._ladder(kind, beta + 1, m, zv)
        return (c * d1 + 0.5 * f0 - (beta - zc / 2) * d0 - d0) / zc
