import pytest

from coulombw.core import gamma, rgamma
from coulombw.errors import PreconditionError
from coulombw.params import WhittakerParams as P
from coulombw.rootfind import EigenSearch, find_eigenvalues, muller
from coulombw.spectral import BoundaryCondition, Family, INFINITY, kappa_of_k


def test_muller_polynomial():
    root, fval, its = muller(lambda x: x ** 3 - x ** 2 - x - 1, 1.0, 2.0, 1.5)
    assert abs(root - 1.8392867552141612) <= 1e-10
    assert abs(fval) <= 1e-9


def test_hydrogen_family():
    bc = BoundaryCondition(Family.NU_HALF, INFINITY)
    res = find_eigenvalues(P(1.0, 0.5), bc, (0.07, 0.6, -0.05, 0.05), grid=(40, 5))
    ks = sorted(pt.k_or_mu.real for pt in res.points)
    for expect in (1 / 8, 1 / 6, 1 / 4, 1 / 2):
        assert min(abs(k - expect) for k in ks) <= 1e-9
    lams = [pt.lam for pt in res.points]
    assert lams == sorted(lams, key=lambda l: (l.real, l.imag))
    assert all(pt.residual <= 1e-10 for pt in res.points)
    assert res.seeds >= res.converged >= len(res.points)


def test_roundtrip_generic():
    b, m, k0 = 0.9, 0.3, 0.8 + 0.1j
    kap = kappa_of_k(b, m, k0)
    bc = BoundaryCondition(Family.GENERIC, kap)
    res = find_eigenvalues(P(b, m), bc, (0.4, 1.2, -0.3, 0.4), grid=(24, 18))
    assert any(abs(pt.k_or_mu - k0) <= 1e-9 for pt in res.points)


def test_found_roots_kill_resolvent_denominator():
    # eta vanishes (relative to its piece scale) at every reported root,
    # and the resolvent refuses the query there
    from coulombw.spectral import gamma_factor, resolvent_kernel, KernelQuery
    from coulombw.errors import SpectrumHit
    b, m = 0.9, 0.3
    kap = kappa_of_k(b, m, 0.8 + 0.1j)
    bc = BoundaryCondition(Family.GENERIC, kap)
    res = find_eigenvalues(P(b, m), bc, (0.4, 1.2, -0.3, 0.4), grid=(24, 18))
    assert len(res) >= 1
    for pt in res.points:
        k = pt.k_or_mu
        den = gamma_factor(b, m, k) + kap * gamma_factor(b, -m, k)
        scale = abs(gamma_factor(b, m, k)) + abs(kap) * abs(gamma_factor(b, -m, k))
        assert abs(den) <= 1e-8 * scale
        with pytest.raises(SpectrumHit):
            resolvent_kernel(KernelQuery(P(b, m), bc, k, 1.0, 2.0))


def test_beta_zero_reduction_recovers_k():
    kap = (1 / 2.0) ** (-0.5) * gamma(0.25) * rgamma(-0.25)
    bc = BoundaryCondition(Family.GENERIC, kap)
    res = find_eigenvalues(P(0.0, 0.25), bc, (0.3, 2.0, -0.4, 0.4), grid=(24, 14))
    assert any(abs(pt.k_or_mu - 1.0) <= 1e-9 for pt in res.points)


def test_empty_box_is_valid():
    bc = BoundaryCondition(Family.NU_HALF, INFINITY)
    res = find_eigenvalues(P(1.0, 0.5), bc, (0.6, 0.9, -0.02, 0.02), grid=(16, 3))
    assert len(res) == 0
    assert isinstance(res, EigenSearch)


def test_box_validation():
    bc = BoundaryCondition(Family.NU_HALF, INFINITY)
    with pytest.raises(PreconditionError):
        find_eigenvalues(P(1.0, 0.5), bc, (-0.1, 0.6, 0, 0))
    with pytest.raises(PreconditionError):
        find_eigenvalues(P(1.0, 0.5), bc, (0.1, 0.6, 0, 0), tol=1e-15)


def test_determinism():
    bc = BoundaryCondition(Family.NU_HALF, INFINITY)
    a = find_eigenvalues(P(1.0, 0.5), bc, (0.07, 0.6, -0.05, 0.05), grid=(30, 5))
    b = find_eigenvalues(P(1.0, 0.5), bc, (0.07, 0.6, -0.05, 0.05), grid=(30, 5))
    assert [pt.k_or_mu for pt in a.points] == [pt.k_or_mu for pt in b.points]
