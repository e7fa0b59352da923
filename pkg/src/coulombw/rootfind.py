"""Complex eigenvalue search: grid seeding plus Muller polishing.

The eigenvalue conditions are gamma-ratio-valued with poles interleaving
the roots, so a derivative-free three-point method is used and every
candidate is gated by its residual in the chart of the target value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, List, Sequence, Tuple

import numpy as np

from .errors import PreconditionError, SolverDiverged
from .params import WhittakerParams
from .spectral import BoundaryCondition, Regime, SpectralPoint, condition_for

_DEDUP_DIST = 1e-8


def muller(f: Callable[[complex], complex], x0: complex, x1: complex, x2: complex,
           tol: float = 1e-12, max_iter: int = 60) -> Tuple[complex, complex, int]:
    """Muller's three-point complex root polish.

    Returns (root, f(root), iterations); raises SolverDiverged when the
    iteration leaves the basin or stalls.
    """
    f0, f1, f2 = f(x0), f(x1), f(x2)
    for it in range(max_iter):
        if x2 == x1 or x1 == x0 or x2 == x0:
            raise SolverDiverged("degenerate Muller triple")
        q = (x2 - x1) / (x1 - x0)
        a = q * f2 - q * (1 + q) * f1 + q * q * f0
        b = (2 * q + 1) * f2 - (1 + q) ** 2 * f1 + q * q * f0
        c = (1 + q) * f2
        disc = cmath.sqrt(b * b - 4 * a * c)
        den1, den2 = b + disc, b - disc
        den = den1 if abs(den1) >= abs(den2) else den2
        if den == 0:
            raise SolverDiverged("vanishing Muller denominator")
        step = -(x2 - x1) * 2 * c / den
        x_new = x2 + step
        try:
            f_new = f(x_new)
        except (PreconditionError, ArithmeticError, ValueError):
            raise SolverDiverged("condition undefined at iterate")
        x0, f0 = x1, f1
        x1, f1 = x2, f2
        x2, f2 = x_new, f_new
        if abs(step) <= tol * max(1.0, abs(x2)):
            return x2, f2, it + 1
        if not (abs(x2) < 1e12):
            raise SolverDiverged("iterate escaped")
    raise SolverDiverged("Muller did not converge")


@dataclass
class EigenSearch(Sequence):
    """Sequence of SpectralPoint plus search diagnostics."""

    points: List[SpectralPoint] = field(default_factory=list)
    seeds: int = 0
    converged: int = 0
    rejected: int = 0

    def __getitem__(self, i):
        return self.points[i]

    def __len__(self):
        return len(self.points)


def find_eigenvalues(params: WhittakerParams, bc: BoundaryCondition,
                     box: Tuple[float, float, float, float],
                     tol: float = 1e-10, grid: Tuple[int, int] = (40, 40)) -> EigenSearch:
    """All k in the box (Re k > 0) with condition(k) equal to the bc value.

    box = (re_min, re_max, im_min, im_max).  Seeds are the local minima of
    the chart residual on the grid; each is polished with Muller, gated by
    its residual, deduplicated, and the survivors are sorted by
    (Re lambda, Im lambda) with lambda = -k^2.
    """
    re0, re1, im0, im1 = map(float, box)
    if re0 <= 0 or re1 <= re0 or im1 < im0:
        raise PreconditionError("box must satisfy 0 < re_min < re_max, im_min <= im_max")
    if tol < 1e-13:
        raise PreconditionError("tol is below attainable double precision")
    cond, target = condition_for(bc, params)

    def resid(k: complex) -> complex:
        return cond(k) - target

    nx, ny = grid
    res = np.linspace(re0, re1, nx)
    ims = np.linspace(im0, im1, ny) if ny > 1 else np.array([0.5 * (im0 + im1)])
    vals = np.full((len(ims), len(res)), np.inf)
    for i, b in enumerate(ims):
        for j, a in enumerate(res):
            try:
                vals[i, j] = abs(resid(complex(a, b)))
            except (PreconditionError, ArithmeticError, ValueError, OverflowError):
                vals[i, j] = np.inf
    # local minima (including plateau edges) as seeds
    seeds = []
    for i in range(len(ims)):
        for j in range(len(res)):
            v = vals[i, j]
            if not np.isfinite(v):
                continue
            neigh = []
            for di, dj in ((0, 1), (0, -1), (1, 0), (-1, 0)):
                ii, jj = i + di, j + dj
                if 0 <= ii < len(ims) and 0 <= jj < len(res):
                    neigh.append(vals[ii, jj])
            if neigh and v <= min(neigh):
                seeds.append(complex(res[j], ims[i]))
    hx = (re1 - re0) / max(nx - 1, 1)
    hy = (im1 - im0) / max(ny - 1, 1) if ny > 1 else hx
    h = 0.3 * complex(hx, hy)
    out = EigenSearch(seeds=len(seeds))
    roots: List[complex] = []
    target_scale = 1.0 + abs(target)
    margin_x = 2 * hx
    margin_y = 2 * hy if ny > 1 else 2 * hx
    for s in seeds:
        try:
            root, fval, _ = muller(resid, s - h, s + h * 1j, s, tol=min(tol, 1e-12))
        except SolverDiverged:
            out.rejected += 1
            continue
        out.converged += 1
        if root.real <= 0:
            out.rejected += 1
            continue
        if not (re0 - margin_x <= root.real <= re1 + margin_x
                and im0 - margin_y <= root.imag <= im1 + margin_y):
            out.rejected += 1
            continue
        if abs(fval) > tol * target_scale:
            out.rejected += 1
            continue
        if any(abs(root - r) <= _DEDUP_DIST * max(1.0, abs(root)) for r in roots):
            continue
        roots.append(root)
        out.points.append(SpectralPoint(
            lam=-root * root, k_or_mu=root, regime=Regime.NEGATIVE, residual=abs(fval)))
    out.points.sort(key=lambda pt: (pt.lam.real, pt.lam.imag))
    return out
