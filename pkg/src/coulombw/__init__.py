"""coulombw: Whittaker-type special functions and spectral data of the
half-line Coulomb Schrodinger operators with general boundary conditions.
"""

from .branching import Branch, ComplexValue, as_cvalue, lower_edge, principal_ln, principal_pow, upper_edge
from .core import Evaluation, Method, digamma, gamma, hyp1f1, log_gamma, pochhammer, rgamma, trigamma
from .errors import (BranchError, CoulombwError, DomainError, GridTooCoarse,
                     NonConvergenceError, PoleError, PreconditionError,
                     SolverDiverged, SpectrumHit, StepperFailure)
from .params import DoubleRegion, ParamRegion, RegionTag, WhittakerParams, classify_region
from .whittaker import (WhittakerSolution, laguerre, whittaker_deriv, whittaker_h,
                        whittaker_i, whittaker_i_ext, whittaker_j, whittaker_k,
                        whittaker_x)
from .bessel1 import (BesselSolution, ZeroEnergySolution, bessel1_h, bessel1_i,
                      bessel1_j, bessel1_k, bessel1_x, bessel1_y, zero_energy_j,
                      zero_energy_y)
from .spectral import (BoundaryCondition, Family, INFINITY, KernelQuery, Regime,
                       SpectralPoint, blowup_kappa0, blowup_kappa_half, eta,
                       is_self_adjoint, kappa_of_k, nu_half_of_k, nu_zero_of_k,
                       omega_generic, omega_half, omega_zero, positive_energy_condition,
                       projection_kernel, resolvent_kernel, xi_half, xi_zero,
                       zero_energy_condition, zeta)
from .integrals import (bessel_kk, bessel_x2kk, h_cross, h_norm_sq, hankel_k_cross,
                        hankel_norm_sq, k_cross, k_norm_sq)
from .rootfind import EigenSearch, find_eigenvalues, muller
from .quadrature import QuadratureResult, quad_halfline, quad_ray
from .oracle import Grid, fd_spectrum, ode_residual, shooting_eigencheck, solution_handle, wronskian_numeric

__version__ = "0.1.0"
