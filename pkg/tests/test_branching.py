import cmath
import math

import pytest

from coulombw.branching import (Branch, ComplexValue, as_cvalue, lower_edge,
                                principal_ln, principal_pow, rotate_half_pi,
                                rotate_pi, upper_edge)
from coulombw.errors import BranchError, DomainError


def test_edge_tags_only_on_cut():
    upper_edge(-2.0)
    with pytest.raises(BranchError):
        ComplexValue(1.0, 0.0, Branch.UPPER_EDGE)
    with pytest.raises(BranchError):
        ComplexValue(-1.0, 0.5, Branch.LOWER_EDGE)


def test_principal_ln():
    assert abs(principal_ln(upper_edge(-1.0)) - 1j * math.pi) < 1e-15
    assert abs(principal_ln(lower_edge(-1.0)) + 1j * math.pi) < 1e-15
    assert abs(principal_ln(math.e) - 1.0) < 1e-15
    with pytest.raises(BranchError):
        principal_ln(-2.0)  # untagged point on the cut
    with pytest.raises(DomainError):
        principal_ln(0.0)


def test_principal_pow():
    assert abs(principal_pow(4.0, 0.5) - 2.0) < 1e-15
    m = 3
    val = principal_pow(upper_edge(-1.0), 2 * m)
    assert abs(val - cmath.exp(1j * 2 * math.pi * m)) < 1e-14
    assert principal_pow(2.0, 0) == 1.0


def test_rotations():
    w = rotate_half_pi(as_cvalue(2.0), +1)
    assert abs(complex(w) - 2j) < 1e-15
    w = rotate_pi(as_cvalue(2.0), +1)
    assert w.branch is Branch.UPPER_EDGE and w.re == -2.0
    w = rotate_pi(as_cvalue(2.0), -1)
    assert w.branch is Branch.LOWER_EDGE
    # rotating an upper-edge point back down lands on the positive axis
    w = rotate_pi(upper_edge(-3.0), -1)
    assert abs(complex(w) - 3.0) < 1e-14
    with pytest.raises(BranchError):
        rotate_pi(as_cvalue(1j), +1)
