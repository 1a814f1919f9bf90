"""Tests for the real Lie-algebra span and closure machinery.

Dimension facts used as oracles are classical: su(2) acting on one factor
closes at 3, the standard coupled generator set closes at 15 = dim su(4),
and closure dimensions are invariant under a unitary change of frame.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qindirect.lieclosure import (LieBasis, closure, contains,
                                  invariant_space, orthonormalize,
                                  span_equals, trace_A_image)
from qindirect.qalg import (ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, bloch_inverse,
                            dagger, frob, mat_exp, tensor)

SX1 = tensor(SIGMA_X, ID2)
SY1 = tensor(SIGMA_Y, ID2)
SZ1 = tensor(SIGMA_Z, ID2)
ONE_A = [tensor(ID2, s) for s in (SIGMA_X, SIGMA_Y, SIGMA_Z)]

st_angles = st.tuples(*[st.floats(-3.0, 3.0)] * 6)


def _random_su4(angles):
    gens = [SX1, SZ1, ONE_A[0], ONE_A[2],
            1j * tensor(SIGMA_Y, SIGMA_Y), 1j * tensor(SIGMA_X, SIGMA_Z)]
    u = np.eye(4, dtype=complex)
    for t, g in zip(angles, gens):
        u = u @ mat_exp(t * g, skew_hermitian=True)
    return u


def test_orthonormalize_collapses_dependent_elements():
    basis = orthonormalize([SX1, 2.0 * SX1, SY1])
    assert len(basis) == 2
    assert contains(basis, SX1 - 3.0 * SY1)
    assert not contains(basis, SZ1)


def test_orthonormalize_requires_traceless():
    with pytest.raises(ValueError):
        orthonormalize([1j * np.eye(4)])  # skew-Hermitian but traceful
    basis = orthonormalize([1j * np.eye(4)], require_traceless=False)
    assert len(basis) == 1


def test_orthonormalize_requires_skew():
    with pytest.raises(ValueError):
        orthonormalize([tensor(np.diag([1.0, -1.0]), ID2)])  # Hermitian


def test_contains_respects_tolerance():
    basis = orthonormalize([SX1, SY1])
    assert contains(basis, 0.25 * SX1 + 1e-13 * SZ1)
    assert not contains(basis, SX1 + 1e-6 * SZ1)


def test_lie_basis_iteration():
    basis = orthonormalize([SX1, SY1])
    mats = list(basis)
    assert len(mats) == len(basis) == 2
    assert mats[0].shape == (4, 4)


def test_closure_one_sided_su2():
    basis = closure([SX1, SY1])
    assert len(basis) == 3
    assert contains(basis, SZ1)  # generated by the bracket
    assert not contains(basis, ONE_A[0])


def test_closure_single_generator():
    assert len(closure([SX1])) == 1  # [X, X] = 0


def test_closure_full_su4():
    gens = [SX1, SY1, ONE_A[0], ONE_A[1], 1j * tensor(SIGMA_Z, SIGMA_Z)]
    assert len(closure(gens)) == 15


def test_closure_scale_invariant():
    gens = [SX1, SY1, 1j * tensor(SIGMA_Z, SIGMA_Z)]
    d1 = len(closure(gens))
    d2 = len(closure([7.0 * g for g in gens[::-1]]))
    assert d1 == d2


@settings(max_examples=20)
@given(st_angles)
def test_closure_dim_frame_invariant(angles):
    u = _random_su4(angles)
    gens = [SX1, SY1, 1j * tensor(SIGMA_Z, SIGMA_Z)]
    rotated = [u @ g @ dagger(u) for g in gens]
    assert len(closure(rotated)) == len(closure(gens))


def test_invariant_space_one_sided_rotation():
    # su(2) on the S side rotates the S Bloch vector of the seed; the
    # identity components ride along untouched, so V is 4-dimensional and
    # its trace image is all of u(2).
    basis = closure([SX1, SY1])
    rho_s = bloch_inverse([0.0, 0.0, 0.8])
    rho_a = bloch_inverse([0.3, 0.0, 0.1])
    v = invariant_space(basis, 1j * tensor(rho_s, rho_a))
    assert len(v) == 4
    img = trace_A_image(v)
    assert len(img) == 4


def test_invariant_space_full_algebra():
    gens = [SX1, SY1, ONE_A[0], ONE_A[1], 1j * tensor(SIGMA_Z, SIGMA_Z)]
    basis = closure(gens)
    rho_s = bloch_inverse([0.0, 0.0, 0.5])
    rho_a = bloch_inverse([0.0, 0.0, 0.2])
    v = invariant_space(basis, 1j * tensor(rho_s, rho_a))
    # the traceless part sweeps out all of su(4), plus the fixed i*1 line
    assert len(v) == 16
    assert len(trace_A_image(v)) == 4


def test_trace_image_can_vanish():
    v = orthonormalize([1j * tensor(SIGMA_Z, SIGMA_Z)])
    assert len(trace_A_image(v)) == 0
    assert isinstance(v, LieBasis)


def test_span_equals():
    a = orthonormalize([SX1, SY1])
    b = orthonormalize([SX1 + SY1, SX1 - SY1])
    c = orthonormalize([SX1, SZ1])
    assert span_equals(a, b)
    assert span_equals(b, a)
    assert not span_equals(a, c)
    assert not span_equals(a, orthonormalize([SX1]))


def test_closure_generators_must_share_dim():
    with pytest.raises(ValueError):
        closure([SX1, SIGMA_X])
