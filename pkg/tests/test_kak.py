import math

import numpy as np
import pytest

from app.exceptions import OracleError
from app.services.cartan.factorization import SWAP
from app.services.cartan.kak import canonical_coefficients, kak_decompose, kron_factor, su2_log
from app.services.helper.sampling import random_su4, random_unitary
from app.services.oracle.linalg import expm
from app.services.oracle.pauli import pauli
from app.services.selftest.acceptance import CNOT

QUARTER = math.pi / 4


def test_random_unitaries_reconstruct(rng):
    for _ in range(20):
        result = kak_decompose(random_su4(rng))
        assert result.residual < 1e-9


def test_non_special_unitary_reconstructs(rng):
    u = random_unitary(4, rng)
    assert kak_decompose(u).residual < 1e-9


@pytest.mark.parametrize("u, expected", [
    (np.eye(4), (0.0, 0.0, 0.0)),
    (CNOT, (QUARTER, 0.0, 0.0)),
    (SWAP, (QUARTER, QUARTER, QUARTER)),
])
def test_canonical_classes(u, expected):
    result = kak_decompose(u)
    assert result.residual < 1e-9
    assert result.canonical == pytest.approx(expected, abs=1e-8)


def test_local_unitary_has_no_interaction(rng):
    u = np.kron(random_unitary(2, rng), random_unitary(2, rng))
    result = kak_decompose(u)
    assert result.canonical == pytest.approx((0.0, 0.0, 0.0), abs=1e-8)


def test_rejects_non_unitary():
    with pytest.raises(OracleError):
        kak_decompose(np.ones((4, 4)))


def test_kron_factor(rng):
    a, b = random_unitary(2, rng), random_unitary(2, rng)
    g, f1, f2 = kron_factor(np.kron(a, b))
    assert np.allclose(g * np.kron(f1, f2), np.kron(a, b))
    assert np.linalg.det(f1) == pytest.approx(1.0)
    assert np.linalg.det(f2) == pytest.approx(1.0)


def test_su2_log(rng):
    u = random_unitary(2, rng)
    f = u / np.sqrt(np.linalg.det(u))
    a = su2_log(f)
    rebuilt = expm(1j * sum(a[k] * pauli(k + 1) for k in range(3)))
    assert np.allclose(rebuilt, f)
    assert su2_log(np.eye(2)) == (0.0, 0.0, 0.0)
    assert su2_log(-np.eye(2)) == (0.0, 0.0, math.pi)


def test_canonical_coefficients():
    assert canonical_coefficients((0.1, -0.3, 0.2)) == pytest.approx((0.3, 0.2, -0.1))
    assert canonical_coefficients((-QUARTER, 0.0, 0.0)) == pytest.approx((QUARTER, 0.0, 0.0))
    assert canonical_coefficients((QUARTER + math.pi / 2, 0.0, 0.0)) == pytest.approx((QUARTER, 0.0, 0.0))
    assert canonical_coefficients((QUARTER, QUARTER, -QUARTER)) == pytest.approx((QUARTER, QUARTER, QUARTER))
