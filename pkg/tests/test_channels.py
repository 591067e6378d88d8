import numpy as np
import pytest

from app.exceptions import KrausIndexError, NormalizationError
from app.models.multivector import Multivector
from app.models.signature import G6
from app.models.state import SchmidtParams
from app.services.channels.choi import choi_check, choi_matrix, kraus_reports, midpoint_report, pair_reports
from app.services.channels.kraus import (
    apply_superoperator,
    compose,
    identity_superoperator,
    kraus_apply,
    superoperator_of,
    unitary_superoperator,
    unvec,
    vec,
)
from app.services.helper.sampling import random_unitary
from app.services.iso.generators import reference_projector
from app.services.iso.states import density_from_state, state_from_schmidt
from app.services.iso.translation import even_to_matrix


@pytest.fixture
def rho():
    p = SchmidtParams(phi1=0.3, theta1=1.1, theta2=-0.4, tau=0.8, sigma=0.6)
    return density_from_state(state_from_schmidt(p))


def test_vec_stacks_columns():
    m = np.array([[1, 2], [3, 4]])
    assert vec(m).tolist() == [1, 3, 2, 4]
    assert np.array_equal(unvec(vec(np.arange(16).reshape(4, 4))), np.arange(16).reshape(4, 4))


def test_kraus_map_on_the_reference_state():
    out = kraus_apply(3, reference_projector())
    assert np.allclose(even_to_matrix(out.value), np.diag([15, -1, -1, 3]) / 16, atol=1e-14)


def test_kraus_map_keeps_the_trace(rho):
    for k in range(1, 7):
        assert kraus_apply(k, rho).value.scalar_part == pytest.approx(0.25, abs=1e-14)


@pytest.mark.parametrize("k", [0, 7, "3", 2.0])
def test_kraus_index_validation(k, rho):
    with pytest.raises(KrausIndexError):
        kraus_apply(k, rho)


def test_kraus_apply_rejects_unnormalized_input():
    with pytest.raises(NormalizationError):
        kraus_apply(1, Multivector.scalar(G6, 1.0))
    with pytest.raises(NormalizationError):
        kraus_apply(1, Multivector.vector(G6, 1))


def test_superoperator_agrees_with_the_multivector_map(rho):
    m = even_to_matrix(rho.value)
    for k in range(1, 7):
        direct = even_to_matrix(kraus_apply(k, rho).value)
        assert np.allclose(apply_superoperator(superoperator_of(k), m), direct, atol=1e-13)


def test_composition_applies_the_right_factor_first(rho):
    m = even_to_matrix(rho.value)
    first = kraus_apply(2, rho)
    second = even_to_matrix(kraus_apply(5, first).value)
    assert np.allclose(apply_superoperator(compose(superoperator_of(5), superoperator_of(2)), m), second, atol=1e-13)


def test_kraus_sums_are_trace_and_hermiticity_preserving():
    for report in kraus_reports() + pair_reports() + [midpoint_report(1, 2)]:
        assert report.trace_preserving, report.label
        assert report.hermiticity_preserving, report.label


def test_kraus_sums_are_not_completely_positive():
    for report in kraus_reports():
        assert report.min_choi_eig < -1e-3
        assert not report.completely_positive
        assert not report.boundary


def test_identity_channel_is_a_boundary_point():
    report = choi_check(identity_superoperator(), "identity")
    assert report.trace_preserving and report.completely_positive and report.boundary
    assert np.allclose(np.linalg.eigvalsh(choi_matrix(identity_superoperator())), [0] * 15 + [4])


def test_unitary_channel(rng):
    u = random_unitary(4, rng)
    s = unitary_superoperator(u)
    x = rng.standard_normal((4, 4))
    assert np.allclose(apply_superoperator(s, x), u @ x @ u.conj().T)
    report = choi_check(s, "u")
    assert report.completely_positive and report.trace_preserving and report.boundary


def test_report_serialization():
    report = kraus_reports()[0]
    data = report.to_dict()
    assert data["k"] == "1"
    assert set(data) == {"k", "trace_preserving", "hermiticity_preserving", "min_choi_eig",
                         "completely_positive", "boundary"}
