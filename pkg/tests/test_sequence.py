import numpy as np

from app.services.cartan.sequence import (
    SEQUENCE_15,
    SEQUENCE_16,
    ineffective_direction,
    sequence_fill_check,
    sequence_jacobian,
)


def test_parameter_counts():
    assert sum(len(s) for s in SEQUENCE_16) == 16
    assert sum(len(s) for s in SEQUENCE_15) == 15


def test_sixteen_parameter_sequence_fills_the_group():
    report = sequence_fill_check(SEQUENCE_16, seed=11)
    assert report.passed, [c.to_dict() for c in report.failures()]
    assert report.data["ranks"] == [15] * 10
    assert len(report.data["null_vectors"]) == 10
    assert any(c.name.startswith("sigma16 / sigma15") for c in report.checks)


def test_fifteen_parameter_sequence_fills_the_group():
    report = sequence_fill_check(SEQUENCE_15, seed=11)
    assert report.passed, [c.to_dict() for c in report.failures()]
    assert "null_vectors" not in report.data
    assert not any(c.name.startswith("sigma16") for c in report.checks)


def test_ineffective_direction_is_the_null_space(rng):
    direction = ineffective_direction()
    assert np.flatnonzero(direction).tolist() == [6, 11]
    params = rng.uniform(-np.pi, np.pi, size=16)
    jac = sequence_jacobian(SEQUENCE_16, params)
    assert jac.shape == (15, 16)
    assert np.max(np.abs(jac @ direction)) < 1e-10
    _, _, vh = np.linalg.svd(jac)
    assert abs(vh[-1] @ direction) > 1 - 1e-8


def test_jacobian_at_the_identity():
    jac = sequence_jacobian(SEQUENCE_15, np.zeros(15))
    # column k is the generator of parameter k
    flat = [g for gens in SEQUENCE_15 for g in gens]
    assert jac.shape == (15, 15)
    for k, g in enumerate(flat):
        assert np.isclose(np.linalg.norm(jac[:, k]), 1.0)


def test_phase_row_vanishes_and_leaves_a_gap(rng):
    params = rng.uniform(-np.pi, np.pi, size=16)
    full = sequence_jacobian(SEQUENCE_16, params, with_phase=True)
    assert full.shape == (16, 16)
    assert np.max(np.abs(full[15])) < 1e-12
    assert np.array_equal(full[:15], sequence_jacobian(SEQUENCE_16, params))
    values = np.linalg.svd(full, compute_uv=False)
    assert values[15] / values[14] < 1e-3
