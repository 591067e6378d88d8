import numpy as np
import pytest

from app.exceptions import GeneratorIndexError
from app.models.generator import GeneratorConvention, GeneratorIndex, all_generators
from app.models.multivector import Multivector
from app.models.signature import G6
from app.services.algebra.products import geometric_product
from app.services.iso.generators import (
    bivector_from_coefficients,
    e,
    f,
    generator_bivector,
    generator_coefficients,
    generator_matrix,
    local_projector,
    pseudoscalar,
    reference_projector,
)

G = GeneratorIndex
PRINTED = GeneratorConvention(delta_sign=True, mixed_sign=1)


def test_generator_index_validation():
    assert G.parse("G21") == G(2, 1)
    assert G.parse("13") == G(1, 3)
    assert G(3, 0).is_local and G(0, 2).is_local and not G(1, 1).is_local
    with pytest.raises(GeneratorIndexError):
        G(0, 0)
    with pytest.raises(GeneratorIndexError):
        G(4, 1)
    with pytest.raises(GeneratorIndexError):
        G.parse("G1")


def test_all_generators_order():
    labels = [g.label for g in all_generators()]
    assert labels[:6] == ["G10", "G20", "G30", "G01", "G02", "G03"]
    assert labels[6:] == ["G11", "G12", "G13", "G21", "G22", "G23", "G31", "G32", "G33"]


def test_convention_signs():
    assert GeneratorConvention().sign(1, 1) == -1
    assert PRINTED.sign(1, 2) == 1
    assert PRINTED.sign(3, 3) == -1
    with pytest.raises(GeneratorIndexError):
        GeneratorConvention(mixed_sign=2)
    assert len(GeneratorConvention.candidates()) == 4


def test_local_generators_are_cyclic_planes():
    assert dict(generator_bivector(G(1, 0)).terms) == {0b000110: 1.0}
    assert dict(generator_bivector(G(2, 0)).terms) == {0b000101: -1.0}
    assert dict(generator_bivector(G(3, 0)).terms) == {0b000011: 1.0}
    assert dict(generator_bivector(G(0, 3)).terms) == {0b011000: 1.0}
    assert generator_bivector(G(0, 1)) == geometric_product(f(2), f(3))


def test_mixed_generators_follow_the_convention(adopted):
    assert generator_bivector(G(1, 2), adopted) == geometric_product(e(1), f(2)).scale(-1.0)
    assert generator_bivector(G(1, 2), PRINTED) == geometric_product(e(1), f(2))
    assert dict(generator_bivector(G(3, 3), PRINTED).terms) == {0b100100: -1.0}
    assert generator_bivector(G(1, 2)) == generator_bivector(G(1, 2), adopted)


def test_generators_square_to_minus_one():
    for g in all_generators():
        b = generator_bivector(g)
        assert geometric_product(b, b) == Multivector.scalar(G6, -1.0)
        assert np.allclose(generator_matrix(g) @ generator_matrix(g), -np.eye(4))


def test_generator_matrix_is_a_copy():
    m = generator_matrix(G(1, 1))
    m[0, 0] = 99
    assert generator_matrix(G(1, 1))[0, 0] != 99


def test_coefficients_round_trip():
    coefficients = {g: 0.1 * n for n, g in enumerate(all_generators(), start=1)}
    b = bivector_from_coefficients(coefficients)
    back = generator_coefficients(b)
    assert all(abs(back[g] - coefficients[g]) < 1e-15 for g in all_generators())


def test_pseudoscalar_times_g30():
    # I G30 = -e3 f1 f2 f3
    assert dict(geometric_product(pseudoscalar(), generator_bivector(G(3, 0))).terms) == {0b111100: -1.0}


def test_projectors_are_idempotent():
    for p in (local_projector(1), local_projector(2), reference_projector()):
        assert geometric_product(p, p).max_abs_diff(p) < 1e-15
    assert geometric_product(local_projector(1), local_projector(2)) == \
        geometric_product(local_projector(2), local_projector(1))
