import pytest

from app.exceptions import AlgebraError, SignatureMismatchError
from app.models.multivector import Multivector, blade_from_indices, blade_indices, blade_product
from app.models.signature import G3, G6, Signature


def test_signature_validation():
    assert Signature(3).dim == 3
    assert Signature(1, 3).square(1) == 1
    assert Signature(1, 3).square(2) == -1
    with pytest.raises(AlgebraError):
        Signature(-1, 2)
    with pytest.raises(AlgebraError):
        Signature(10, 7)
    with pytest.raises(AlgebraError):
        G3.square(4)


def test_blade_from_indices_sorts_with_sign():
    assert blade_from_indices([1, 2]) == (0b11, 1)
    assert blade_from_indices([2, 1]) == (0b11, -1)
    assert blade_from_indices([3, 1]) == (0b101, -1)
    assert blade_from_indices([3, 2, 1]) == (0b111, -1)
    with pytest.raises(AlgebraError):
        blade_from_indices([1, 1])


def test_blade_indices():
    assert blade_indices(0) == []
    assert blade_indices(0b101001) == [1, 4, 6]


def test_blade_product_signs():
    # (e1e2)(e1e2) = -1
    assert blade_product(0b11, 0b11, G3) == (0, -1)
    # (e1e2)(e2e3) = e1e3
    assert blade_product(0b11, 0b110, G3) == (0b101, 1)
    # e2 e1 = -e1e2
    assert blade_product(0b10, 0b1, G3) == (0b11, -1)
    # e2^2 = -1 in G(1,1)
    assert blade_product(0b10, 0b10, Signature(1, 1)) == (0, -1)


def test_blade_product_rejects_masks_beyond_the_dimension():
    with pytest.raises(AlgebraError):
        blade_product(0b1000, 0b1, G3)
    with pytest.raises(AlgebraError):
        blade_product(0b1, 1 << 6, G6)
    assert blade_product(0b100000, 0b100000, G6) == (0, 1)


def test_zero_coefficients_dropped():
    x = Multivector(G3, {0: 0.0, 1: 1.0, 2: -0.0})
    assert dict(x.terms) == {1: 1.0}
    assert not Multivector.zero(G3)


def test_mask_outside_signature_rejected():
    with pytest.raises(AlgebraError):
        Multivector(G3, {0b1000: 1.0})


def test_linear_structure():
    e1 = Multivector.vector(G3, 1)
    e2 = Multivector.vector(G3, 2)
    x = 2.0 + e1 - e2.scale(3)
    assert x[0] == 2.0
    assert x[0b1] == 1.0
    assert x[0b10] == -3.0
    assert (x - x) == Multivector.zero(G3)
    assert (-x)[0] == -2.0
    assert x.grades() == [0, 1]


def test_grade_projection_and_even():
    x = Multivector(G3, {0: 1.0, 1: 2.0, 3: 3.0, 7: 4.0})
    assert dict(x.grade(2).terms) == {3: 3.0}
    assert dict(x.even().terms) == {0: 1.0, 3: 3.0}
    assert not x.is_even
    assert x.even().is_even


def test_signature_mismatch():
    with pytest.raises(SignatureMismatchError):
        Multivector.vector(G3, 1) + Multivector.vector(G6, 1)
    with pytest.raises(SignatureMismatchError):
        Multivector.vector(G3, 1) * Multivector.vector(G6, 1)


def test_dict_round_trip_of_a_reordered_blade():
    data = {"signature": [3, 0], "terms": [{"blade": [3, 1], "coeff": 2.0}, {"blade": [], "coeff": 0.5}]}
    x = Multivector.from_dict(data)
    assert x[0b101] == -2.0
    assert x[0] == 0.5
    assert x.to_dict() == {
        "signature": [3, 0],
        "terms": [{"blade": [], "coeff": 0.5}, {"blade": [1, 3], "coeff": -2.0}],
    }


def test_from_dict_rejects_out_of_range_blade():
    with pytest.raises(AlgebraError):
        Multivector.from_dict({"signature": [3, 0], "terms": [{"blade": [4], "coeff": 1.0}]})


def test_format():
    x = Multivector.blade(G3, [1, 2], 2.0) - 1.0
    assert x.format() == "-1 + 2*e1e2"
