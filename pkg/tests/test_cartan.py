import pytest

from app.exceptions import BipartitionError
from app.models.cartan import Bipartition
from app.models.generator import GeneratorIndex
from app.services.cartan.graph import (
    all_bipartitions,
    cartan_subalgebras,
    edge,
    edge_rule_check,
    generator_of_edge,
    split_from_bipartition,
    subalgebra_check,
)

G = GeneratorIndex


def test_bipartition_normalizes_to_the_side_holding_e1():
    b = Bipartition(frozenset({4, 5, 6}))
    assert b.side == frozenset({1, 2, 3})
    assert b == Bipartition.from_names(["e1", "e2", "e3"])
    assert b.label() == "{e1,e2,e3}|{f1,f2,f3}"
    assert b.to_dict() == {"side": ["e1", "e2", "e3"], "other": ["f1", "f2", "f3"]}


def test_bipartition_validation():
    with pytest.raises(BipartitionError):
        Bipartition(frozenset())
    with pytest.raises(BipartitionError):
        Bipartition(frozenset(range(1, 7)))
    with pytest.raises(BipartitionError):
        Bipartition(frozenset({7}))
    with pytest.raises(BipartitionError):
        Bipartition.from_names(["g1"])


def test_thirty_one_bipartitions():
    bipartitions = all_bipartitions()
    assert len(bipartitions) == 31
    assert len(set(bipartitions)) == 31


def test_edges():
    assert edge(G(1, 0)) == frozenset({2, 3})
    assert edge(G(0, 3)) == frozenset({4, 5})
    assert edge(G(2, 1)) == frozenset({2, 4})
    assert generator_of_edge(3, 6) == G(3, 3)
    with pytest.raises(KeyError):
        generator_of_edge(1, 1)


def test_every_split_is_a_cartan_split():
    for b in all_bipartitions():
        split = split_from_bipartition(b)
        assert split.deviation == 0.0
        assert len(split.g) + len(split.m) == 15
        k = len(b.side)
        assert len(split.m) == k * (6 - k)


def test_local_split():
    split = split_from_bipartition(Bipartition(frozenset({1, 2, 3})))
    assert {g.label for g in split.g} == {"G10", "G20", "G30", "G01", "G02", "G03"}
    assert len(split.m) == 9
    subalgebras = cartan_subalgebras(split)
    assert len(subalgebras) == 6
    assert (G(1, 1), G(2, 2), G(3, 3)) in [h.generators for h in subalgebras]
    for h in subalgebras:
        assert subalgebra_check(h).passed


def test_e1_f1_split():
    split = split_from_bipartition(Bipartition.from_names(["e1", "f1"]))
    assert len(split.g) == 7
    assert G(1, 1) in split.g
    subalgebras = cartan_subalgebras(split)
    assert len(subalgebras) == 12
    assert all(len(h.generators) == 2 for h in subalgebras)
    assert all(subalgebra_check(h).passed for h in subalgebras)


def test_single_vertex_split():
    split = split_from_bipartition(Bipartition(frozenset({1})))
    assert len(split.g) == 10
    subalgebras = cartan_subalgebras(split)
    assert len(subalgebras) == 5
    assert all(subalgebra_check(h).passed for h in subalgebras)


def test_edge_rule():
    report = edge_rule_check()
    assert report.passed, [c.to_dict() for c in report.failures()]
