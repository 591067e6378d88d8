import itertools
import logging

from app.models.cartan import ALL_VERTICES, Bipartition, CartanSplit, CartanSubalgebra
from app.models.generator import all_generators
from app.models.report import VerificationReport
from app.services.algebra.products import commutator_half
from app.services.iso.generators import generator_bivector, generator_coefficients, vertices

logger = logging.getLogger(__name__)


def edge(g):
    return frozenset(vertices(g))


def generator_of_edge(a, b):
    target = frozenset((a, b))
    for g in all_generators():
        if edge(g) == target:
            return g
    raise KeyError(f"No generator joins vertices {a} and {b}")


def all_bipartitions():
    """The 31 nontrivial bipartitions of the six vertices."""
    out = []
    rest = sorted(ALL_VERTICES - {1})
    for r in range(0, len(rest) + 1):
        for chosen in itertools.combinations(rest, r):
            side = frozenset({1, *chosen})
            if side != ALL_VERTICES:
                out.append(Bipartition(side))
    return out


def _bracket_support(a, b, conv):
    """Generators with a non-negligible coefficient in a x b."""
    coefficients = generator_coefficients(commutator_half(generator_bivector(a, conv), generator_bivector(b, conv)), conv)
    return {g: c for g, c in coefficients.items() if abs(c) > 1e-12}


def split_from_bipartition(bipartition, conv=None):
    """
    g = edges inside either side, m = crossing edges; the bracket inclusions are
    checked numerically and the worst leak is kept as the split's deviation.
    """
    gens = all_generators()
    g_part = tuple(x for x in gens if not bipartition.crosses(tuple(edge(x))))
    m_part = tuple(x for x in gens if bipartition.crosses(tuple(edge(x))))
    g_set, m_set = set(g_part), set(m_part)

    leak = 0.0
    for a, b in itertools.combinations_with_replacement(gens, 2):
        target = g_set if (a in g_set) == (b in g_set) else m_set
        coefficients = _bracket_support(a, b, conv)
        for x, c in coefficients.items():
            if x not in target:
                leak = max(leak, abs(c))
    if leak > 0.0:
        logger.warning("Bipartition %s leaks %.3g outside its Cartan split", bipartition.label(), leak)
    return CartanSplit(bipartition, g_part, m_part, leak)


def cartan_subalgebras(split):
    """
    All maximum matchings of the crossing edges. The crossing edges form a complete
    bipartite graph, so each matching pairs every vertex of the smaller side with a
    distinct vertex of the larger one.
    """
    small, large = sorted(split.bipartition.side), sorted(split.bipartition.other)
    if len(small) > len(large):
        small, large = large, small
    out = []
    for image in itertools.permutations(large, len(small)):
        gens = tuple(sorted(generator_of_edge(a, b) for a, b in zip(small, image)))
        out.append(CartanSubalgebra(split, gens))
    return out


def subalgebra_check(h, conv=None, tol=1e-12):
    """Pairwise commutation inside h and maximality within m."""
    report = VerificationReport(f"Cartan subalgebra {', '.join(x.label for x in h.generators)}")
    worst = 0.0
    for a, b in itertools.combinations(h.generators, 2):
        worst = max(worst, commutator_half(generator_bivector(a, conv), generator_bivector(b, conv)).max_abs())
    report.add("pairwise commuting", worst, tol)

    # every generator of m outside h must fail to commute with some element of h
    uncovered = 0
    for x in split_outside(h):
        if all(not _bracket_support(x, y, conv) for y in h.generators):
            uncovered += 1
    report.add("maximal in m", uncovered, 0)
    return report


def split_outside(h):
    return [x for x in h.split.m if x not in h.generators]


def edge_rule_check(conv=None, tol=1e-12):
    """
    Generators on edges sharing one vertex bracket to +/- the generator on the third
    edge of the triangle; vertex-disjoint edges commute.
    """
    report = VerificationReport("generator graph edge rule")
    worst_shared = 0.0
    worst_disjoint = 0.0
    for a, b in itertools.combinations(all_generators(), 2):
        ea, eb = edge(a), edge(b)
        support = _bracket_support(a, b, conv)
        if ea & eb:
            third = generator_of_edge(*(ea ^ eb))
            value = support.get(third, 0.0)
            others = max((abs(c) for x, c in support.items() if x != third), default=0.0)
            worst_shared = max(worst_shared, abs(abs(value) - 1.0), others)
        else:
            worst_disjoint = max(worst_disjoint, max((abs(c) for c in support.values()), default=0.0))
    report.add("shared vertex -> +/- third edge", worst_shared, tol)
    report.add("disjoint edges commute", worst_disjoint, tol)
    return report
