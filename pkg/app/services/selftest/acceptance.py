import logging
import math

import numpy as np

from app.models.cartan import Bipartition
from app.models.generator import GeneratorIndex
from app.models.multivector import Multivector
from app.models.report import VerificationReport
from app.models.signature import G3, G6
from app.models.state import PRINTED_SINGLET_PARAMS, SchmidtParams
from app.services.algebra.duality import dual_relations_check, g3_bivector_basis
from app.services.algebra.exponential import exp_even, rotor_conjugate
from app.services.algebra.products import (
    geometric_product, grade_involute, inner_product, outer_product, reverse,
)
from app.services.cartan.factorization import (
    MAGIC_Q, MAGIC_QPRIME, SWAP, cartan_q, cartan_qprime, compose_factorization, composition_residual,
    factorization_verdict, phase_equivalent, qprime_single, swap_factorization,
)
from app.services.cartan.graph import (
    all_bipartitions, cartan_subalgebras, edge_rule_check, split_from_bipartition, subalgebra_check,
)
from app.services.cartan.kak import kak_decompose
from app.services.cartan.sequence import (
    SEQUENCE_15, SEQUENCE_16, ineffective_direction, sequence_fill_check, sequence_jacobian,
)
from app.services.cartan.tables import monomial, table_report
from app.services.channels.choi import choi_check, kraus_reports, midpoint_report, pair_reports
from app.services.channels.kraus import identity_superoperator, superoperator_of_map
from app.services.helper.sampling import (
    make_rng, random_blade, random_multivector, random_schmidt_values, random_su4, random_unitary,
    random_vector,
)
from app.services.iso.generators import generator_bivector, pseudoscalar, reference_projector
from app.services.iso.states import (
    PURITY_BOUNDS, density_from_state, entropy_printed, entropy_standard, mixture, overlap_up_to_phase,
    purity_moments, schmidt_state_vector, state_from_schmidt, state_vector,
)
from app.services.iso.translation import even_to_matrix
from app.services.iso.verification import adopt_convention, homomorphism_check
from app.services.oracle.linalg import eig_hermitian

logger = logging.getLogger(__name__)

G = GeneratorIndex

CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128)


def _i_times(g):
    return geometric_product(pseudoscalar(), generator_bivector(g))


def singlet_spinor():
    """(G20 - G02)/sqrt(2)"""
    return (generator_bivector(G(2, 0)) - generator_bivector(G(0, 2))).scale(1 / math.sqrt(2))


def singlet_density():
    """(1 + I G11 + I G22 + I G33)/4 under the adopted convention."""
    return (1.0 + _i_times(G(1, 1)) + _i_times(G(2, 2)) + _i_times(G(3, 3))).scale(0.25)


def check_algebra_laws(report, rng, samples, tol):
    for sig, terms in ((G3, None), (G6, 12)):
        assoc = dist = square = split = nilpotent = involution = reversion = 0.0
        for _ in range(samples):
            a, b, c = (random_multivector(sig, rng, terms=terms) for _ in range(3))
            ab = geometric_product(a, b)
            assoc = max(assoc, geometric_product(ab, c).max_abs_diff(
                geometric_product(a, geometric_product(b, c))))
            dist = max(dist, geometric_product(a, b + c).max_abs_diff(ab + geometric_product(a, c)))
            involution = max(involution, grade_involute(ab).max_abs_diff(
                geometric_product(grade_involute(a), grade_involute(b))))
            reversion = max(reversion, reverse(ab).max_abs_diff(geometric_product(reverse(b), reverse(a))))
            v = random_vector(sig, rng)
            norm = sum(v[1 << k] ** 2 * sig.square(k + 1) for k in range(sig.dim))
            square = max(square, geometric_product(v, v).max_abs_diff(Multivector.scalar(sig, norm)))
            blade = random_blade(sig, int(rng.integers(1, 4)), rng)
            split = max(split, geometric_product(v, blade).max_abs_diff(
                inner_product(v, blade) + outer_product(v, blade)))
            nilpotent = max(nilpotent, inner_product(v, inner_product(v, c)).max_abs())
        report.add(f"G{sig} associativity", assoc, tol * 10)
        report.add(f"G{sig} distributivity", dist, tol)
        report.add(f"G{sig} vector square", square, tol)
        report.add(f"G{sig} aB = a.B + a^B", split, tol * 10)
        report.add(f"G{sig} a.(a.B) = 0", nilpotent, tol * 10)
        report.add(f"G{sig} grade involution is an automorphism", involution, tol * 10)
        report.add(f"G{sig} reversion is an anti-automorphism", reversion, tol * 10)


def check_rotors(report, tol, angles=20):
    e1_plane = g3_bivector_basis()[0]
    worst = 0.0
    for theta in np.linspace(-2 * math.pi, 2 * math.pi, 33):
        closed = Multivector.scalar(G3, math.cos(theta)) + e1_plane.scale(math.sin(theta))
        worst = max(worst, exp_even(e1_plane.scale(theta)).max_abs_diff(closed))
    report.add("exp(theta E1) = cos + E1 sin", worst, 1e-12)
    report.add("exp(pi E1) = -1", exp_even(e1_plane.scale(math.pi)).max_abs_diff(Multivector.scalar(G3, -1.0)), 1e-12)
    worst = 0.0
    for theta in np.linspace(-math.pi, math.pi, angles):
        moved = rotor_conjugate(exp_even(e1_plane.scale(theta / 2)), Multivector.vector(G3, 3))
        expected = Multivector.vector(G3, 3, math.cos(theta)) + Multivector.vector(G3, 2, math.sin(theta))
        worst = max(worst, moved.max_abs_diff(expected))
    report.add(f"R e3 R~ = cos e3 + sin e2 ({angles} angles)", worst, tol)


def check_states(report, rng, samples, tol, mixtures=1000):
    p_ref = reference_projector()
    norm = idem = trace = m2 = display = 0.0
    bounds = [0.0, 0.0, 0.0]
    densities = []
    for _ in range(samples):
        p = SchmidtParams(*random_schmidt_values(rng))
        state = state_from_schmidt(p)
        norm = max(norm, geometric_product(state.spinor, reverse(state.spinor)).max_abs_diff(Multivector.scalar(G6, 1.0)))
        idem = max(idem, geometric_product(state.psi, p_ref).max_abs_diff(state.psi))
        rho = density_from_state(state)
        densities.append(rho)
        trace = max(trace, abs(float(np.real(np.trace(even_to_matrix(rho.value)))) - 1.0))
        m2 = max(m2, abs(purity_moments(rho)[0] - 3 / 16))
        shifted = SchmidtParams(p.rho, p.phi, p.phi1, p.phi2, p.theta1, p.theta2, 2 * p.tau + math.pi / 2, p.sigma)
        display = max(display, 1.0 - overlap_up_to_phase(state_vector(state), schmidt_state_vector(shifted)))
    report.add("Psi Psi~ = 1", norm, 1e-10)
    report.add("psi P3^1 P3^2 = psi", idem, 1e-10)
    report.add("tr M(rho) = 1", trace, 1e-10)
    report.add(f"{samples} pure states: <rho^2>_0 = 3/16", m2, 1e-10)
    report.add("Hilbert Schmidt form with tau -> 2 tau + pi/2", display, 1e-10)

    for _ in range(mixtures):
        size = int(rng.integers(2, min(5, len(densities)) + 1))
        weights = rng.dirichlet(np.ones(size))
        picks = rng.choice(len(densities), size=size, replace=False)
        moments = purity_moments(mixture([densities[i] for i in picks], weights))
        for k in range(3):
            bounds[k] = max(bounds[k], moments[k] - PURITY_BOUNDS[k])
    report.add(f"{mixtures} mixtures respect purity bounds", max(0.0, *bounds), 1e-12)
    report.add("maximally mixed state: m2 = m3 = m4 = 0",
               max(abs(m) for m in purity_moments(Multivector.scalar(G6, 0.25))), 1e-15)

    report.add(
        "entropy depends on sigma only",
        abs(entropy_standard(state_from_schmidt(SchmidtParams(sigma=math.pi / 2)))
            - entropy_standard(state_from_schmidt(SchmidtParams(sigma=math.pi / 2, theta1=1.1, tau=0.4)))),
        1e-10,
    )

    rho_singlet = density_from_state(geometric_product(singlet_spinor(), p_ref))
    report.add("singlet density (1 + I G11 + I G22 + I G33)/4", rho_singlet.value.max_abs_diff(singlet_density()), tol)
    values, _ = eig_hermitian(even_to_matrix(rho_singlet.value))
    report.add("singlet density eigenvalues (0, 0, 0, 1)", float(np.max(np.abs(values - [0, 0, 0, 1]))), 1e-10)
    printed_density = (1.0 - _i_times(G(1, 1)) - _i_times(G(2, 2)) - _i_times(G(3, 3))).scale(0.25)
    report.add("printed singlet density (1 - I G11 - I G22 - I G33)/4",
               rho_singlet.value.max_abs_diff(printed_density), tol, gate=False)

    printed_singlet = state_from_schmidt(PRINTED_SINGLET_PARAMS)
    report.add("printed singlet parameters give (G20 - G02)/sqrt2 P",
               printed_singlet.psi.max_abs_diff(geometric_product(singlet_spinor(), p_ref)), tol, gate=False)
    report.add("printed singlet parameters are maximally entangled",
               abs(entropy_standard(printed_singlet) - math.log(2)), 1e-10)
    report.data["entropy_printed_singlet"] = {
        "printed_formula": entropy_printed(PRINTED_SINGLET_PARAMS.sigma),
        "standard": entropy_standard(printed_singlet),
    }


def check_swap(report, rng, tol):
    pi_rotor = exp_even(
        (generator_bivector(G(1, 1)) + generator_bivector(G(2, 2)) + generator_bivector(G(3, 3))).scale(math.pi / 4))
    half = (1.0 - _i_times(G(1, 1)) - _i_times(G(2, 2)) - _i_times(G(3, 3))).scale(0.5)
    phased = geometric_product(exp_even(pseudoscalar().scale(math.pi / 4)), half)
    report.add("exp(pi/4 (G11+G22+G33)) = e^(I pi/4) (1 - I G11 - I G22 - I G33)/2", pi_rotor.max_abs_diff(phased), tol)
    printed = (1.0 + _i_times(G(1, 1)) + _i_times(G(2, 2)) + _i_times(G(3, 3))).scale(0.5)
    report.add("printed swap (1 + I G11 + I G22 + I G33)/2", pi_rotor.max_abs_diff(printed), tol, gate=False)
    report.add("swap rotor ~ SWAP", phase_equivalent(even_to_matrix(pi_rotor), SWAP).residual, 1e-10)

    rho = singlet_density()
    report.add("singlet invariant under swap", rotor_conjugate(pi_rotor, rho).max_abs_diff(rho), tol)
    worst = 0.0
    for _ in range(10):
        a = rng.uniform(-2, 2, size=3)
        joint = sum(
            ((generator_bivector(G(k, 0)) + generator_bivector(G(0, k))).scale(float(a[k - 1])) for k in (1, 2, 3)),
            Multivector.zero(G6),
        )
        worst = max(worst, rotor_conjugate(exp_even(joint), rho).max_abs_diff(rho))
    report.add("singlet invariant under joint rotations", worst, 1e-11)


def check_tables(report):
    for op in ("Q", "Qprime"):
        report.add(f"{op} conjugation is monomial", 0 if monomial(op) else 1, 0)
        details = table_report(op)
        report.add(f"printed {op} table matches u^dagger G u",
                   len(details["adjoint_first"]["mismatches"]), 0, gate=False)
        report.add(f"printed {op} table matches u G u^dagger",
                   len(details["adjoint_last"]["mismatches"]), 0, gate=False)


def check_factorizations(report):
    single = factorization_verdict(qprime_single(), MAGIC_QPRIME)
    report.add("exp(pi/4 G21) = Q'", single["residual"], 1e-12)
    swap = factorization_verdict(swap_factorization(), SWAP)
    report.add("swap factorization ~ SWAP", swap["residual"], 1e-10)
    printed = [
        factorization_verdict(cartan_q(), MAGIC_Q),
        factorization_verdict(cartan_qprime("pseudoscalar"), MAGIC_QPRIME),
        factorization_verdict(cartan_qprime("dropped"), MAGIC_QPRIME),
    ]
    for verdict in printed:
        report.add(f"printed factorization {verdict['name']}", verdict["residual"], 1e-10, gate=False)
        report.add(f"{verdict['name']}: multivector and matrix products agree", verdict["composition_residual"], 1e-9)
    report.data["printed_factorizations"] = printed


def check_cartan(report, tol):
    bipartitions = all_bipartitions()
    report.add("31 bipartitions", abs(len(bipartitions) - 31), 0)
    report.add("bracket inclusions of every split", max(split_from_bipartition(b).deviation for b in bipartitions), tol)

    local = split_from_bipartition(Bipartition(frozenset({1, 2, 3})))
    subalgebras = cartan_subalgebras(local)
    report.add("local split: dim g = 6", abs(len(local.g) - 6), 0)
    report.add("local split: 6 perfect matchings", abs(len(subalgebras) - 6), 0)
    report.add("local split contains {G11, G22, G33}",
               0 if (G(1, 1), G(2, 2), G(3, 3)) in [h.generators for h in subalgebras] else 1, 0)
    report.add("local split: Cartan subalgebras",
               max(subalgebra_check(h).max_deviation for h in subalgebras), tol)

    e1f1 = split_from_bipartition(Bipartition(frozenset({1, 4})))
    report.add("{e1,f1} split: dim g = 7", abs(len(e1f1.g) - 7), 0)
    subalgebras = cartan_subalgebras(e1f1)
    report.add("{e1,f1} split: Cartan subalgebras",
               max(subalgebra_check(h).max_deviation for h in subalgebras), tol)
    report.extend(edge_rule_check(tol=tol))


def check_kak(report, rng, samples):
    worst = 0.0
    for _ in range(samples):
        worst = max(worst, kak_decompose(random_su4(rng)).residual)
    report.add(f"KAK reconstructs {samples} random SU(4)", worst, 1e-9)
    for name, u in (("CNOT", CNOT), ("SWAP", SWAP), ("identity", np.eye(4))):
        result = kak_decompose(u)
        report.add(f"KAK reconstructs {name}", result.residual, 1e-9)
        report.data[f"kak_{name}"] = list(result.canonical)
        if name == "SWAP":
            quarter = math.pi / 4
            report.add("KAK of SWAP is (pi/4, pi/4, pi/4)",
                       max(abs(c - quarter) for c in result.canonical), 1e-8)
    local = np.kron(random_unitary(2, rng), random_unitary(2, rng))
    result = kak_decompose(local)
    report.add("KAK of a local unitary has zero interaction", max(abs(c) for c in result.canonical), 1e-9)


def check_sequences(report, rng, points=10):
    sixteen = sequence_fill_check(SEQUENCE_16, seed=rng, samples=points)
    report.extend(sixteen, prefix="16-parameter: ")
    params = rng.uniform(-np.pi, np.pi, size=16)
    jac = sequence_jacobian(SEQUENCE_16, params)
    report.add("16-parameter: opposed middle G33 shifts are ineffective",
               float(np.max(np.abs(jac @ ineffective_direction()))), 1e-10)
    fifteen = sequence_fill_check(SEQUENCE_15, seed=rng, samples=points)
    report.extend(fifteen, prefix="15-parameter: ")
    report.data["sequence_singular_values"] = {
        "16": sixteen.data["smallest_nonzero_singular_value"],
        "15": fifteen.data["smallest_nonzero_singular_value"],
    }


def check_channels(report, tol=1e-9):
    singles = kraus_reports(tol=tol)
    pairs = pair_reports(tol=tol)
    midpoint = midpoint_report(1, 2, tol=tol)
    everything = singles + pairs + [midpoint]
    report.add("Kraus sums and compositions are trace preserving",
               sum(0 if r.trace_preserving else 1 for r in everything), 0)
    report.add("Kraus sums and compositions preserve Hermiticity",
               sum(0 if r.hermiticity_preserving else 1 for r in everything), 0)
    report.add("Kraus sums are completely positive",
               max(0.0, -min(r.min_choi_eig for r in singles)), tol, gate=False)
    report.add("Kraus sums lie on the boundary", sum(0 if r.boundary else 1 for r in singles), 0, gate=False)
    identity = choi_check(identity_superoperator(), "identity", tol)
    report.add("identity channel is a boundary point", 0 if identity.boundary and identity.completely_positive else 1, 0)
    swap_rotor = compose_factorization(swap_factorization())[0]
    unitary = choi_check(superoperator_of_map(lambda x: rotor_conjugate(swap_rotor, x)), "swap", tol)
    report.add("unitary channel is completely positive", max(0.0, -unitary.min_choi_eig), tol)
    report.data["kraus"] = [r.to_dict() for r in singles]


def run_selftest(seed=None, tol=1e-12, samples=500, kak_samples=100, sequence_points=10):
    """
    Every check of the package in one report. Gated checks decide the verdict; checks
    with gate=False compare against printed closed forms and are reported only.

    `samples` sizes the random sweeps: the algebra laws use it directly, the
    homomorphism sweep 2/5 of it, pure states 1/5 and mixtures twice it, so the
    default gives 500, 200, 100 and 1000 cases.
    """
    rng = make_rng(seed)
    report = VerificationReport("selftest")
    adopted, candidates = adopt_convention(tol)
    report.data["convention"] = adopted.to_dict()
    for candidate in candidates:
        conv = candidate.data["convention"]
        ok = conv == adopted.to_dict()
        report.add(f"convention {conv}", 0 if candidate.passed else 1, 0, gate=ok,
                   detail=", ".join(c.name for c in candidate.failures()))

    check_algebra_laws(report, rng, samples, tol)
    check_rotors(report, tol)
    report.extend(dual_relations_check(G3, samples=min(samples, 100), seed=rng, tol=tol))
    report.extend(dual_relations_check(G6, samples=min(samples, 100), seed=rng, tol=tol))
    report.extend(homomorphism_check(samples=max(10, 2 * samples // 5), seed=rng))
    check_states(report, rng, max(10, samples // 5), 1e-12, mixtures=max(10, 2 * samples))
    check_swap(report, rng, 1e-12)
    check_tables(report)
    check_factorizations(report)
    check_cartan(report, tol)
    check_kak(report, rng, kak_samples)
    check_sequences(report, rng, sequence_points)
    check_channels(report)
    logger.debug("selftest finished: %d checks", len(report.checks))
    return report
