import itertools

import numpy as np

from app.models.generator import GeneratorIndex, all_generators
from app.models.report import VerificationReport
from app.services.algebra.products import commutator_half
from app.services.iso.generators import generator_bivector, generator_matrix
from app.services.helper.sampling import make_rng
from app.services.oracle.linalg import expm

G = GeneratorIndex

# g' x h' x g' around the {e1,f1} split, the middle G33 copies kept apart
SEQUENCE_16 = (
    (G(2, 2), G(3, 3)),
    (G(1, 0), G(0, 1)),
    (G(1, 1), G(2, 2), G(3, 3)),
    (G(3, 0), G(0, 3)),
    (G(1, 1), G(2, 2), G(3, 3)),
    (G(1, 0), G(0, 1)),
    (G(2, 2), G(3, 3)),
)

# the same with the two middle G33 copies merged into the Cartan subalgebra
SEQUENCE_15 = (
    (G(2, 2), G(3, 3)),
    (G(1, 0), G(0, 1)),
    (G(1, 1), G(2, 2)),
    (G(3, 0), G(0, 3), G(3, 3)),
    (G(1, 1), G(2, 2)),
    (G(1, 0), G(0, 1)),
    (G(2, 2), G(3, 3)),
)


def _factor(gens, values):
    return expm(sum(c * generator_matrix(g) for g, c in zip(gens, values)))


def sequence_jacobian(sets, params, with_phase=False):
    """
    15 x n Jacobian of U = prod_k exp(sum c G) at `params`, expressed through
    U^dagger dU in generator coordinates. Each set must commute internally, so
    d/dc exp(sum c G) = G exp(sum c G) exactly. With `with_phase` a 16th row holds
    the i*Id coordinate, making the Jacobian one of u(4).
    """
    chunks = []
    start = 0
    for gens in sets:
        chunks.append(params[start:start + len(gens)])
        start += len(gens)
    factors = [_factor(gens, values) for gens, values in zip(sets, chunks)]
    total = np.eye(4, dtype=np.complex128)
    for f in factors:
        total = total @ f

    columns = []
    for k, gens in enumerate(sets):
        left = np.eye(4, dtype=np.complex128)
        for f in factors[:k]:
            left = left @ f
        right = np.eye(4, dtype=np.complex128)
        for f in factors[k + 1:]:
            right = right @ f
        for g in gens:
            body = total.conj().T @ left @ generator_matrix(g) @ factors[k] @ right
            column = [
                float(np.real(np.trace(generator_matrix(h).conj().T @ body))) / 4.0 for h in all_generators()
            ]
            if with_phase:
                column.append(float(np.imag(np.trace(body))) / 4.0)
            columns.append(column)
    return np.array(columns).T


def sequence_fill_check(sets=SEQUENCE_16, seed=None, samples=10, tol=1e-12, gap=1e3):
    """
    Internal commutation of each set, Jacobian rank at random points and, when the
    sequence is overparametrized, the singular-value gap below rank 15 and the
    direction it cannot feel.
    """
    rng = make_rng(seed)
    n = sum(len(s) for s in sets)
    report = VerificationReport(f"{len(sets)}-set generator sequence, {n} parameters")

    worst = 0.0
    for gens in sets:
        for a, b in itertools.combinations(gens, 2):
            worst = max(worst, commutator_half(generator_bivector(a), generator_bivector(b)).max_abs())
    report.add("sets commute internally", worst, tol)

    ranks, smallest, nulls, ratios = [], [], [], []
    for _ in range(samples):
        params = rng.uniform(-np.pi, np.pi, size=n)
        full = sequence_jacobian(sets, params, with_phase=True)
        jac = full[:15]
        values = np.linalg.svd(jac, compute_uv=False)
        rank = int(np.sum(values > 1e-8 * values[0]))
        ranks.append(rank)
        smallest.append(float(values[rank - 1]))
        if n > 15:
            spectrum = np.linalg.svd(full, compute_uv=False)
            ratios.append(float(spectrum[15] / spectrum[14]))
        if n > rank:
            _, _, vh = np.linalg.svd(jac)
            nulls.append(vh[-1])
    report.add("Jacobian rank 15", max(abs(r - 15) for r in ranks), 0)
    if ratios:
        report.add(f"sigma16 / sigma15 <= 1/{gap:g}", max(ratios), 1 / gap)
    report.data.update(parameters=n, ranks=ranks, smallest_nonzero_singular_value=min(smallest))

    if nulls:
        # positions of repeated generators in adjacent sets
        flat = [g for gens in sets for g in gens]
        report.data["null_vectors"] = [
            {flat[i].label + f"[{i}]": float(round(x, 12)) for i, x in enumerate(vec) if abs(x) > 1e-8}
            for vec in nulls
        ]
    return report


def ineffective_direction(sets=SEQUENCE_16):
    """Unit vector opposing the two middle G33 multipliers of SEQUENCE_16."""
    flat = [g for gens in sets for g in gens]
    positions = [i for i, g in enumerate(flat) if g == G(3, 3)]
    middle = sorted(positions, key=lambda i: abs(i - (len(flat) - 1) / 2))[:2]
    vec = np.zeros(len(flat))
    vec[min(middle)] = 1 / np.sqrt(2)
    vec[max(middle)] = -1 / np.sqrt(2)
    return vec
