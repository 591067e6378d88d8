import itertools

import numpy as np

from app.models.channel import ChannelReport
from app.services.channels.kraus import apply_superoperator, compose, superoperator_of
from app.services.oracle.linalg import eig_hermitian


def choi_matrix(s):
    """sum_ij E_ij (x) Map(E_ij)"""
    c = np.zeros((16, 16), dtype=np.complex128)
    for i in range(4):
        for j in range(4):
            e = np.zeros((4, 4), dtype=np.complex128)
            e[i, j] = 1.0
            c += np.kron(e, apply_superoperator(s, e))
    return c


def choi_check(s, label="", tol=1e-9):
    """
    Trace preservation, Hermiticity preservation and the least Choi eigenvalue;
    `boundary` means that eigenvalue is zero within tol.
    """
    c = choi_matrix(s)
    hermitian = bool(np.max(np.abs(c - c.conj().T)) <= tol)
    partial = np.einsum("iaja->ij", c.reshape(4, 4, 4, 4))
    trace_preserving = bool(np.max(np.abs(partial - np.eye(4))) <= tol)
    values, _ = eig_hermitian(0.5 * (c + c.conj().T))
    least = float(values[0])
    return ChannelReport(
        label=str(label),
        trace_preserving=trace_preserving,
        hermiticity_preserving=hermitian,
        min_choi_eig=least,
        completely_positive=least >= -tol,
        boundary=abs(least) <= tol,
    )


def kraus_reports(conv=None, tol=1e-9):
    return [choi_check(superoperator_of(k, conv), label=str(k), tol=tol) for k in range(1, 7)]


def pair_reports(conv=None, tol=1e-9):
    """All 36 ordered two-step compositions."""
    sops = {k: superoperator_of(k, conv) for k in range(1, 7)}
    return [
        choi_check(compose(sops[a], sops[b]), label=f"{a}*{b}", tol=tol)
        for a, b in itertools.product(range(1, 7), repeat=2)
    ]


def midpoint_report(a, b, conv=None, tol=1e-9):
    mixed = 0.5 * (superoperator_of(a, conv) + superoperator_of(b, conv))
    return choi_check(mixed, label=f"({a}+{b})/2", tol=tol)
