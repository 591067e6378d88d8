import json
import logging
from functools import lru_cache

from app.config import Config
from app.models.generator import GeneratorIndex
from app.services.cartan.factorization import MAGIC_Q, MAGIC_QPRIME, conjugation_table, table_rows

logger = logging.getLogger(__name__)

TABLE_FILE = "conjugation_tables.v1.json"

OPERATORS = {"Q": MAGIC_Q, "Qprime": MAGIC_QPRIME}


@lru_cache(maxsize=None)
def load_printed_tables(path=None):
    path = path or (Config.TABLE_DATA_DIR / TABLE_FILE)
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("version") != 1:
        raise ValueError(f"Unsupported table file version {data.get('version')!r}")
    return data["tables"]


def diff_rows(computed, printed):
    """Cells where two 4x4 label grids disagree, as (i, j, computed, printed)."""
    out = []
    for i in range(4):
        for j in range(4):
            if computed[i][j] != printed[i][j]:
                out.append((i, j, computed[i][j], printed[i][j]))
    return out


def table_report(op):
    """
    Computed u^dagger G u table for `op` ('Q' or 'Qprime'), the u G u^dagger table, and
    their disagreements with the printed table.
    """
    if op not in OPERATORS:
        raise ValueError(f"Unknown operator {op!r}, expected one of {sorted(OPERATORS)}")
    u = OPERATORS[op]
    printed = load_printed_tables()[op]["rows"]
    forward = table_rows(conjugation_table(u))
    backward = table_rows(conjugation_table(u.conj().T))
    forward_diff = diff_rows(forward, printed)
    backward_diff = diff_rows(backward, printed)
    if forward_diff and backward_diff:
        logger.warning("Printed %s table matches neither conjugation order", op)
    return {
        "operator": op,
        "adjoint_first": {"rows": forward, "mismatches": [list(d) for d in forward_diff]},
        "adjoint_last": {"rows": backward, "mismatches": [list(d) for d in backward_diff]},
        "printed": printed,
        "printed_order": (
            "u^dagger G u" if not forward_diff else "u G u^dagger" if not backward_diff else "neither"
        ),
    }


def monomial(op):
    return all(e.monomial for e in conjugation_table(OPERATORS[op]).values())


def printed_image(op, g):
    label = load_printed_tables()[op]["rows"][g.i][g.j]
    sign = -1 if label.startswith("-") else 1
    return GeneratorIndex.parse(label.lstrip("-")), sign
