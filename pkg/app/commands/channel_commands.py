import click
from jsonschema import validate

from app.commands.common import emit, envelope, handle_errors, load_json
from app.exceptions import NormalizationError
from app.models.channel import check_kraus_index
from app.models.matrix import matrix_from_dict
from app.models.matrix_schema import matrix_schema
from app.models.multivector import Multivector
from app.models.multivector_schema import multivector_schema
from app.services.channels.choi import choi_check
from app.services.channels.kraus import kraus_apply, superoperator_of
from app.services.iso.translation import even_to_matrix, matrix_to_even
from app.services.oracle.linalg import eig_hermitian, is_hermitian


def load_density(raw):
    """A density operator given either as multivector JSON or as a 4x4 matrix JSON."""
    if isinstance(raw, dict) and "rows" in raw:
        validate(instance=raw, schema=matrix_schema)
        m = matrix_from_dict(raw)
        if m.shape != (4, 4) or not is_hermitian(m):
            raise NormalizationError(f"Density matrix must be a 4x4 Hermitian matrix, got shape {m.shape}")
        return matrix_to_even(m)
    validate(instance=raw, schema=multivector_schema)
    return Multivector.from_dict(raw)


@click.command("kraus")
@click.option("--k", "k", type=int, required=True, help="Vector index 1..6.")
@click.option("--rho", "rho_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Density operator as multivector JSON or 4x4 matrix JSON.")
@click.pass_context
@handle_errors
def kraus_command(ctx, k, rho_file):
    """Channel report of the Kraus sum on vector k, optionally applied to a density operator."""
    check_kraus_index(k)
    report = choi_check(superoperator_of(k), label=str(k))
    data = report.to_dict()
    if rho_file:
        out = kraus_apply(k, load_density(load_json(rho_file)))
        values, _ = eig_hermitian(even_to_matrix(out.value))
        data["output"] = out.to_dict()
        data["output_eigenvalues"] = [float(v) for v in values]
    emit(envelope("success", f"Kraus sum on e{k}: minimum Choi eigenvalue {report.min_choi_eig:.6g}", data))
