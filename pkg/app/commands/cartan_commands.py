import click
from jsonschema import validate

from app.commands.common import EXIT_FAILED, EXIT_OK, emit, envelope, handle_errors, load_json
from app.models.factorization import Factorization
from app.models.factorization_schema import factorization_schema
from app.models.matrix import matrix_from_dict
from app.models.matrix_schema import matrix_schema
from app.services.cartan.factorization import (
    MAGIC_Q, MAGIC_QPRIME, SWAP, cartan_q, cartan_qprime, factorization_verdict, qprime_single,
    swap_factorization,
)
from app.services.cartan.kak import kak_decompose

TARGETS = {"Q": MAGIC_Q, "Qprime": MAGIC_QPRIME, "swap": SWAP}


@click.command("kak")
@click.option("--unitary", "unitary_file", type=click.Path(exists=True, dir_okay=False), required=True)
@click.pass_context
@handle_errors
def kak_command(ctx, unitary_file):
    """Cartan KAK factorization of a two-qubit unitary."""
    data = load_json(unitary_file)
    validate(instance=data, schema=matrix_schema)
    u = matrix_from_dict(data)
    result = kak_decompose(u, tol=max(ctx.obj["tol"], 1e-9))
    ok = result.residual <= max(ctx.obj["tol"], 1e-9)
    emit(envelope("success" if ok else "error",
                  f"KAK reconstruction residual {result.residual:.3g}", result.to_dict()),
         EXIT_OK if ok else EXIT_FAILED)


@click.command("factor-check")
@click.option("--which", type=click.Choice(["Q", "Qprime", "swap"]), required=True)
@click.option("--factorization", "factorization_file", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Check this factorization instead of the printed ones.")
@click.pass_context
@handle_errors
def factor_check_command(ctx, which, factorization_file):
    """
    Compose a factorization and compare it with Q, Q' or SWAP up to global phase.
    Printed factorizations are reported; a user-supplied one decides the exit code.
    """
    target = TARGETS[which]
    tol = max(ctx.obj["tol"], 1e-10)
    if factorization_file:
        data = load_json(factorization_file)
        validate(instance=data, schema=factorization_schema)
        verdict = factorization_verdict(Factorization.from_dict(data), target, tol)
        ok = verdict["verdict"] == "PASS"
        emit(envelope("success" if ok else "error", f"{which}: {verdict['verdict']}", verdict),
             EXIT_OK if ok else EXIT_FAILED)

    if which == "Q":
        candidates = [cartan_q()]
    elif which == "Qprime":
        candidates = [qprime_single(), cartan_qprime("pseudoscalar"), cartan_qprime("dropped")]
    else:
        candidates = [swap_factorization()]
    verdicts = [factorization_verdict(f, target, tol) for f in candidates]
    summary = ", ".join(f"{v['name']}: {v['verdict']}" for v in verdicts)
    emit(envelope("success", summary, {"verdicts": verdicts}))
