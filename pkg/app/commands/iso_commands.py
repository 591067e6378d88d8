import click

from app.commands.common import EXIT_FAILED, EXIT_OK, emit, envelope, handle_errors
from app.services.cartan.tables import monomial, table_report
from app.services.iso.verification import adopt_convention


@click.command("verify-iso")
@click.pass_context
@handle_errors
def verify_iso_command(ctx):
    """Sweep the generator conventions against the matrix oracle."""
    adopted, reports = adopt_convention(ctx.obj["tol"])
    chosen = next(r for r in reports if r.data["convention"] == adopted.to_dict())
    data = chosen.to_dict()
    data["candidates"] = [
        {"convention": r.data["convention"], "verdict": "PASS" if r.passed else "FAIL",
         "failed": [c.name for c in r.failures()]}
        for r in reports
    ]
    status = "success" if chosen.passed else "error"
    emit(envelope(status, f"Adopted generator convention {adopted}", data),
         EXIT_OK if chosen.passed else EXIT_FAILED)


@click.command("tables")
@click.option("--op", "op", type=click.Choice(["Q", "Qprime"]), required=True)
@click.pass_context
@handle_errors
def tables_command(ctx, op):
    """Generator conjugation table of a Bell-basis change, diffed with the printed one."""
    data = table_report(op)
    data["monomial"] = monomial(op)
    message = f"{op}: printed table reads as {data['printed_order']}"
    emit(envelope("success" if data["monomial"] else "error", message, data),
         EXIT_OK if data["monomial"] else EXIT_FAILED)
