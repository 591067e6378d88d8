import click

from app.commands.common import emit, envelope, handle_errors, report_exit
from app.services.selftest.acceptance import run_selftest


@click.command("selftest")
@click.option("--samples", type=int, default=500, show_default=True, help="Random samples per algebra law.")
@click.option("--kak-samples", type=int, default=100, show_default=True)
@click.option("--sequence-points", type=int, default=10, show_default=True,
              help="Random points for the Jacobian rank of the generator sequences.")
@click.pass_context
@handle_errors
def selftest_command(ctx, samples, kak_samples, sequence_points):
    """Run every gated check and report the printed closed forms alongside."""
    report = run_selftest(seed=ctx.obj["seed"], tol=ctx.obj["tol"], samples=samples, kak_samples=kak_samples,
                          sequence_points=sequence_points)
    failed = report.failures()
    message = "All checks passed" if not failed else f"{len(failed)} gated check(s) failed"
    emit(envelope("success" if not failed else "error", message, report.to_dict()), report_exit(report))
