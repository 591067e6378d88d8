import logging

import click
from dotenv import load_dotenv
load_dotenv()

from .config import Config
from .extensions import init_logging

from .commands.iso_commands import verify_iso_command, tables_command
from .commands.state_commands import schmidt_command
from .commands.cartan_commands import kak_command, factor_check_command
from .commands.channel_commands import kraus_command
from .commands.selftest_commands import selftest_command

logger = logging.getLogger(__name__)

def create_app():
    @click.group(name="hexabloch")
    @click.option("--json", "as_json", is_flag=True, help="Print the JSON envelope instead of tables.")
    @click.option("--seed", type=int, default=None, help="Random seed (default from HEXABLOCH_SEED).")
    @click.option("--tol", type=float, default=None, help="Comparison tolerance.")
    @click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
                  help="Also write the JSON envelope to this file.")
    @click.pass_context
    def app(ctx, as_json, seed, tol, out):
        """Geometric algebra of two qubits: G(6,0) against 4x4 matrices."""
        ctx.obj = {
            "json": as_json,
            "seed": Config.SEED if seed is None else seed,
            "tol": Config.TOLERANCE if tol is None else tol,
            "out": out,
        }

    init_logging(Config.LOG_LEVEL)

    # Register commands
    for command in (
        verify_iso_command,
        tables_command,
        schmidt_command,
        kak_command,
        factor_check_command,
        kraus_command,
        selftest_command,
    ):
        app.add_command(command)

    logger.debug("Registered %d commands", len(app.commands))
    return app
