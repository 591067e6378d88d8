import logging

from rich.console import Console
from rich.logging import RichHandler

# Reports go to stdout, diagnostics to stderr
console = Console()
err_console = Console(stderr=True)

def init_logging(level="WARNING"):
    """
    Configure the root logger once with a rich handler on stderr.

    :param level: logging level name or number
    """
    root = logging.getLogger()
    if any(isinstance(h, RichHandler) for h in root.handlers):
        root.setLevel(level)
        return
    handler = RichHandler(console=err_console, show_path=False, rich_tracebacks=True)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
