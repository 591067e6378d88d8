import functools
import json
import logging

import click
import numpy as np
from jsonschema import ValidationError
from rich.table import Table

from app.extensions import console

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_MALFORMED = 2
EXIT_NUMERIC = 3


def envelope(status, message, data=None):
    return {"status": status, "message": message, "data": data if data is not None else {}}


def _default(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, complex):
        return [o.real, o.imag]
    raise TypeError(f"Cannot serialize {type(o).__name__}")


def emit(payload, exit_code=EXIT_OK):
    """Print the envelope (JSON or rich), write --out if requested, and exit."""
    ctx = click.get_current_context()
    opts = ctx.obj or {}
    text = json.dumps(payload, indent=2, sort_keys=True, default=_default)
    if opts.get("out"):
        with open(opts["out"], "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if opts.get("json"):
        click.echo(text)
    else:
        render(payload)
    ctx.exit(exit_code)


def render(payload):
    style = "green" if payload["status"] == "success" else "red"
    console.print(f"[bold {style}]{payload['status']}[/]: {payload['message']}")
    data = payload.get("data") or {}
    checks = data.get("checks") if isinstance(data, dict) else None
    if checks:
        table = Table(show_lines=False)
        table.add_column("check")
        table.add_column("result")
        table.add_column("deviation", justify="right")
        table.add_column("kind")
        for c in checks:
            mark = "[green]PASS[/]" if c["passed"] else ("[red]FAIL[/]" if c["gate"] else "[yellow]DIFFERS[/]")
            table.add_row(c["name"], mark, f"{c['deviation']:.3g}", "gate" if c["gate"] else "report")
        console.print(table)
        rest = {k: v for k, v in data.items() if k != "checks"}
        if rest:
            console.print_json(json.dumps(rest, default=_default))
    elif data:
        console.print_json(json.dumps(data, default=_default))


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def handle_errors(fn):
    """Map exceptions onto the envelope and the exit codes 2 (bad input) and 3 (numeric)."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValidationError as e:
            emit(envelope("error", f"Validation error: {e.message}"), EXIT_MALFORMED)
        except json.JSONDecodeError as e:
            emit(envelope("error", f"Malformed JSON: {e}"), EXIT_MALFORMED)
        except (ArithmeticError, np.linalg.LinAlgError) as e:
            logger.debug("numeric failure", exc_info=True)
            emit(envelope("error", f"Numeric failure: {e}"), EXIT_NUMERIC)
        except (ValueError, OSError, KeyError) as e:
            emit(envelope("error", f"Invalid input: {e}"), EXIT_MALFORMED)
    return wrapper


def report_exit(report):
    return EXIT_OK if report.passed else EXIT_FAILED
