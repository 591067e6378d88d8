import click
import numpy as np
from jsonschema import validate

from app.commands.common import emit, envelope, handle_errors, load_json
from app.models.matrix import matrix_to_dict
from app.models.schmidt_schema import schmidt_params_schema
from app.models.state import SchmidtParams
from app.services.iso.states import (
    density_from_state, entanglement_entropy, entropy_standard, purity_moments, state_from_schmidt, state_vector,
)
from app.services.iso.translation import even_to_matrix


@click.command("schmidt")
@click.option("--params", "params_file", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--base", type=click.Choice(["e", "2"]), default=None, help="Entropy logarithm base.")
@click.pass_context
@handle_errors
def schmidt_command(ctx, params_file, base):
    """State, density operator, purity moments and entropies from Schmidt parameters."""
    data = load_json(params_file)
    validate(instance=data, schema=schmidt_params_schema)
    params = SchmidtParams.from_dict(data)

    state = state_from_schmidt(params)
    rho = density_from_state(state)
    m2, m3, m4 = purity_moments(rho)
    vector = state_vector(state)
    emit(envelope("success", "Successfully built the two-qubit state", {
        "params": params.to_dict(),
        "spinor": state.spinor.to_dict(),
        "psi": state.psi.to_dict(),
        "density": rho.to_dict(),
        "density_matrix": matrix_to_dict(even_to_matrix(rho.value)),
        "state_vector": [[float(z.real), float(z.imag)] for z in np.asarray(vector)],
        "purity": {"m2": m2, "m3": m3, "m4": m4},
        "entropy": {
            "printed_formula": entanglement_entropy(params, base),
            "standard": entropy_standard(state, base),
        },
    }))
