# Define the schema for validation
schmidt_params_schema = {
    "type": "object",
    "properties": {
        "rho": {"type": "number", "minimum": 0, "description": "Amplitude."},
        "phi": {"type": "number", "description": "Global phase."},
        "phi1": {"type": "number", "description": "First-qubit phase."},
        "phi2": {"type": "number", "description": "Second-qubit phase."},
        "theta1": {"type": "number", "description": "First-qubit polar angle."},
        "theta2": {"type": "number", "description": "Second-qubit polar angle."},
        "tau": {"type": "number", "description": "Relative phase of the Schmidt terms."},
        "sigma": {"type": "number", "description": "Entanglement angle."}
    },
    "required": ["rho", "phi", "phi1", "phi2", "theta1", "theta2", "tau", "sigma"],
    "additionalProperties": False
}
