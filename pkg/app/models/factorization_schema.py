# Define the schema for validation
factor_term_schema = {
    "type": "object",
    "properties": {
        "i": {"type": "integer", "minimum": 0, "maximum": 3},
        "j": {"type": "integer", "minimum": 0, "maximum": 3},
        "coeff": {"type": "number"}
    },
    "required": ["i", "j", "coeff"],
    "additionalProperties": False
}

factorization_schema = {
    "type": "object",
    "properties": {
        "name": {"type": "string", "maxLength": 100},
        "phase": {"type": "number", "description": "Global phase angle."},
        "factors": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "terms": {"type": "array", "items": factor_term_schema, "minItems": 1},
                    "imaginary": {
                        "type": "boolean",
                        "description": "Multiply the exponent by the pseudoscalar."
                    }
                },
                "required": ["terms"],
                "additionalProperties": False
            }
        }
    },
    "required": ["factors", "phase"],
    "additionalProperties": False
}
