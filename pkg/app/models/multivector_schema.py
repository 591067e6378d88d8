# Define the schema for validation
multivector_schema = {
    "type": "object",
    "properties": {
        "signature": {
            "type": "array",
            "items": {"type": "integer", "minimum": 0},
            "minItems": 2,
            "maxItems": 2,
            "description": "Metric signature [p, q]."
        },
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "blade": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 1},
                        "uniqueItems": True,
                        "description": "1-based vector indices of the blade; [] is the scalar."
                    },
                    "coeff": {
                        "type": "number",
                        "description": "Real coefficient of the blade."
                    }
                },
                "required": ["blade", "coeff"],
                "additionalProperties": False
            }
        }
    },
    "required": ["signature", "terms"],
    "additionalProperties": False
}
