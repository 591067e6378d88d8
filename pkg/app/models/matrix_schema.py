# Define the schema for validation
complex_entry = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
    "description": "[real, imaginary]"
}

matrix_schema = {
    "type": "object",
    "properties": {
        "rows": {"type": "integer", "minimum": 1, "maximum": 16},
        "cols": {"type": "integer", "minimum": 1, "maximum": 16},
        "data": {
            "type": "array",
            "items": {"type": "array", "items": complex_entry},
            "description": "Row-major entries."
        }
    },
    "required": ["rows", "cols", "data"],
    "additionalProperties": False
}
