import numpy as np

from app.exceptions import OracleError

MAX_SIZE = 16

def as_matrix(data):
    """
    Coerce to a complex128 2-D array and enforce the oracle's size limit.
    """
    m = np.asarray(data, dtype=np.complex128)
    if m.ndim != 2:
        raise OracleError(f"Expected a 2-D matrix, got shape {m.shape}")
    if max(m.shape) > MAX_SIZE:
        raise OracleError(f"Matrix of shape {m.shape} exceeds {MAX_SIZE}x{MAX_SIZE}")
    return m

def matrix_to_dict(m):
    m = as_matrix(m)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }

def matrix_from_dict(data):
    rows, cols = data["rows"], data["cols"]
    entries = data["data"]
    if len(entries) != rows or any(len(row) != cols for row in entries):
        raise OracleError(f"Matrix data does not match declared shape {rows}x{cols}")
    return as_matrix([[complex(re, im) for re, im in row] for row in entries])
