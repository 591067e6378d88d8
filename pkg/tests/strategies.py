from hypothesis import strategies as st

from app.models.multivector import Multivector
from app.models.signature import G3

coefficients = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def multivectors(draw, sig=G3, grades=None):
    """Dense multivector of `sig`, optionally restricted to some grades."""
    masks = [m for m in range(1 << sig.dim) if grades is None or m.bit_count() in grades]
    values = draw(st.lists(coefficients, min_size=len(masks), max_size=len(masks)))
    return Multivector(sig, dict(zip(masks, values)))
