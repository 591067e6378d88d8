from functools import lru_cache
from types import MappingProxyType

from app.models.signature import Signature
from app.exceptions import AlgebraError, SignatureMismatchError


def blade_grade(mask):
    return mask.bit_count()


def blade_indices(mask):
    """Ascending 1-based vector indices of a blade mask."""
    out = []
    index = 1
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return out


def blade_from_indices(indices):
    """
    Canonical (mask, sign) of the ordered product of distinct basis vectors.

    :param indices: sequence of 1-based vector indices, no repeats
    :return: (mask, +1 or -1) where the sign counts the transpositions needed to sort
    """
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise AlgebraError(f"Blade {indices} repeats a vector")
    if any(i < 1 for i in indices):
        raise AlgebraError(f"Blade {indices} has a non-positive index")
    swaps = 0
    for a in range(len(indices)):
        for b in range(a + 1, len(indices)):
            if indices[a] > indices[b]:
                swaps += 1
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask, (-1 if swaps % 2 else 1)


@lru_cache(maxsize=None)
def blade_product(a, b, sig):
    """
    Geometric product of two canonical basis blades.

    :return: (mask, sign); sign is 0 never, metric contractions fold into the sign
    """
    if (a | b) >> sig.dim:
        raise AlgebraError(f"Blades {a:#b} and {b:#b} are outside G{sig}")
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += (shifted & b).bit_count()
        shifted >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    # vectors p+1..p+q square to -1
    negative = common >> sig.p
    if negative.bit_count() & 1:
        sign = -sign
    return a ^ b, sign


class Multivector:
    """
    Sparse real multivector of G(p,q), coefficients keyed by blade bitmask
    (bit k-1 set for vector k).
    """
    __slots__ = ("sig", "_terms")

    def __init__(self, sig, terms=None):
        if not isinstance(sig, Signature):
            raise AlgebraError(f"Expected a Signature, got {type(sig).__name__}")
        self.sig = sig
        limit = 1 << sig.dim
        clean = {}
        for mask, coeff in (terms or {}).items():
            if not 0 <= mask < limit:
                raise AlgebraError(f"Blade mask {mask} outside G{sig}")
            coeff = float(coeff)
            if coeff != 0.0:
                clean[mask] = coeff
        self._terms = dict(sorted(clean.items()))

    # constructors

    @classmethod
    def zero(cls, sig):
        return cls(sig)

    @classmethod
    def scalar(cls, sig, value):
        return cls(sig, {0: value})

    @classmethod
    def vector(cls, sig, index, coeff=1.0):
        sig.square(index)
        return cls(sig, {1 << (index - 1): coeff})

    @classmethod
    def blade(cls, sig, indices, coeff=1.0):
        mask, sign = blade_from_indices(indices)
        if indices and max(indices) > sig.dim:
            raise AlgebraError(f"Blade {list(indices)} outside G{sig}")
        return cls(sig, {mask: sign * coeff})

    @classmethod
    def pseudoscalar(cls, sig):
        return cls(sig, {sig.pseudoscalar_mask: 1.0})

    # access

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __getitem__(self, mask):
        return self._terms.get(mask, 0.0)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def grades(self):
        return sorted({blade_grade(m) for m in self._terms})

    @property
    def is_even(self):
        return all(blade_grade(m) % 2 == 0 for m in self._terms)

    @property
    def scalar_part(self):
        return self._terms.get(0, 0.0)

    def grade(self, r):
        return Multivector(self.sig, {m: c for m, c in self._terms.items() if blade_grade(m) == r})

    def even(self):
        return Multivector(self.sig, {m: c for m, c in self._terms.items() if blade_grade(m) % 2 == 0})

    def norm1(self):
        return sum(abs(c) for c in self._terms.values())

    def max_abs(self):
        return max((abs(c) for c in self._terms.values()), default=0.0)

    # linear structure

    def _check(self, other):
        if self.sig != other.sig:
            raise SignatureMismatchError(self.sig, other.sig)

    def _coerce(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (int, float)):
            return Multivector.scalar(self.sig, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0.0) + c
        return Multivector(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(self.sig, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor):
        return Multivector(self.sig, {m: factor * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        if isinstance(other, Multivector):
            from app.services.algebra.products import geometric_product
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(1.0 / other)
        return NotImplemented

    def __xor__(self, other):
        from app.services.algebra.products import outer_product
        return outer_product(self, other)

    def __or__(self, other):
        from app.services.algebra.products import inner_product
        return inner_product(self, other)

    def __invert__(self):
        from app.services.algebra.products import reverse
        return reverse(self)

    # comparison

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and self._terms == other._terms

    __hash__ = None

    def max_abs_diff(self, other):
        self._check(other)
        return (self - other).max_abs()

    def isclose(self, other, tol=1e-12):
        if isinstance(other, (int, float)):
            other = Multivector.scalar(self.sig, other)
        return self.max_abs_diff(other) <= tol

    # serialization

    def to_dict(self):
        return {
            "signature": self.sig.to_list(),
            "terms": [{"blade": blade_indices(m), "coeff": c} for m, c in self._terms.items()],
        }

    @classmethod
    def from_dict(cls, data):
        sig = Signature(*data["signature"])
        out = {}
        for term in data["terms"]:
            blade = term["blade"]
            if blade and max(blade) > sig.dim:
                raise AlgebraError(f"Blade {blade} outside G{sig}")
            mask, sign = blade_from_indices(blade)
            out[mask] = out.get(mask, 0.0) + sign * term["coeff"]
        return cls(sig, out)

    def format(self, names=None, precision=6):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._terms.items():
            if m == 0:
                parts.append(f"{c:.{precision}g}")
                continue
            idx = blade_indices(m)
            label = "".join(names[i - 1] if names else f"e{i}" for i in idx)
            parts.append(f"{c:.{precision}g}*{label}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Multivector(G{self.sig}: {self.format()})"
