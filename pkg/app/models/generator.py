from dataclasses import dataclass

from app.exceptions import GeneratorIndexError


@dataclass(frozen=True, order=True)
class GeneratorIndex:
    """
    Label (i, j) of an so(6) generator, 0 <= i, j <= 3, not both zero.
    (i, 0) acts on the first qubit, (0, j) on the second, (i, j) couples them.
    """
    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)):
            raise GeneratorIndexError(f"Generator indices must be integers, got ({self.i!r}, {self.j!r})")
        if not (0 <= self.i <= 3 and 0 <= self.j <= 3):
            raise GeneratorIndexError(f"Generator index ({self.i},{self.j}) outside 0..3")
        if self.i == 0 and self.j == 0:
            raise GeneratorIndexError("G00 is the scalar, not a generator")

    @property
    def is_local(self):
        return self.i == 0 or self.j == 0

    @property
    def label(self):
        return f"G{self.i}{self.j}"

    @classmethod
    def parse(cls, text):
        """'G21' or '21' -> GeneratorIndex(2, 1)"""
        digits = text.strip().lstrip("G")
        if len(digits) != 2 or not digits.isdigit():
            raise GeneratorIndexError(f"Cannot parse generator label {text!r}")
        return cls(int(digits[0]), int(digits[1]))

    def __str__(self):
        return self.label


def all_generators():
    """The 15 generators in reporting order: first-qubit, second-qubit, then (i,j) row-major."""
    return (
        [GeneratorIndex(i, 0) for i in (1, 2, 3)]
        + [GeneratorIndex(0, j) for j in (1, 2, 3)]
        + [GeneratorIndex(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]
    )


@dataclass(frozen=True)
class GeneratorConvention:
    """
    Sign of the mixed generators G_ij = mixed_sign * (-1)^(delta_ij if delta_sign) * e_i f_j.
    """
    delta_sign: bool = False
    mixed_sign: int = -1

    def __post_init__(self):
        if self.mixed_sign not in (1, -1):
            raise GeneratorIndexError(f"mixed_sign must be +1 or -1, got {self.mixed_sign}")

    def sign(self, i, j):
        s = self.mixed_sign
        if self.delta_sign and i == j:
            s = -s
        return s

    @classmethod
    def candidates(cls):
        return [cls(delta_sign=d, mixed_sign=s) for d in (True, False) for s in (1, -1)]

    def to_dict(self):
        return {"delta_sign": self.delta_sign, "mixed_sign": self.mixed_sign}

    def __str__(self):
        return f"delta_sign={self.delta_sign}, mixed_sign={self.mixed_sign:+d}"
