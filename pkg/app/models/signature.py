from dataclasses import dataclass

from app.exceptions import AlgebraError

MAX_DIMENSION = 16

@dataclass(frozen=True)
class Signature:
    """
    Metric signature of G(p,q): vectors 1..p square to +1, vectors p+1..p+q to -1.
    """
    p: int
    q: int = 0

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise AlgebraError(f"Signature entries must be integers, got ({self.p!r}, {self.q!r})")
        if self.p < 0 or self.q < 0:
            raise AlgebraError(f"Signature entries must be non-negative, got ({self.p}, {self.q})")
        if self.p + self.q > MAX_DIMENSION:
            raise AlgebraError(f"Dimension {self.p + self.q} exceeds the supported maximum {MAX_DIMENSION}")

    @property
    def dim(self):
        return self.p + self.q

    @property
    def pseudoscalar_mask(self):
        return (1 << self.dim) - 1

    def square(self, index):
        """Square of basis vector `index` (1-based)."""
        if not 1 <= index <= self.dim:
            raise AlgebraError(f"Vector index {index} outside 1..{self.dim}")
        return 1 if index <= self.p else -1

    def to_list(self):
        return [self.p, self.q]

    def __str__(self):
        return f"({self.p},{self.q})"


G3 = Signature(3, 0)
G6 = Signature(6, 0)
