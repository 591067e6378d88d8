from dataclasses import dataclass, field

from app.exceptions import BipartitionError

# vertices of the generator graph: 1..3 are e1..e3, 4..6 are f1..f3
VERTEX_NAMES = {1: "e1", 2: "e2", 3: "e3", 4: "f1", 5: "f2", 6: "f3"}
ALL_VERTICES = frozenset(VERTEX_NAMES)


def parse_vertex(name):
    for k, v in VERTEX_NAMES.items():
        if v == name:
            return k
    raise BipartitionError(f"Unknown vertex {name!r}, expected one of {sorted(VERTEX_NAMES.values())}")


@dataclass(frozen=True)
class Bipartition:
    """
    Split of the six vertices into two non-empty sides; `side` is the one holding e1.
    """
    side: frozenset

    def __post_init__(self):
        side = frozenset(self.side)
        if not side <= ALL_VERTICES:
            raise BipartitionError(f"Bipartition side {sorted(side)} has vertices outside 1..6")
        if not side or side == ALL_VERTICES:
            raise BipartitionError("Both sides of a bipartition must be non-empty")
        if 1 not in side:
            side = ALL_VERTICES - side
        object.__setattr__(self, "side", side)

    @property
    def other(self):
        return ALL_VERTICES - self.side

    @classmethod
    def from_names(cls, names):
        return cls(frozenset(parse_vertex(n) for n in names))

    def crosses(self, edge):
        a, b = edge
        return (a in self.side) != (b in self.side)

    def label(self):
        left = ",".join(VERTEX_NAMES[v] for v in sorted(self.side))
        right = ",".join(VERTEX_NAMES[v] for v in sorted(self.other))
        return f"{{{left}}}|{{{right}}}"

    def to_dict(self):
        return {
            "side": [VERTEX_NAMES[v] for v in sorted(self.side)],
            "other": [VERTEX_NAMES[v] for v in sorted(self.other)],
        }


@dataclass(frozen=True)
class CartanSplit:
    """so(6) = g + m with [g,g] in g, [g,m] in m, [m,m] in g."""
    bipartition: Bipartition
    g: tuple
    m: tuple
    deviation: float = 0.0

    def to_dict(self):
        return {
            "bipartition": self.bipartition.to_dict(),
            "g": [x.label for x in self.g],
            "m": [x.label for x in self.m],
            "dim_g": len(self.g),
            "dim_m": len(self.m),
            "deviation": self.deviation,
        }


@dataclass(frozen=True)
class CartanSubalgebra:
    """Maximal commuting subset of m; its edges form a maximum matching."""
    split: CartanSplit
    generators: tuple
    notes: dict = field(default_factory=dict, compare=False, hash=False)

    def to_dict(self):
        return {"generators": [x.label for x in self.generators], **self.notes}
