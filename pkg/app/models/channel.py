from dataclasses import dataclass

from app.exceptions import KrausIndexError


def check_kraus_index(k):
    if not isinstance(k, int) or not 1 <= k <= 6:
        raise KrausIndexError(f"Kraus index must be an integer in 1..6, got {k!r}")
    return k


@dataclass(frozen=True)
class ChannelReport:
    label: str
    trace_preserving: bool
    hermiticity_preserving: bool
    min_choi_eig: float
    completely_positive: bool
    boundary: bool

    def to_dict(self):
        return {
            "k": self.label,
            "trace_preserving": self.trace_preserving,
            "hermiticity_preserving": self.hermiticity_preserving,
            "min_choi_eig": self.min_choi_eig,
            "completely_positive": self.completely_positive,
            "boundary": self.boundary,
        }
