import math
from dataclasses import asdict, dataclass

from app.exceptions import NormalizationError

SCHMIDT_KEYS = ("rho", "phi", "phi1", "phi2", "theta1", "theta2", "tau", "sigma")


@dataclass(frozen=True)
class SchmidtParams:
    """
    Parameters of a two-qubit pure state in Schmidt form: amplitude rho, global phase phi,
    local phases phi1, phi2, local polar angles theta1, theta2, relative phase tau and
    entanglement angle sigma.
    """
    rho: float = 1.0
    phi: float = 0.0
    phi1: float = 0.0
    phi2: float = 0.0
    theta1: float = 0.0
    theta2: float = 0.0
    tau: float = 0.0
    sigma: float = 0.0

    def __post_init__(self):
        for key in SCHMIDT_KEYS:
            value = getattr(self, key)
            if not math.isfinite(value):
                raise NormalizationError(f"Schmidt parameter {key} is not finite: {value}")
        if self.rho < 0:
            raise NormalizationError(f"Schmidt amplitude rho must be >= 0, got {self.rho}")

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**{k: float(data[k]) for k in SCHMIDT_KEYS if k in data})


# rho = 1, theta2 = pi, sigma = -pi/2, everything else 0
PRINTED_SINGLET_PARAMS = SchmidtParams(theta2=math.pi, sigma=-math.pi / 2)


@dataclass(frozen=True)
class StateIdeal:
    """psi = Psi P3^1 P3^2 together with the spinor Psi that produced it."""
    psi: object
    spinor: object = None

    def to_dict(self):
        out = {"psi": self.psi.to_dict()}
        if self.spinor is not None:
            out["spinor"] = self.spinor.to_dict()
        return out


@dataclass(frozen=True)
class DensityOperator:
    """Even, reversion-symmetric rho with <rho>_0 = 1/4."""
    value: object

    def to_dict(self):
        return self.value.to_dict()
