from dataclasses import dataclass, field

from app.models.generator import GeneratorIndex


@dataclass(frozen=True)
class FactorTerm:
    g: GeneratorIndex
    coeff: float

    def to_dict(self):
        return {"i": self.g.i, "j": self.g.j, "coeff": self.coeff}


@dataclass(frozen=True)
class Factor:
    """
    exp(sum coeff * G), or exp(I * sum coeff * G) when `imaginary` is set.
    """
    terms: tuple
    imaginary: bool = False

    @classmethod
    def of(cls, coefficients, imaginary=False):
        """{GeneratorIndex: coeff} or [(GeneratorIndex, coeff)] -> Factor"""
        items = coefficients.items() if isinstance(coefficients, dict) else coefficients
        return cls(tuple(FactorTerm(g, float(c)) for g, c in items), imaginary)

    def to_dict(self):
        out = {"terms": [t.to_dict() for t in self.terms]}
        if self.imaginary:
            out["imaginary"] = True
        return out

    def label(self):
        body = " + ".join(f"{t.coeff:.6g}*{t.g.label}" for t in self.terms).replace("+ -", "- ")
        return f"exp(I({body}))" if self.imaginary else f"exp({body})"


@dataclass(frozen=True)
class Factorization:
    """
    e^{i phase} times the ordered product of the factors; the last factor acts first.
    """
    factors: tuple
    phase: float = 0.0
    name: str = field(default="", compare=False)

    def to_dict(self):
        out = {"factors": [f.to_dict() for f in self.factors], "phase": self.phase}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_dict(cls, data):
        factors = []
        for factor in data["factors"]:
            terms = [(GeneratorIndex(t["i"], t["j"]), t["coeff"]) for t in factor["terms"]]
            factors.append(Factor.of(terms, factor.get("imaginary", False)))
        return cls(tuple(factors), float(data.get("phase", 0.0)), data.get("name", ""))

    def label(self):
        head = f"e^(i {self.phase:.6g}) " if self.phase else ""
        return head + " ".join(f.label() for f in self.factors)
