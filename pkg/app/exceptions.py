class AlgebraError(ValueError):
    pass


class SignatureMismatchError(AlgebraError):
    def __init__(self, left, right):
        super().__init__(f"Signature mismatch: G{left} vs G{right}")
        self.left = left
        self.right = right


class GradeError(AlgebraError):
    pass


class RotorError(AlgebraError):
    pass


class OracleError(ValueError):
    pass


class GeneratorIndexError(ValueError):
    pass


class BipartitionError(ValueError):
    pass


class KrausIndexError(ValueError):
    pass


class NormalizationError(ValueError):
    pass


class ConvergenceError(ArithmeticError):
    pass
