"""Exception hierarchy shared by every module of the package."""


class HurwitzFamilyError(Exception):
    """Base class for all errors raised by this package."""


# permutations / Nielsen classes
class DegreeMismatch(HurwitzFamilyError, ValueError):
    pass


class DegreeTooLarge(HurwitzFamilyError, ValueError):
    pass


class OddCycleLength(HurwitzFamilyError, ValueError):
    pass


class PointNotInSupport(HurwitzFamilyError, ValueError):
    pass


class IndexOutOfRange(HurwitzFamilyError, ValueError):
    pass


class BadIndex(HurwitzFamilyError, ValueError):
    pass


# exact algebra
class DivisionByZeroPoly(HurwitzFamilyError, ZeroDivisionError):
    pass


class NonUnitInverse(HurwitzFamilyError, ZeroDivisionError):
    pass


class DimensionMismatch(HurwitzFamilyError, ValueError):
    pass


class NoSolution(HurwitzFamilyError, ArithmeticError):
    """Inconsistent linear system.

    ``certificate`` is a row vector y with y*A = 0 and y*b != 0.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class Underdetermined(HurwitzFamilyError, ArithmeticError):
    """Consistent linear system with a nontrivial kernel."""

    def __init__(self, message, particular=None, kernel=None, pivots=None):
        super().__init__(message)
        self.particular = particular
        self.kernel = kernel or []
        self.pivots = pivots or []


class ZeroPolynomial(HurwitzFamilyError, ValueError):
    pass


class BadReductionPrime(HurwitzFamilyError, ValueError):
    pass


# family pipeline
class RamificationCheckFailed(HurwitzFamilyError, AssertionError):
    pass


class NonzeroRemainder(HurwitzFamilyError, ArithmeticError):
    pass


class SingularJacobian(HurwitzFamilyError, ArithmeticError):
    def __init__(self, message, kernel=None):
        super().__init__(message)
        self.kernel = kernel or []


class PrecisionExhausted(HurwitzFamilyError, ArithmeticError):
    pass


class NonUnitLeading(HurwitzFamilyError, ArithmeticError):
    pass


class GeneratorDegenerate(HurwitzFamilyError, ArithmeticError):
    pass


class InsufficientPrecision(HurwitzFamilyError, ArithmeticError):
    pass


class IdentityFailed(HurwitzFamilyError, AssertionError):
    pass


class RamificationMismatch(HurwitzFamilyError, AssertionError):
    pass


# specialization
class ParameterAtPole(HurwitzFamilyError, ValueError):
    pass


class DegenerateFiber(HurwitzFamilyError, ValueError):
    pass


class EmptyInterval(HurwitzFamilyError, ValueError):
    def __init__(self, message, h_value=None):
        super().__init__(message)
        self.h_value = h_value


class AllPrimesBad(HurwitzFamilyError, ValueError):
    pass
