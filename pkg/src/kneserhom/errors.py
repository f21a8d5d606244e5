"""Exception types shared across the package.

The CLI maps :class:`ResourceLimit` subclasses to exit code 3 and
:class:`BadParams` to exit code 2.
"""


class KneserHomError(Exception):
    pass


class BadParams(KneserHomError, ValueError):
    pass


class ResourceLimit(KneserHomError):
    pass


class CapExceeded(ResourceLimit):
    pass


class SizeLimit(ResourceLimit):
    pass


class BudgetExhausted(ResourceLimit):
    """Search stopped after its node budget; says nothing about existence."""


class PaletteTooSmall(KneserHomError):
    pass


class NotReduced(KneserHomError, ValueError):
    pass


class CertificateInvalid(KneserHomError):
    pass


class NoHomomorphism(KneserHomError):
    pass


class ShortOddCycle(KneserHomError):
    def __init__(self, length, k):
        super().__init__(
            f"odd cycle of length {length} has no homomorphism to C_{2 * k + 1}"
        )
        self.length = length
        self.k = k


class DegreeTooHigh(KneserHomError):
    pass


class Infeasible(KneserHomError):
    pass


class NotFound(KneserHomError):
    pass
