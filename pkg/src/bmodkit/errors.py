class BModError(Exception):
    """Base class for every error raised by bmodkit."""


class MalformedTable(BModError):
    pass


class LawViolation(BModError):
    """A join table breaks one of the B-module laws at the given witnesses."""

    law = "law"

    def __init__(self, *witness):
        self.witness = witness
        super().__init__(f"{self.law} fails at {witness}")


class NotIdempotent(LawViolation):
    law = "idempotence x+x=x"


class NotCommutative(LawViolation):
    law = "commutativity x+y=y+x"


class NotAssociative(LawViolation):
    law = "associativity (x+y)+z=x+(y+z)"


class ZeroNotNeutral(LawViolation):
    law = "neutrality 0+x=x"


class NotAnInvolution(BModError):
    pass


class NotAMorphism(BModError):
    pass


class LimitExceeded(BModError):
    """An enumeration visited more states than the configured bound."""


class DomainMismatch(BModError):
    pass


class ElementInSubmodule(BModError):
    pass


class PreconditionViolated(BModError):
    pass


class NotKernel(BModError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotCokernel(BModError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ConditionAFailed(BModError):
    def __init__(self, v, first, second):
        self.v, self.first, self.second = v, first, second
        super().__init__(f"two extensions of {v} act differently on the cokernel")


class ClaimFailed(BModError):
    """A check from a worked example did not reproduce."""
