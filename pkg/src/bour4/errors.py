"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain on which a quantity is defined."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature exhausted its subdivision budget.

    Usually signals an integrand singularity inside the integration interval.
    """


class StiffnessError(RuntimeError):
    """The adaptive ODE integrator collapsed its step below the floor."""


class ParseError(ValueError):
    """Expression syntax error, with byte offset and the expected-token set."""

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.expected = frozenset(expected)


class DegenerateFrameError(RuntimeError):
    """A frame denominator vanished; no orthonormal frame at this point."""


class BranchDomainError(ValueError):
    """The branch sign condition fails somewhere on the requested domain."""


class ConstraintError(ValueError):
    """Supplied profile functions violate the branch constraint equation."""
