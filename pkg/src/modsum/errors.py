"""Exception types raised by the modsum package."""


class ModsumError(Exception):
    """Base class for all package errors."""


class InvalidModulusError(ModsumError, ValueError):
    """The modulus is not a positive integer."""


class InvalidParameterError(ModsumError, ValueError):
    """A parameter is outside its documented domain."""


class WeakPrimeError(ModsumError, ValueError):
    """The hash prime is composite or too small for the modulus."""


class GuardExceededError(ModsumError, ValueError):
    """A brute-force oracle was asked for more work than its guard allows."""


class DistinctWeightsError(ModsumError, ValueError):
    """Edge weights for the path solver are not pairwise distinct."""


class InvalidEdgeError(ModsumError, ValueError):
    """An edge references a vertex outside [0, n) or is a self-loop."""


class InstanceParseError(ModsumError, ValueError):
    """An instance or graph file is malformed.

    Carries the 1-based line and column of the offending token.
    """

    def __init__(self, message, line, column):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        return "line %d, column %d: %s" % (self.line, self.column, self.args[0])
