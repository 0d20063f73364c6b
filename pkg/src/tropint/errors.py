"""Exception hierarchy.

Library errors derive from :class:`TropintError`.  The CLI maps
:class:`ComputationRefused` subclasses to exit code 3 and
:class:`InvalidInput` subclasses to exit code 2.
"""


class TropintError(Exception):
    pass


class InvalidInput(TropintError, ValueError):
    pass


class ComputationRefused(TropintError):
    pass


# convex core
class EmptyPolyhedron(InvalidInput):
    pass


class UnboundedDirection(TropintError):
    """The linear functional has no maximum on the polyhedron."""


class NotPointed(InvalidInput):
    pass


class Unbounded(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


# fans and strata
class ConeNotInFan(InvalidInput):
    pass


class StratumNotInFan(InvalidInput):
    pass


class FanNotCompatible(InvalidInput):
    pass


# series
class CertificateInsufficient(ComputationRefused):
    pass


# intersections
class NotIsolated(ComputationRefused):
    pass


class BoundaryStratum(ComputationRefused):
    pass


class GenericityFailure(ComputationRefused):
    def __init__(self, message, log=()):
        super().__init__(message)
        self.log = list(log)


class WellDefinednessViolation(TropintError):
    pass


# oracle
class NotFinite(ComputationRefused):
    pass


class PairingAmbiguous(ComputationRefused):
    pass


class UnrealizableValuation(InvalidInput):
    pass


class DegenerateSystem(ComputationRefused):
    pass
