"""Exception hierarchy for the siwkb toolkit."""


class SiwkbError(Exception):
    """Base class for all siwkb errors."""


class DomainError(SiwkbError):
    """A coordinate or integral argument lies outside its allowed domain."""


class ValidationError(SiwkbError):
    """A parameter set violates a family's validity constraints."""


class OutOfSpectrumError(SiwkbError):
    """Requested level index lies beyond the last bound state."""


class NoBoundRegionError(SiwkbError):
    """No classically allowed region exists at the requested energy."""


class AmbiguousRegionError(SiwkbError):
    """More than two turning points found; the well is not simple."""


class QuadratureError(SiwkbError):
    """Quadrature failed to converge within the node budget."""


class NoSolutionError(SiwkbError):
    """The quantization target is not attainable below the continuum edge."""


class UnsupportedFamilyError(SiwkbError):
    """Operation requires a feature (e.g. a singular endpoint) the family lacks."""


class ShiftedParameterError(SiwkbError):
    """The half-step shifted parameter set breaks a structural constraint."""


class OracleError(SiwkbError):
    """Base class for Schroedinger-solver failures."""


class BracketError(OracleError):
    """Node count never reaches the requested level inside the energy bracket."""


class TruncationError(OracleError):
    """The integration box is too small; the wavefunction has not decayed."""
