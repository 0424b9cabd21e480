"""Exception hierarchy. Every library-raised error derives from SqueezelabError."""


class SqueezelabError(Exception):
    """Base class for all squeezelab errors."""


class NonPositiveFrequency(SqueezelabError, ValueError):
    """A frequency or decay rate was zero, negative, or not finite."""


class NegativeCoupling(SqueezelabError, ValueError):
    """A coupling strength (omega_0 or alpha) was negative or not finite."""


class UnstableSystem(SqueezelabError):
    """Steady-state quantities requested at or beyond the instability threshold."""


class SingularSystem(SqueezelabError):
    """The moment-equation linear solve failed (drift determinant near zero)."""


class SingularAtFrequency(SqueezelabError):
    """Frequency-domain response matrix is singular at the requested frequency."""


class EmptyRange(SqueezelabError, ValueError):
    """A sweep was requested over an empty grid."""


class StepTooLarge(SqueezelabError, ValueError):
    """Integration step too coarse for the fastest rotation in the drift."""


class GridTooFine(SqueezelabError, ValueError):
    """Requested spectral resolution exceeds what the sampling window supports."""


class TruncationTooSmall(SqueezelabError, ValueError):
    """Photon-number truncation below the minimum usable dimension."""


class TruncationLeak(SqueezelabError):
    """Steady-state population leaking into the top Fock levels; increase n_max."""


class DegenerateSteadyState(SqueezelabError):
    """More than one zero eigenvalue of the Liouvillian within tolerance."""


class NoConvergence(SqueezelabError):
    """Moments did not converge within the supplied truncation ladder."""


class ConfigError(SqueezelabError, ValueError):
    """Malformed run configuration (CLI flags or config file)."""
