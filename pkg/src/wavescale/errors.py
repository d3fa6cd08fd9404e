"""Exception types raised across the package.

Every failure the library signals deliberately derives from WavescaleError,
so callers (and the CLI) can catch one base class and report the concrete
type name as a stable, machine-greppable reason code.
"""


class WavescaleError(Exception):
    """Base class for all errors raised by this package."""


# filter banks

class UnknownFamily(WavescaleError):
    """Requested wavelet family is not in the embedded registry."""


class NotOrthogonal(WavescaleError):
    """Operation requires an orthogonal filter bank."""


# 1D transforms

class OddLength(WavescaleError):
    """Signal length must be even."""


class TooShort(WavescaleError):
    """Signal length must be at least 2."""


class LengthMismatch(WavescaleError):
    """Approximation and detail vectors must have equal length."""


class NotDivisible(WavescaleError):
    """Length is not divisible by 2^levels."""


# 3D transforms

class OddAxisLength(WavescaleError):
    """Axis length must be even to run one analysis step."""


class ShapeMismatch(WavescaleError):
    """Band or detail shapes disagree."""


class NotPositiveShape(WavescaleError):
    """Tensor dims must all be at least 1."""


# consolidation

class MissingLayer(WavescaleError):
    """A layer index required by a grouping rule is absent."""


class ShapeInconsistent(WavescaleError):
    """Tensors matched by one rule disagree in shape or rank."""


class UnmatchedTensor(WavescaleError):
    """A tensor matched no rule and the policy forbids passthrough."""


class NotPowerOfTwoRatio(WavescaleError):
    """Source and target sizes are not related by a power of 2."""


class MixedDirection(WavescaleError):
    """Axes disagree about whether the transfer shrinks or grows."""


class ResidualShapeMismatch(WavescaleError):
    """A passthrough tensor would change shape between architectures."""


# container I/O

class DuplicateName(WavescaleError):
    """Checkpoint contains two tensors with the same name."""


class IoFailure(WavescaleError):
    """Underlying read or write failed, or the payload is unwritable."""


class BadMagic(WavescaleError):
    """File does not start with the container magic."""


class UnsupportedVersion(WavescaleError):
    """Container version is not supported."""


class TruncatedFile(WavescaleError):
    """File ends before the declared data does."""


class OverlappingSegments(WavescaleError):
    """Tensor payloads overlap or are out of order."""


class NameOrderViolation(WavescaleError):
    """Index names are not unique and sorted ascending bytewise."""


class MalformedContainer(WavescaleError):
    """Index field holds a value outside the format's contract."""


# metrics

class TargetNotReached(WavescaleError):
    """Curve never meets the target metric."""
