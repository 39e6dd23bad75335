"""Exception types shared across the toolkit.

Every error the package raises deliberately is a subclass of
ToolkitError, so callers can catch one base class.  The names track the
failure vocabulary used throughout the docs: invalid user input is
distinct from a violated internal guarantee (PostconditionViolation),
which always indicates either a bug or a genuine counterexample to a
property this toolkit certifies.
"""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidField(ToolkitError):
    """Field description is unusable: p not prime, modulus not monic irreducible."""


class FieldMismatch(ToolkitError):
    """Operands belong to different fields and no coercion is defined."""


class DivisionByZero(ToolkitError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class NotASubfield(ToolkitError):
    """The claimed subfield relation does not hold for these towers."""


class DegreeCap(ToolkitError):
    """Requested extension exceeds the configured degree or characteristic cap."""


class UnknownLabel(ToolkitError):
    """A row/column/element label is not present in the object."""


class LabelCollision(ToolkitError):
    """A label occurs twice, or a fresh label clashes with an existing one."""


class InvalidMinorSpec(ToolkitError):
    """Contract and delete sets overlap or leave the ground set."""


class GroundSetMismatch(ToolkitError):
    """Two matroids that must share (or nest) ground sets do not."""


class InvalidArgs(ToolkitError):
    """Arguments are structurally invalid for the requested operation."""


class NotFragile(ToolkitError):
    """The required fragility precondition fails: zero or several partitions."""


class PostconditionViolation(ToolkitError):
    """A verified-by-construction guarantee failed its own re-check."""


class CapExceeded(ToolkitError):
    """Instance is larger than the documented exhaustive-enumeration cap."""


class MalformedJson(ToolkitError):
    """Input text is not valid JSON."""


class SchemaViolation(ToolkitError):
    """JSON parsed but does not match the instance schema (path in message)."""


class Exhausted(ToolkitError):
    """Rejection sampling hit the attempt cap without an accepted instance."""
