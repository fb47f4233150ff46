"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: validation and parse problems
exit 1, size-cap refusals exit 2, and internal invariant violations (which
indicate a bug, never bad input) exit 3.
"""


class LensGridError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(LensGridError):
    """Invalid diagram, parameters, or input data."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ParseError(ValidationError):
    """Malformed grid file; carries the offending line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(["line %d: %s" % (line, message)])


class KnotRequiredError(ValidationError):
    """A knots-only operation was handed a multi-component link diagram."""

    def __init__(self, component_count):
        self.component_count = component_count
        super().__init__(
            ["diagram describes a link with %d components; "
             "this operation is defined for knots only" % component_count])


class SizeCapError(LensGridError):
    """Requested computation exceeds the configured size cap."""


class InternalInvariantError(LensGridError):
    """A mathematical invariant failed; indicates a bug in this package."""
