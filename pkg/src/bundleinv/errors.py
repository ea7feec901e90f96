"""Exception types raised by the library."""


class BundleInvError(Exception):
    """Base class for all library errors."""


class PolynomialSyntaxError(BundleInvError, ValueError):
    pass


class VariableOutOfRange(BundleInvError, ValueError):
    pass


class UnsupportedRestriction(BundleInvError):
    """The extension class does not vanish on the zero section."""


class WindowUnstable(BundleInvError):
    """Doubling the z-exponent window changed a computed dimension."""


class BoxUnstable(BundleInvError):
    """Enlarging the pole/degree box changed the computed width."""


class UndecidedFiniteness(BundleInvError):
    """Neither the stabilization nor the divergence criterion fired."""


class InternalMismatch(BundleInvError):
    """Closed-form value and cohomology computation disagree."""


class NotSpanned(BundleInvError, ValueError):
    pass
