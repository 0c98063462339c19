"""Exception types raised by validation and construction routines.

Every validation error carries a ``witness`` attribute naming the concrete
elements that break the claimed identity, so failures are reproducible.
"""


class GalexError(Exception):
    """Base class for all library errors."""


class ValidationError(GalexError, ValueError):
    """A declared algebraic structure failed validation."""

    witness = None


class NonAssociative(ValidationError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class NoIdentity(ValidationError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class NoInverse(ValidationError):
    def __init__(self, a):
        self.witness = a
        super().__init__(f"element {a} has no two-sided inverse")


class NotAutomorphism(ValidationError):
    def __init__(self, g, detail=""):
        self.witness = g
        super().__init__(f"action of group element {g} is not an automorphism{detail}")


class ActionNotCompatible(ValidationError):
    def __init__(self, g, h, x=None):
        self.witness = (g, h, x)
        super().__init__(
            f"right action incompatible with multiplication at g={g}, h={h}"
            + (f", module element {x}" if x is not None else "")
        )


class NotHomomorphism(ValidationError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"map is not a homomorphism at the pair ({a}, {b})")


class NotCentral(ValidationError):
    def __init__(self, g, h):
        self.witness = (g, h)
        super().__init__(f"image element {g} does not commute with {h}")


class NotMultilinear(ValidationError):
    def __init__(self, detail):
        super().__init__(f"table does not define a multilinear map: {detail}")


class NotGInvariant(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"multilinear map is not invariant under the diagonal action: {witness}")


class ArityMismatch(ValidationError):
    def __init__(self, expected, got):
        self.witness = (expected, got)
        super().__init__(f"expected arity {expected}, got {got}")


class MissingLambda(ValidationError):
    def __init__(self):
        super().__init__("this construction requires a coefficient homomorphism")


class ComponentMismatch(ValidationError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"brackets live in different components: {a} vs {b}")


class UnsupportedKind(ValidationError):
    def __init__(self, kind):
        self.witness = kind
        super().__init__(f"unsupported chain kind {kind!r}")


class ShapeMismatch(ValidationError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"cochains have different shapes: {a} vs {b}")


class BasisTooLarge(GalexError):
    def __init__(self, size, cap):
        self.witness = (size, cap)
        super().__init__(f"basis of size {size} exceeds the configured cap {cap}")


class XSetAssumptionFailed(ValidationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(
            "the self-action regime needs the carrier to act on itself; "
            f"the action axiom fails at {witness}"
        )


class ParseError(GalexError, ValueError):
    def __init__(self, path, detail, line=None):
        self.line = line
        loc = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{loc}: {detail}")
