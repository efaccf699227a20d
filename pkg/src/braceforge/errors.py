"""Exception hierarchy shared by all braceforge modules."""


class BraceforgeError(Exception):
    """Base class for every error raised by this package."""


class GroupTableError(BraceforgeError, ValueError):
    """A candidate Cayley table violates a group axiom."""


class NotLatinSquareError(GroupTableError):
    pass


class NoIdentityError(GroupTableError):
    pass


class NoInverseError(GroupTableError):
    pass


class NotAssociativeError(GroupTableError):
    pass


class BadSpecError(BraceforgeError, ValueError):
    """Unparseable or unknown group spec string."""


class BadMetacyclicParamsError(BadSpecError):
    """Metacyclic parameters (p, q, g) fail the order-q condition."""


class SizeLimitExceededError(BraceforgeError):
    """A subgroup closure grew past its configured bound."""


class NotRegularError(BraceforgeError, ValueError):
    pass


class NotGStableError(BraceforgeError, ValueError):
    pass


class UnsupportedOrderError(BraceforgeError):
    """No complete catalog of isomorphism types is available for this order."""

    def __init__(self, order: int, message: str | None = None):
        self.order = order
        super().__init__(
            message
            or f"order {order} is outside the built-in catalog; supply the full "
            f"list of Cayley tables for every isomorphism type of order {order}"
        )


class OrderTooLargeForOracleError(BraceforgeError):
    pass


class BraceTableError(BraceforgeError, ValueError):
    """A candidate pair of tables is not a skew brace."""


class DotNotGroupError(BraceTableError):
    pass


class CircleNotGroupError(BraceTableError):
    pass


class IdentityMismatchError(BraceTableError):
    pass


class BraceRelationError(BraceTableError):
    """Carries the first triple (x, y, z) violating the compatibility relation."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        super().__init__(f"brace relation fails at x={triple[0]}, y={triple[1]}, z={triple[2]}")


class IdentNotIsomorphismError(BraceforgeError, ValueError):
    pass


class PhiNotCircleAutomorphismError(BraceforgeError, ValueError):
    pass


class NotAbelianFpfError(BraceforgeError, ValueError):
    pass


class BaseGroupMismatchError(BraceforgeError, ValueError):
    pass


class BadCaseParamsError(BraceforgeError, ValueError):
    pass
