"""Exception hierarchy.

Errors deriving from :class:`ConsistencyError` mean some internal
computation produced data that contradicts a mathematical invariant;
the CLI maps them to exit code 3.
"""


class G2QuatError(Exception):
    pass


class ConsistencyError(G2QuatError):
    pass


class NonRational(ConsistencyError):
    """A cyclotomic number expected to be rational is not Galois-fixed."""


class NonIntegral(ConsistencyError):
    """A rational expected to be an integer has a nontrivial denominator."""


class OrderMismatch(ConsistencyError):
    """Numerator jet vanishes to lower order than the denominator jet."""


class TruncationTooShort(ConsistencyError):
    """A jet was truncated before its first nonzero coefficient."""


class DeformationDegenerate(ConsistencyError):
    """Every tried deformation direction left the Weyl denominator zero."""


class BoundExceeded(G2QuatError):
    """Requested representation is larger than the configured size cap."""


class BadOrderData(ConsistencyError):
    """The integral octonion multiplication table does not give 240 units."""


class GroupSizeUnexpected(ConsistencyError):
    """The automorphism search did not return 12096 elements."""


class TorusRecoveryFailed(ConsistencyError):
    """No torus parameter reproduces a class's eigenvalue multiset."""


class FixtureMissing(G2QuatError):
    pass


class FixtureMalformed(G2QuatError):
    pass
