"""The G2 character and cocharacter lattices, roots, coroots and Weyl group.

Weights are written ``a*e1 + b*e2`` where ``2*e1`` and ``2*e2`` are the
roots of the short and long SU(2) factors of the maximal compact
subgroup.  The character lattice is ``{(a, b) : a + b even}``.  Coweights
are written ``c*d1 + d*d2`` in the basis dual to ``(2*e1, 2*e2)``, so that

    <a*e1 + b*e2, c*d1 + d*d2> = (a*c + b*d) / 2,

and the cocharacter lattice is ``{(c, d) : c + d even}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, slots=True, order=True)
class Weight:
    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError(f"weight coordinates must be int, got {self.a!r}, {self.b!r}")
        if (self.a + self.b) % 2:
            raise ValueError(f"({self.a}, {self.b}) is not in the character lattice: a + b must be even")

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> Weight:
        return Weight(-self.a, -self.b)

    def __mul__(self, n: int) -> Weight:
        return Weight(n * self.a, n * self.b)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.a
        yield self.b

    def simple_root_coords(self) -> tuple[int, int]:
        """Coefficients ``(n1, n2)`` with ``self = n1*alpha1 + n2*alpha2``."""
        return (self.a + 3 * self.b) // 2, (self.a + self.b) // 2

    def fundamental_coords(self) -> tuple[int, int]:
        """Coefficients ``(m1, m2)`` with ``self = m1*lambda1 + m2*lambda2``."""
        return pairing(self, ALPHA1_CO), pairing(self, ALPHA2_CO)

    @classmethod
    def from_simple_roots(cls, n1: int, n2: int) -> Weight:
        return n1 * ALPHA1 + n2 * ALPHA2

    @classmethod
    def from_fundamental(cls, m1: int, m2: int) -> Weight:
        return m1 * LAMBDA1 + m2 * LAMBDA2


@dataclass(frozen=True, slots=True, order=True)
class Coweight:
    c: int
    d: int

    def __post_init__(self):
        if (self.c + self.d) % 2:
            raise ValueError(f"({self.c}, {self.d}) is not in the cocharacter lattice: c + d must be even")

    def __add__(self, other: Coweight) -> Coweight:
        return Coweight(self.c + other.c, self.d + other.d)

    def __mul__(self, n: int) -> Coweight:
        return Coweight(n * self.c, n * self.d)

    __rmul__ = __mul__


def pairing(w: Weight, c: Coweight) -> int:
    num = w.a * c.c + w.b * c.d
    # a+b and c+d even force ac+bd even
    assert num % 2 == 0
    return num // 2


def inner(u: Weight, v: Weight) -> Fraction:
    """Weyl-invariant inner product, normalized so short roots have length^2 2."""
    return Fraction(u.a * v.a + 3 * u.b * v.b, 2)


E1x2 = Weight(2, 0)
E2x2 = Weight(0, 2)
ALPHA1 = Weight(-1, 1)
ALPHA2 = Weight(3, -1)
BETA = Weight(3, 1)
LAMBDA1 = Weight(1, 1)
LAMBDA2 = BETA
RHO_G = Weight(4, 2)
RHO_K = Weight(1, 1)
RHO_H = Weight(1, 1)
ZERO = Weight(0, 0)

SHORT_POSITIVE = (ALPHA1, Weight(2, 0), Weight(1, 1))
LONG_POSITIVE = (ALPHA2, Weight(0, 2), Weight(3, 1))
POSITIVE_ROOTS = SHORT_POSITIVE + LONG_POSITIVE
SHORT_ROOTS = SHORT_POSITIVE + tuple(-r for r in SHORT_POSITIVE)
ROOTS = POSITIVE_ROOTS + tuple(-r for r in POSITIVE_ROOTS)

DELTA1x2 = Coweight(2, 0)
DELTA2x2 = Coweight(0, 2)
ALPHA1_CO = Coweight(-1, 3)
ALPHA2_CO = Coweight(1, -1)
LAMBDA1_CO = Coweight(1, 3)
LAMBDA2_CO = Coweight(1, 1)
RHO_CO = LAMBDA1_CO + LAMBDA2_CO


def coroot(alpha: Weight) -> Coweight:
    """``2*alpha/(alpha, alpha)`` expressed in the dual basis."""
    # <mu, alpha^vee> = 2 (mu, alpha)/(alpha, alpha) = (mu.a*alpha.a + 3 mu.b*alpha.b)/(alpha,alpha)
    n = inner(alpha, alpha)
    c, d = Fraction(2 * alpha.a) / n, Fraction(6 * alpha.b) / n
    assert c.denominator == 1 and d.denominator == 1
    return Coweight(int(c), int(d))


POSITIVE_COROOTS = tuple(coroot(r) for r in POSITIVE_ROOTS)


def reflect(w: Weight, alpha: Weight) -> Weight:
    return w - pairing(w, coroot(alpha)) * alpha


@dataclass(frozen=True, slots=True)
class WeylElement:
    """Element of the Weyl group, stored as twice its matrix on (e1, e2)-coordinates.

    The matrices of simple reflections have half-integer entries in this
    basis, so the doubled matrix is what stays integral.
    """

    index: int
    matrix2: tuple[tuple[int, int], tuple[int, int]]

    @property
    def matrix(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return tuple(tuple(Fraction(x, 2) for x in row) for row in self.matrix2)

    @property
    def sign(self) -> int:
        (p, q), (r, s) = self.matrix2
        det4 = p * s - q * r
        assert det4 in (4, -4)
        return det4 // 4

    def __call__(self, w: Weight) -> Weight:
        return weyl_act(self, w)

    def __matmul__(self, other: WeylElement) -> WeylElement:
        return _element_by_matrix(_mul2(self.matrix2, other.matrix2))

    def inverse(self) -> WeylElement:
        for g in WEYL_GROUP:
            if _mul2(g.matrix2, self.matrix2) == _ID2:
                return g
        raise AssertionError("Weyl group is not closed under inverses")

    def act_coweight(self, c: Coweight) -> Coweight:
        """Contragredient action, so that <w(mu), w(x)> = <mu, x>."""
        # inverse-transpose of W; for these orthogonal maps that is 4 * adj(M2)^T / det(M2)
        (p, q), (r, s) = self.matrix2
        det4 = p * s - q * r
        x = (s * c.c - r * c.d) * 2
        y = (-q * c.c + p * c.d) * 2
        assert x % det4 == 0 and y % det4 == 0
        return Coweight(x // det4, y // det4)


_ID2 = ((2, 0), (0, 2))


def _mul2(m, n):
    """Product of two doubled matrices, returned doubled."""
    out = []
    for i in range(2):
        row = []
        for j in range(2):
            v = m[i][0] * n[0][j] + m[i][1] * n[1][j]
            assert v % 2 == 0
            row.append(v // 2)
        out.append(tuple(row))
    return tuple(out)


def _reflection_matrix2(alpha: Weight):
    cols = [reflect(Weight(2, 0), alpha), reflect(Weight(0, 2), alpha)]
    # columns are images of 2*e1 and 2*e2, i.e. doubled images of e1, e2
    return ((cols[0].a, cols[1].a), (cols[0].b, cols[1].b))


def _enumerate_weyl_group() -> tuple[WeylElement, ...]:
    gens = [_reflection_matrix2(ALPHA1), _reflection_matrix2(ALPHA2)]
    seen = [_ID2]
    frontier = [_ID2]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = _mul2(g, m)
                if p not in seen:
                    seen.append(p)
                    nxt.append(p)
        frontier = nxt
    return tuple(WeylElement(i, m) for i, m in enumerate(seen))


WEYL_GROUP = _enumerate_weyl_group()
_BY_MATRIX = {g.matrix2: g for g in WEYL_GROUP}


def _element_by_matrix(m2) -> WeylElement:
    return _BY_MATRIX[m2]


IDENTITY = WEYL_GROUP[0]
S_ALPHA1 = _element_by_matrix(_reflection_matrix2(ALPHA1))
S_ALPHA2 = _element_by_matrix(_reflection_matrix2(ALPHA2))
LONGEST = _element_by_matrix(((-2, 0), (0, -2)))
# Weyl group of H = SL2 x SL2 / +-1: the sign changes generated by reflections in 2e1, 2e2
OMEGA_H = tuple(g for g in WEYL_GROUP if g.matrix2[0][1] == 0 and g.matrix2[1][0] == 0)


def weyl_act(s: WeylElement, w: Weight) -> Weight:
    (p, q), (r, t) = s.matrix2
    x, y = p * w.a + q * w.b, r * w.a + t * w.b
    assert x % 2 == 0 and y % 2 == 0
    return Weight(x // 2, y // 2)


def is_dominant(w: Weight) -> bool:
    """Closed G2-dominant chamber test."""
    return pairing(w, ALPHA1_CO) >= 0 and pairing(w, ALPHA2_CO) >= 0


def is_regular(w: Weight) -> bool:
    return all(pairing(w, c) != 0 for c in POSITIVE_COROOTS)


def dominant_conjugate(w: Weight) -> Weight:
    while True:
        p1 = pairing(w, ALPHA1_CO)
        if p1 < 0:
            w = w - p1 * ALPHA1
            continue
        p2 = pairing(w, ALPHA2_CO)
        if p2 < 0:
            w = w - p2 * ALPHA2
            continue
        return w


@lru_cache(maxsize=4096)
def _orbit(w: Weight) -> frozenset[Weight]:
    return frozenset(weyl_act(g, w) for g in WEYL_GROUP)


def weyl_orbit(w: Weight) -> frozenset[Weight]:
    return _orbit(w)


def dominant_weights(limit: int) -> list[Weight]:
    """Dominant weights ``m1*lambda1 + m2*lambda2`` with ``m1 + m2 <= limit``, sorted."""
    out = [Weight.from_fundamental(m1, n - m1) for n in range(limit + 1) for m1 in range(n, -1, -1)]
    return out


def hc_parameter(k: int) -> Weight:
    """Harish-Chandra parameter ``s_alpha2((k-2)*beta + rho_G)`` of the weight-k quaternionic discrete series."""
    if k < 2:
        raise ValueError(f"weight k must be >= 2, got {k}")
    return weyl_act(S_ALPHA2, (k - 2) * BETA + RHO_G)


def minimal_k_type(k: int) -> Weight:
    """``s_alpha2((k-2)*beta + 2*rho_G) - 2*rho_K``; equals ``2k*e2``."""
    if k < 2:
        raise ValueError(f"weight k must be >= 2, got {k}")
    return weyl_act(S_ALPHA2, (k - 2) * BETA + 2 * RHO_G) - 2 * RHO_K


def transfer_weights(k: int) -> tuple[Weight, Weight, Weight]:
    """H-weights appearing in the endoscopic transfer of the weight-k pseudocoefficient.

    Computed structurally; closed forms are ``(3k-3, k-1)``, ``(3k-2, k-2)``,
    ``(0, 2k-2)``.
    """
    if k <= 2:
        raise ValueError(f"transfer weights need k > 2, got {k}")
    lam = (k - 2) * BETA + RHO_G
    return (
        lam - RHO_H,
        weyl_act(S_ALPHA1, lam) - RHO_H,
        weyl_act(S_ALPHA2, lam) - RHO_H,
    )
