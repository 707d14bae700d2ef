"""Coxeter's integral octonions and their automorphism group G2(Z).

Basis ``e0 = 1, e1, ..., e7`` with ``e_i * e_{i+1} = e_{i+3}`` (indices
mod 7 on 1..7).  Elements are stored in doubled coordinates: the octonion
``x/2`` is the integer vector ``x``.  The order is

    O = { x/2 : x in Z^8, x mod 2 in C }

where ``C`` is the extended Hamming code whose weight-4 words are
``{0} | L`` and its complement for the lines ``L`` of ``ORDER_LINES``.  Of
the seven Fano planes giving a multiplicatively closed lattice, this is the
lexicographically first.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BadOrderData, GroupSizeUnexpected

log = logging.getLogger(__name__)

GROUP_ORDER = 12096
UNIT_COUNT = 240

MULT_LINES = tuple((i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1) for i in range(7))
ORDER_LINES = ((1, 2, 3), (1, 4, 7), (1, 5, 6), (2, 4, 5), (2, 6, 7), (3, 4, 6), (3, 5, 7))


def _structure_constants() -> np.ndarray:
    t = np.zeros((8, 8, 8), dtype=np.int64)
    t[0, 0, 0] = 1
    for i in range(1, 8):
        t[0, i, i] = t[i, 0, i] = 1
        t[i, i, 0] = -1
    for a, b, c in MULT_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            t[x, y, z] = 1
            t[y, x, z] = -1
    return t


STRUCTURE = _structure_constants()


def _code_words() -> list[frozenset[int]]:
    words = [frozenset((0,) + line) for line in ORDER_LINES]
    words += [frozenset(range(8)) - w for w in words]
    return sorted(words, key=sorted)


CODE_WORDS = _code_words()
_CODE_MASK = np.zeros(256, dtype=bool)
_CODE_MASK[0] = _CODE_MASK[255] = True
for _w in CODE_WORDS:
    _CODE_MASK[sum(1 << i for i in _w)] = True
_BITS = 1 << np.arange(8)


def in_order(x: np.ndarray) -> np.ndarray:
    """Membership of doubled-coordinate vectors (last axis of length 8) in O."""
    return _CODE_MASK[(np.asarray(x) % 2) @ _BITS]


def mul_doubled(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Product in doubled coordinates; exact for elements of O."""
    p = np.einsum("...i,...j,ijk->...k", x, y, STRUCTURE)
    return p // 2


@dataclass(frozen=True, slots=True)
class IntegralOctonion:
    doubled: tuple[int, ...]

    def __post_init__(self):
        if len(self.doubled) != 8:
            raise ValueError("an octonion has 8 coordinates")

    @classmethod
    def basis(cls, i: int) -> IntegralOctonion:
        v = [0] * 8
        v[i] = 2
        return cls(tuple(v))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def is_integral(self) -> bool:
        return bool(in_order(np.array(self.doubled)))

    def norm(self) -> Fraction:
        return Fraction(sum(x * x for x in self.doubled), 4)

    def __add__(self, other: IntegralOctonion) -> IntegralOctonion:
        return IntegralOctonion(tuple(p + q for p, q in zip(self.doubled, other.doubled)))

    def __neg__(self) -> IntegralOctonion:
        return IntegralOctonion(tuple(-p for p in self.doubled))

    def __mul__(self, other: IntegralOctonion) -> IntegralOctonion:
        p = np.einsum("i,j,ijk->k", np.array(self.doubled), np.array(other.doubled), STRUCTURE)
        if np.any(p % 2):
            raise ValueError("product leaves the doubled-integer lattice")
        return IntegralOctonion(tuple(int(v) for v in p // 2))

    def conj(self) -> IntegralOctonion:
        return IntegralOctonion((self.doubled[0],) + tuple(-p for p in self.doubled[1:]))


@lru_cache(maxsize=1)
def unit_array() -> np.ndarray:
    """The norm-one elements of O as a (240, 8) doubled-coordinate array."""
    # norm 1 means |x|^2 = 4 in doubled coordinates, so every entry lies in -2..2
    cand = np.array(list(itertools.product(range(-2, 3), repeat=8)), dtype=np.int64)
    cand = cand[(cand * cand).sum(axis=1) == 4]
    units = cand[in_order(cand)]
    if len(units) != UNIT_COUNT:
        raise BadOrderData(f"found {len(units)} units, expected {UNIT_COUNT}")
    units = units[np.lexsort(units.T[::-1])]
    units.setflags(write=False)
    return units


def enumerate_units() -> frozenset[IntegralOctonion]:
    return frozenset(IntegralOctonion(tuple(int(v) for v in u)) for u in unit_array())


def _order_generators() -> np.ndarray:
    """Half-integer units whose code words span C over F2; with the e_i they generate O."""
    chosen: list[np.ndarray] = []
    span = {0}
    for w in CODE_WORDS:
        bits = sum(1 << i for i in w)
        if bits in span:
            continue
        span |= {s ^ bits for s in span}
        v = np.zeros(8, dtype=np.int64)
        v[sorted(w)] = 1
        chosen.append(v)
    assert len(span) == 16
    return np.array(chosen)


# A basic triple (x1, x2, x3) of the standard basis and the product basis it spans.
_E = 2 * np.eye(8, dtype=np.int64)
_PRODUCT_BASIS = np.array(
    [
        _E[0],
        _E[1],
        _E[2],
        mul_doubled(_E[1], _E[2]),
        _E[3],
        mul_doubled(_E[1], _E[3]),
        mul_doubled(_E[2], _E[3]),
        mul_doubled(mul_doubled(_E[1], _E[2]), _E[3]),
    ]
)
_PB_INDEX = np.argmax(np.abs(_PRODUCT_BASIS), axis=1)
_PB_SIGN = _PRODUCT_BASIS[np.arange(8), _PB_INDEX] // 2
assert sorted(_PB_INDEX.tolist()) == list(range(8))


@lru_cache(maxsize=1)
def aut_group_array() -> np.ndarray:
    """All automorphisms of O as an (n, 8, 8) int array of doubled matrices.

    Column j of a doubled matrix holds the doubled coordinates of the image
    of e_j.  An automorphism is fixed by the image of the basic triple
    (e1, e2, e3); images range over basic triples of imaginary units, and a
    candidate is kept when it maps generators of O into O.
    """
    units = unit_array()
    imag = units[units[:, 0] == 0]
    gens = _order_generators()
    found = []
    for v1 in imag:
        perp1 = imag[(imag @ v1) == 0]
        for v2 in perp1:
            v12 = mul_doubled(v1, v2)
            c3 = perp1[((perp1 @ v2) == 0) & ((perp1 @ v12) == 0)]
            n = len(c3)
            rep = lambda v: np.broadcast_to(v, (n, 8))
            images = np.stack(
                [
                    rep(_E[0]),
                    rep(v1),
                    rep(v2),
                    rep(v12),
                    c3,
                    mul_doubled(rep(v1), c3),
                    mul_doubled(rep(v2), c3),
                    mul_doubled(rep(v12), c3),
                ],
                axis=1,
            )
            mats = np.zeros((n, 8, 8), dtype=np.int64)
            for m in range(8):
                mats[:, :, _PB_INDEX[m]] = _PB_SIGN[m] * images[:, m]
            # gens are doubled; phi(g/2) doubled is mats @ g / 2
            img = np.einsum("nij,gj->ngi", mats, gens)
            ok = np.all(img % 2 == 0, axis=(1, 2))
            ok &= np.all(in_order(img // 2), axis=1)
            found.extend(mats[ok])
    group = np.array(found, dtype=np.int64)
    if len(group) != GROUP_ORDER:
        raise GroupSizeUnexpected(f"found {len(group)} automorphisms, expected {GROUP_ORDER}")
    flat = group.reshape(len(group), -1)
    group = group[np.lexsort(flat.T[::-1])]
    group.setflags(write=False)
    log.debug("enumerated %d automorphisms of the integral octonions", len(group))
    return group


def compose_doubled(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.matmul(a, b) // 2


@dataclass(frozen=True)
class Automorphism:
    """Algebra automorphism of O, kept as its doubled 8x8 matrix."""

    matrix2: tuple[tuple[int, ...], ...]

    @classmethod
    def from_array(cls, m: np.ndarray) -> Automorphism:
        return cls(tuple(tuple(int(v) for v in row) for row in m))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix2, dtype=np.int64)

    def __call__(self, x: IntegralOctonion) -> IntegralOctonion:
        y = self.array @ np.array(x.doubled)
        assert not np.any(y % 2)
        return IntegralOctonion(tuple(int(v) for v in y // 2))

    def __matmul__(self, other: Automorphism) -> Automorphism:
        return Automorphism.from_array(compose_doubled(self.array, other.array))

    def inverse(self) -> Automorphism:
        # norm-preserving on an orthonormal basis
        return Automorphism.from_array(self.array.T)

    def is_identity(self) -> bool:
        return np.array_equal(self.array, _E)

    def order(self) -> int:
        return element_order(self.array)

    def restrict7(self) -> tuple[tuple[Fraction, ...], ...]:
        """Matrix on the trace-zero octonions e1..e7."""
        return tuple(tuple(Fraction(v, 2) for v in row[1:]) for row in self.matrix2[1:])

    def trace7(self) -> Fraction:
        return sum(Fraction(self.matrix2[i][i], 2) for i in range(1, 8))


def element_order(m: np.ndarray) -> int:
    p, n = m, 1
    while not np.array_equal(p, _E):
        p = compose_doubled(p, m)
        n += 1
    return n


def enumerate_aut_group() -> tuple[Automorphism, ...]:
    return tuple(Automorphism.from_array(m) for m in aut_group_array())


def is_automorphism(m: np.ndarray) -> bool:
    """Check phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs and phi(1) = 1."""
    m = np.asarray(m, dtype=np.int64)
    if not np.array_equal(m[:, 0], _E[0]):
        return False
    cols = m.T  # doubled images of e_j
    lhs = np.einsum("ijk,lk->ijl", STRUCTURE, m)  # doubled image of e_i e_j
    rhs = mul_doubled(cols[:, None, :], cols[None, :, :])
    return bool(np.array_equal(lhs, rhs))
