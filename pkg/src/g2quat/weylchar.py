"""Characters of finite-dimensional G2 representations at torsion torus points.

Two independent routes are provided: the Weyl character formula (with a
jet limit at irregular points, where the Weyl denominator vanishes) and a
Freudenthal weight-multiplicity table summed over weights.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import DEFAULT_JET_ORDER, CyclotomicNumber, Jet, jet_ratio_limit
from .errors import BoundExceeded, DeformationDegenerate, TruncationTooShort
from .rootlattice import (
    ALPHA1,
    ALPHA2,
    ALPHA1_CO,
    ALPHA2_CO,
    LAMBDA1_CO,
    POSITIVE_COROOTS,
    POSITIVE_ROOTS,
    RHO_CO,
    RHO_G,
    SHORT_ROOTS,
    WEYL_GROUP,
    Coweight,
    Weight,
    WeylElement,
    dominant_conjugate,
    inner,
    is_dominant,
    pairing,
    weyl_act,
)


@dataclass(frozen=True, slots=True)
class TorusElement:
    """The order-dividing-N torus point ``exp(2*pi*i*(c*d1 + d*d2)/N)``.

    A weight ``(a, b)`` evaluates to ``zeta_{2N}**(a*c + b*d)``.  The pair
    ``(c, d)`` is stored reduced modulo ``N`` times the cocharacter lattice.
    """

    N: int
    c: int
    d: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"torus modulus must be positive, got {self.N}")
        if (self.c + self.d) % 2:
            raise ValueError(f"(c, d) = ({self.c}, {self.d}) is not a cocharacter: c + d must be even")
        n, c, d = self.N, self.c, self.d
        # N * X_* is spanned by (2N, 0), (0, 2N), (N, N)
        shift = c // n
        c, d = c - shift * n, (d - shift * n) % (2 * n)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def identity(cls) -> TorusElement:
        return cls(1, 0, 0)

    @classmethod
    def from_coweight(cls, x: Coweight, N: int) -> TorusElement:
        return cls(N, x.c, x.d)

    @property
    def field_modulus(self) -> int:
        return 2 * self.N

    def exponent(self, mu: Weight) -> int:
        return (mu.a * self.c + mu.b * self.d) % (2 * self.N)

    def is_identity(self) -> bool:
        return self.c == 0 and self.d == 0

    def order(self) -> int:
        for n in range(1, self.N + 1):
            if self.N % n == 0 and (n * self.c) % self.N == 0 and (n * self.d) % self.N == 0:
                if ((n * self.c + n * self.d) // self.N) % 2 == 0:
                    return n
        raise AssertionError("unreachable: t**N is the identity")

    def normalized(self) -> TorusElement:
        """Same point written with modulus equal to its exact order."""
        n = self.order()
        return TorusElement(n, self.c * n // self.N, self.d * n // self.N)

    def power(self, m: int) -> TorusElement:
        return TorusElement(self.N, m * self.c, m * self.d).normalized()

    def act(self, w: WeylElement) -> TorusElement:
        x = w.act_coweight(Coweight(self.c, self.d))
        return TorusElement(self.N, x.c, x.d)

    def key(self) -> tuple[int, int, int]:
        return (self.N, self.c, self.d)

    def is_regular(self) -> bool:
        """No root evaluates to 1."""
        return all(self.exponent(r) != 0 for r in POSITIVE_ROOTS)

    def canonical(self, group=WEYL_GROUP) -> TorusElement:
        """Representative of the orbit under ``group``, after normalizing the modulus."""
        t = self.normalized()
        return min((t.act(w) for w in group), key=TorusElement.key)

    def stabilizer(self, group=WEYL_GROUP) -> list[WeylElement]:
        return [w for w in group if self.act(w) == self]

    def as_dict(self) -> dict:
        return {"N": self.N, "c": self.c, "d": self.d}


def weyl_dim(lam: Weight) -> int:
    """Weyl dimension formula over the six positive coroots."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    num = den = 1
    for co in POSITIVE_COROOTS:
        num *= pairing(lam + RHO_G, co)
        den *= pairing(RHO_G, co)
    assert num % den == 0
    return num // den


def eval_weight(mu: Weight, t: TorusElement) -> CyclotomicNumber:
    return CyclotomicNumber.from_exponents(t.field_modulus, {t.exponent(mu): 1})


def _alternant(mu: Weight, t: TorusElement) -> CyclotomicNumber:
    terms = Counter()
    for w in WEYL_GROUP:
        terms[t.exponent(weyl_act(w, mu))] += w.sign
    return CyclotomicNumber.from_exponents(t.field_modulus, terms)


def _alternant_jet(mu: Weight, t: TorusElement, direction: Coweight, order: int) -> Jet:
    """Jet of the alternating sum along ``t * exp(s * direction)``."""
    M = t.field_modulus
    images = [(w.sign, t.exponent(weyl_act(w, mu)), Fraction(pairing(weyl_act(w, mu), direction))) for w in WEYL_GROUP]
    coeffs = []
    for j in range(order):
        fact = math.factorial(j)
        terms: dict[int, Fraction] = {}
        for sign, e, rate in images:
            terms[e] = terms.get(e, 0) + sign * rate**j / fact
        coeffs.append(CyclotomicNumber.from_exponents(M, terms))
    return Jet(M, coeffs, order)


@lru_cache(maxsize=512)
def _denominator_inverse(t: TorusElement) -> CyclotomicNumber | None:
    den = _alternant(RHO_G, t)
    if den.is_zero():
        return None
    return den.inverse()


DEFAULT_DIRECTIONS = (RHO_CO, RHO_CO + LAMBDA1_CO, RHO_CO + 2 * LAMBDA1_CO, RHO_CO + 3 * LAMBDA1_CO)


def char_at_limit(lam: Weight, t: TorusElement, directions=DEFAULT_DIRECTIONS, order: int = DEFAULT_JET_ORDER) -> CyclotomicNumber:
    """Character value via the jet limit of the Weyl formula, valid at any point."""
    for v in directions:
        num = _alternant_jet(lam + RHO_G, t, v, order)
        den = _alternant_jet(RHO_G, t, v, order)
        try:
            return jet_ratio_limit(num, den)
        except TruncationTooShort:
            continue
    raise DeformationDegenerate(f"Weyl denominator stays zero at {t} along all of {directions}")


def char_at(lam: Weight, t: TorusElement) -> CyclotomicNumber:
    """Value of the irreducible character of highest weight ``lam`` at ``t``."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    inv = _denominator_inverse(t)
    if inv is None:
        return char_at_limit(lam, t)
    return _alternant(lam + RHO_G, t) * inv


DEFAULT_SIZE_BOUND = 10**6


@lru_cache(maxsize=256)
def _dominant_multiplicities(lam: Weight) -> dict[Weight, int]:
    lr = lam + RHO_G
    norm_top = inner(lr, lr)
    n1max, n2max = lam.simple_root_coords()

    def below(mu: Weight) -> bool:
        n1, n2 = (lam - mu).simple_root_coords()
        return n1 >= 0 and n2 >= 0

    dom = []
    for n1 in range(n1max + 1):
        for n2 in range(n2max + 1):
            mu = lam - Weight.from_simple_roots(n1, n2)
            if is_dominant(mu):
                dom.append((n1 + n2, mu))
    dom.sort(key=lambda p: (p[0], p[1]))

    mult: dict[Weight, int] = {}

    def m(nu: Weight) -> int:
        nd = dominant_conjugate(nu)
        if not below(nd):
            return 0
        return mult.get(nd, 0)

    for height, mu in dom:
        if height == 0:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for alpha in POSITIVE_ROOTS:
            j = 1
            while True:
                nu = mu + j * alpha
                mv = m(nu)
                if mv == 0:
                    break
                total += mv * inner(nu, alpha)
                j += 1
        mr = mu + RHO_G
        gap = norm_top - inner(mr, mr)
        val = 2 * total / gap
        assert val.denominator == 1 and val >= 0, (lam, mu, val)
        if val:
            mult[mu] = int(val)
    return mult


def freudenthal_multiplicities(lam: Weight, bound: int = DEFAULT_SIZE_BOUND) -> dict[Weight, int]:
    """Full weight-multiplicity table of V_lam via Freudenthal's recursion."""
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    dim = weyl_dim(lam)
    if dim > bound:
        raise BoundExceeded(f"dim V_{tuple(lam)} = {dim} exceeds bound {bound}")
    table: dict[Weight, int] = {}
    for mu, k in _dominant_multiplicities(lam).items():
        for nu in {weyl_act(w, mu) for w in WEYL_GROUP}:
            table[nu] = k
    return table


def char_from_weights(mults: dict[Weight, int], t: TorusElement) -> CyclotomicNumber:
    """Character as a weighted sum of weights: sum m_mu * mu(t)."""
    terms = Counter()
    for mu, k in mults.items():
        terms[t.exponent(mu)] += k
    return CyclotomicNumber.from_exponents(t.field_modulus, terms)


def tensor_decompose(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of irreducibles in V_lam (x) V_mu (Brauer-Klimyk)."""
    out: Counter = Counter()
    for nu, k in freudenthal_multiplicities(mu).items():
        x = lam + nu + RHO_G
        sign = 1
        # reflect into the dominant chamber, tracking the sign; walls contribute 0
        while True:
            p1 = pairing(x, ALPHA1_CO)
            p2 = pairing(x, ALPHA2_CO)
            if p1 == 0 or p2 == 0:
                sign = 0
                break
            if p1 < 0:
                x, sign = x - p1 * ALPHA1, -sign
            elif p2 < 0:
                x, sign = x - p2 * ALPHA2, -sign
            else:
                break
        if sign:
            out[x - RHO_G] += sign * k
    return {w: c for w, c in out.items() if c}


# weights of the 7-dimensional representation
SEVEN_WEIGHTS = (Weight(0, 0),) + SHORT_ROOTS
