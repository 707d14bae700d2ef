"""Exact arithmetic in cyclotomic fields Q(zeta_N), plus truncated power series.

Elements of Q(zeta_N) are stored as coefficient vectors of length phi(N)
in the power basis 1, x, ..., x^(phi(N)-1) of Q[x]/(Phi_N(x)), so an
element is zero exactly when its vector is zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import NonIntegral, NonRational, OrderMismatch, TruncationTooShort


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num, rem = poly_divmod_int(num, list(cyclotomic_polynomial(d)))
        assert not any(rem)
    return tuple(num)


def poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1]
        q[i] = coef
        if coef:
            for j, dj in enumerate(den):
                num[i + j] -= coef * dj
    return q, num[: len(den) - 1]


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the reduction of x^e mod Phi_n, for 0 <= e < n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    row = [1] + [0] * (deg - 1) if deg else []
    rows = []
    for _ in range(n):
        rows.append(tuple(row))
        # multiply by x and reduce by the monic Phi_n
        top = row[-1] if deg else 0
        row = [0] + row[:-1]
        if top:
            row = [r - top * p for r, p in zip(row, phi[:-1])]
    return tuple(rows)


class CyclotomicNumber:
    """Element of Q(zeta_N); immutable."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Sequence):
        if N < 1:
            raise ValueError(f"modulus must be positive, got {N}")
        deg = euler_phi(N)
        if len(coeffs) != deg:
            raise ValueError(f"Q(zeta_{N}) has degree {deg}, got {len(coeffs)} coefficients")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicNumber is immutable")

    # construction

    @classmethod
    def from_int(cls, N: int, value) -> CyclotomicNumber:
        deg = euler_phi(N)
        return cls(N, [value] + [0] * (deg - 1))

    @classmethod
    def zero(cls, N: int) -> CyclotomicNumber:
        return cls(N, [0] * euler_phi(N))

    @classmethod
    def one(cls, N: int) -> CyclotomicNumber:
        return cls.from_int(N, 1)

    @classmethod
    def from_exponents(cls, N: int, weights: Mapping[int, object] | Iterable[tuple[int, object]]) -> CyclotomicNumber:
        """``sum(w * zeta_N**e)`` over ``(e, w)`` pairs; exponents taken mod N."""
        items = weights.items() if isinstance(weights, Mapping) else weights
        table = _power_table(N)
        acc = [Fraction(0)] * euler_phi(N)
        folded: dict[int, object] = {}
        for e, w in items:
            e %= N
            folded[e] = folded.get(e, 0) + w
        for e, w in folded.items():
            if not w:
                continue
            for i, t in enumerate(table[e]):
                if t:
                    acc[i] += t * w
        return cls(N, acc)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # field embedding

    def embed(self, M: int) -> CyclotomicNumber:
        """Image in Q(zeta_M) via zeta_N -> zeta_M**(M/N); requires N | M."""
        if M % self.N:
            raise ValueError(f"cannot embed Q(zeta_{self.N}) into Q(zeta_{M})")
        if M == self.N:
            return self
        step = M // self.N
        return CyclotomicNumber.from_exponents(M, ((i * step, c) for i, c in enumerate(self.coeffs) if c))

    def _common(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.from_int(self.N, Fraction(other))
        if other.N == self.N:
            return self, other
        m = lcm(self.N, other.N)
        return self.embed(m), other.embed(m)

    # arithmetic

    def __add__(self, other):
        x, y = self._common(other)
        return CyclotomicNumber(x.N, [p + q for p, q in zip(x.coeffs, y.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.N, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CyclotomicNumber):
            f = Fraction(other)
            return CyclotomicNumber(self.N, [c * f for c in self.coeffs])
        x, y = self._common(other)
        prod: dict[int, Fraction] = {}
        for i, p in enumerate(x.coeffs):
            if not p:
                continue
            for j, q in enumerate(y.coeffs):
                if q:
                    prod[i + j] = prod.get(i + j, 0) + p * q
        return CyclotomicNumber.from_exponents(x.N, prod)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CyclotomicNumber.from_int(self.N, 1 / self.coeffs[0])
        s, _ = _poly_xgcd_inverse(list(self.coeffs), [Fraction(c) for c in cyclotomic_polynomial(self.N)])
        return CyclotomicNumber(self.N, s + [Fraction(0)] * (euler_phi(self.N) - len(s)))

    def __truediv__(self, other):
        if not isinstance(other, CyclotomicNumber):
            return self * (1 / Fraction(other))
        x, y = self._common(other)
        return x * y.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        acc, base = CyclotomicNumber.one(self.N), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        x, y = self._common(other)
        return x.coeffs == y.coeffs

    __hash__ = None

    # Galois action

    def galois(self, j: int) -> CyclotomicNumber:
        """Apply the automorphism zeta_N -> zeta_N**j (j coprime to N)."""
        if gcd(j, self.N) != 1:
            raise ValueError(f"{j} is not a unit mod {self.N}")
        return CyclotomicNumber.from_exponents(self.N, ((i * j, c) for i, c in enumerate(self.coeffs) if c))

    def conjugate(self) -> CyclotomicNumber:
        return self.galois(-1)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NonRational(f"{self!r} is not fixed by Gal(Q(zeta_{self.N})/Q)")
        return self.coeffs[0]

    def __complex__(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.N)
        return sum(complex(float(c)) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return f"CyclotomicNumber({self.N}: {' + '.join(terms) or '0'})"


def _strip(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _strip(list(a))
    b = _strip(list(b))
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] / lead
        q[i] = coef
        if coef:
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    return q, _strip(a[: len(b) - 1])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _strip([x - y for x, y in zip(a, b)])


def _poly_xgcd_inverse(a: list[Fraction], m: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Return (s, g) with s*a = g mod m and g a nonzero constant normalized to 1."""
    old_r, r = _strip(list(m)), _strip(list(a))
    old_s, s = [], [Fraction(1)]
    while r:
        q, rem = _poly_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _poly_sub(old_s, _poly_mul(q, s))
    # old_r is the gcd; Phi_N irreducible so it is a constant
    assert len(old_r) == 1, "cyclotomic polynomial should be irreducible"
    c = old_r[0]
    return [x / c for x in old_s], [Fraction(1)]


def embed_root(N: int, e: int) -> CyclotomicNumber:
    """zeta_N**e in canonical form."""
    return CyclotomicNumber.from_exponents(N, {e: 1})


def to_rational_integer(x: CyclotomicNumber) -> int:
    q = x.to_rational()
    if q.denominator != 1:
        raise NonIntegral(f"{q} is rational but not an integer")
    return int(q)


DEFAULT_JET_ORDER = 8


class Jet:
    """Power series ``sum c_j s^j`` over Q(zeta_N), truncated to ``j < order``."""

    __slots__ = ("N", "coeffs", "order")

    def __init__(self, N: int, coeffs: Sequence[CyclotomicNumber], order: int = DEFAULT_JET_ORDER):
        coeffs = list(coeffs)[:order]
        coeffs += [CyclotomicNumber.zero(N)] * (order - len(coeffs))
        for c in coeffs:
            if c.N != N:
                raise ValueError("jet coefficients must share one modulus")
        self.N = N
        self.coeffs = tuple(coeffs)
        self.order = order

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if zero to this order."""
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                return j
        return None

    def coefficient(self, j: int) -> CyclotomicNumber:
        if j >= self.order:
            raise TruncationTooShort(f"coefficient {j} requested from a jet truncated at order {self.order}")
        return self.coeffs[j]

    def __add__(self, other: Jet) -> Jet:
        order = min(self.order, other.order)
        return Jet(self.N, [x + y for x, y in zip(self.coeffs[:order], other.coeffs[:order])], order)

    def __mul__(self, other: Jet) -> Jet:
        order = min(self.order, other.order)
        out = [CyclotomicNumber.zero(self.N)] * order
        for i in range(order):
            if self.coeffs[i].is_zero():
                continue
            for j in range(order - i):
                out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j]
        return Jet(self.N, out, order)

    def __repr__(self) -> str:
        return f"Jet(N={self.N}, order={self.order}, valuation={self.valuation()})"

    @classmethod
    def monomial(cls, N: int, value, power: int, order: int = DEFAULT_JET_ORDER) -> Jet:
        coeffs = [CyclotomicNumber.zero(N)] * order
        if power < order:
            coeffs[power] = value if isinstance(value, CyclotomicNumber) else CyclotomicNumber.from_int(N, value)
        return cls(N, coeffs, order)


def jet_ratio_limit(num: Jet, den: Jet) -> CyclotomicNumber:
    """Limit of num(s)/den(s) as s -> 0."""
    v = den.valuation()
    if v is None:
        raise TruncationTooShort(f"denominator vanishes to order {den.order}; increase the jet order")
    if v >= num.order:
        raise TruncationTooShort(f"numerator truncated at order {num.order} <= {v}")
    for j in range(v):
        if not num.coeffs[j].is_zero():
            raise OrderMismatch(f"numerator has valuation {j} below denominator valuation {v}")
    return num.coeffs[v] / den.coeffs[v]
