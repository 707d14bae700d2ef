"""Endoscopic corrections from H = SL2 x SL2 / {+-1}, and Satake class fibers.

The endoscopic constants and kappa signs are taken as input data.  The
correction to the count is assembled from products of cusp-form
dimensions; :func:`correction_table` is the closed piecewise form and must
agree with :func:`correction` for every k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .modforms import dim_cusp_forms
from .rootlattice import OMEGA_H, WEYL_GROUP, Weight, transfer_weights
from .weylchar import TorusElement


@dataclass(frozen=True)
class EndoscopicConstants:
    iota_g2_h: Fraction = Fraction(1, 2)
    iota_g2c_g2: Fraction = Fraction(1)
    kappa_s1: int = -1
    kappa_s2: int = -1
    kappa_s1s2: int = -1


CONSTANTS = EndoscopicConstants()


def _require_k(k: int) -> None:
    if k <= 2:
        raise ValueError(f"weight must satisfy k > 2, got k = {k}")


def h_term(a: int, b: int) -> int:
    """(S_{a+2} - [a = 0]) * (S_{b+2} - [b = 0])."""
    if a < 0 or b < 0:
        raise ValueError(f"h_term needs a, b >= 0, got ({a}, {b})")
    return (dim_cusp_forms(a + 2) - (a == 0)) * (dim_cusp_forms(b + 2) - (b == 0))


def h_term_weight(w: Weight) -> int:
    return h_term(w.a, w.b)


@dataclass(frozen=True)
class SignedWeights:
    terms: tuple[tuple[int, Weight], ...]

    def __sub__(self, other: SignedWeights) -> dict[Weight, int]:
        out: dict[Weight, int] = {}
        for s, w in self.terms:
            out[w] = out.get(w, 0) + s
        for s, w in other.terms:
            out[w] = out.get(w, 0) - s
        return {w: c for w, c in out.items() if c}


def transfer_weight_signs(k: int) -> tuple[SignedWeights, SignedWeights]:
    """Signed H-weights in the transfers of the pseudocoefficient and of the Euler-Poincare function."""
    _require_k(k)
    w1, w2, w3 = transfer_weights(k)
    pseudo = SignedWeights(((-1, w1), (1, w2), (-1, w3)))
    ep = SignedWeights(((1, w1), (-1, w2), (-1, w3)))
    return pseudo, ep


def correction_combination(k: int) -> dict[Weight, Fraction]:
    """iota(G2, H) * (pseudo - ep), as a map from H-weight to coefficient."""
    pseudo, ep = transfer_weight_signs(k)
    return {w: CONSTANTS.iota_g2_h * c for w, c in (pseudo - ep).items()}


def correction(k: int) -> int:
    """-h(3k-3, k-1) + h(3k-2, k-2), assembled from the transfer combination."""
    total = Fraction(0)
    for w, c in correction_combination(k).items():
        total += c * h_term_weight(w)
    assert total.denominator == 1
    return int(total)


def correction_table(k: int) -> int:
    """Closed piecewise form of :func:`correction`, by k mod 12."""
    _require_k(k)
    r = k % 12
    if r == 2:
        return (k // 4) * (k // 12 - 1)
    if r % 2 == 0:
        return (k // 4) * (k // 12)
    a, b = (3 * k - 1) // 12, (k + 1) // 12
    if r == 1:
        return -(a - 1) * (b - 1)
    if r in (5, 9):
        return -(a - 1) * b
    return -a * b


# Satake classes: torus points modulo Omega_H (for H) or Omega (for G2)


@dataclass(frozen=True)
class HClass:
    torus: TorusElement

    @classmethod
    def of(cls, t: TorusElement) -> HClass:
        return cls(t.canonical(OMEGA_H))

    def stabilizer_order(self) -> int:
        return len(self.torus.stabilizer(OMEGA_H))


@dataclass(frozen=True)
class G2Class:
    torus: TorusElement

    @classmethod
    def of(cls, t: TorusElement) -> G2Class:
        return cls(t.canonical(WEYL_GROUP))

    def is_regular(self) -> bool:
        return self.torus.is_regular()

    def stabilizer_order(self) -> int:
        return len(self.torus.stabilizer(WEYL_GROUP))


def satake_project(h: HClass) -> G2Class:
    return G2Class.of(h.torus)


def fiber(g: G2Class) -> list[HClass]:
    """The H-classes lying over ``g``, sorted."""
    classes = {HClass.of(g.torus.act(w)) for w in WEYL_GROUP}
    return sorted(classes, key=lambda h: h.torus.key())


def fiber_weighted_size(g: G2Class) -> Fraction:
    """Sum over the fiber of |Stab_Omega(t)| / |Stab_Omega_H(h)|; always 3."""
    s = g.stabilizer_order()
    return sum((Fraction(s, h.stabilizer_order()) for h in fiber(g)), Fraction(0))
