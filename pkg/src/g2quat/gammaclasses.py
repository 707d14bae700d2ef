"""Conjugacy classes of G2(Z) with torus parameters, and invariant dimensions.

The class datafile is a JSON array of records

    {"order": int, "size": int, "torus": {"N": int, "c": int, "d": int},
     "charpoly7": [8 ints, monic, highest degree first]}

sorted by (order, size, charpoly7, torus).  A copy ships in
``g2quat/data/g2z_classes.json``; :func:`regenerate` rebuilds it from the
octonion oracle.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from importlib import resources
from math import gcd, lcm
from pathlib import Path

import numpy as np
import sympy

from .cyclotomic import CyclotomicNumber, poly_divmod_int, cyclotomic_polynomial, to_rational_integer
from .errors import ConsistencyError, TorusRecoveryFailed
from .octonions import Automorphism, aut_group_array, compose_doubled, element_order
from .rootlattice import SHORT_ROOTS, Weight
from .weylchar import TorusElement, char_at

log = logging.getLogger(__name__)

DATAFILE_NAME = "g2z_classes.json"


@dataclass(frozen=True)
class ConjClassRecord:
    class_id: int
    size: int
    order: int
    torus: TorusElement
    charpoly7: tuple[int, ...]
    representative: Automorphism | None = field(default=None, compare=False, repr=False)

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "size": self.size,
            "torus": self.torus.as_dict(),
            "charpoly7": list(self.charpoly7),
        }

    def sort_key(self):
        return (self.order, self.size, self.charpoly7, self.torus.key())


def conjugacy_labels(mats: np.ndarray) -> np.ndarray:
    """Label each group element by conjugacy class, via explicit orbits."""
    index = {m.tobytes(): i for i, m in enumerate(mats)}
    labels = np.full(len(mats), -1, dtype=np.int64)
    inv = mats.transpose(0, 2, 1)
    label = 0
    for i in range(len(mats)):
        if labels[i] >= 0:
            continue
        conj = np.matmul(np.matmul(mats, mats[i]), inv) // 4
        for c in conj:
            labels[index[c.tobytes()]] = label
        label += 1
    return labels


def charpoly7(m: np.ndarray) -> tuple[int, ...]:
    """Characteristic polynomial on the trace-zero octonions, highest degree first."""
    a = sympy.Matrix(7, 7, [sympy.Rational(int(v), 2) for v in m[1:, 1:].ravel()])
    x = sympy.Symbol("x")
    coeffs = a.charpoly(x).all_coeffs()
    return tuple(int(c) for c in coeffs)


def eigen_exponents(poly: tuple[int, ...], order: int) -> list[int]:
    """Eigenvalues of a finite-order matrix as exponents of zeta_{2*order}, sorted.

    ``poly`` is its characteristic polynomial, highest degree first.
    """
    rest = list(reversed(poly))
    out = []
    M = 2 * order
    for m in range(1, order + 1):
        if order % m:
            continue
        phi = list(cyclotomic_polynomial(m))
        while len(rest) > 1:
            q, r = poly_divmod_int(rest, phi)
            if any(r):
                break
            rest = q
            out.extend(j * (M // m) for j in range(m) if gcd(j, m) == 1)
    if rest != [1]:
        raise TorusRecoveryFailed(f"charpoly {poly} is not a product of cyclotomic factors of order dividing {order}")
    return sorted(out)


def seven_exponents(t: TorusElement) -> list[int]:
    """Eigenvalue exponents of t on the 7-dimensional representation."""
    return sorted([0] + [t.exponent(r) for r in SHORT_ROOTS])


def recover_torus(poly: tuple[int, ...], order: int) -> TorusElement:
    target = eigen_exponents(poly, order)
    for c in range(order):
        for d in range(2 * order):
            if (c + d) % 2:
                continue
            t = TorusElement(order, c, d)
            if seven_exponents(t) == target:
                return t.canonical()
    raise TorusRecoveryFailed(f"no torus point of order {order} has eigenvalues {target}")


def classify(mats: np.ndarray | None = None) -> list[ConjClassRecord]:
    """Conjugacy classes of G2(Z), canonically sorted."""
    if mats is None:
        mats = aut_group_array()
    labels = conjugacy_labels(mats)
    records = []
    for label in range(labels.max() + 1):
        members = np.nonzero(labels == label)[0]
        rep = mats[members[0]]
        order = element_order(rep)
        poly = charpoly7(rep)
        torus = recover_torus(poly, order)
        records.append(
            ConjClassRecord(-1, len(members), order, torus, poly, Automorphism.from_array(rep))
        )
    records.sort(key=ConjClassRecord.sort_key)
    records = [
        ConjClassRecord(i, r.size, r.order, r.torus, r.charpoly7, r.representative) for i, r in enumerate(records)
    ]
    log.info("classified %d elements into %d conjugacy classes", len(mats), len(records))
    return records


def power_map_consistent(records: list[ConjClassRecord], mats: np.ndarray | None = None) -> bool:
    """Check that the torus of g**m is the m-th power of the torus of g, for every class."""
    if mats is None:
        mats = aut_group_array()
    labels = conjugacy_labels(mats)
    index = {m.tobytes(): i for i, m in enumerate(mats)}
    by_label = {}
    for r in records:
        by_label[labels[index[np.asarray(r.representative.array).tobytes()]]] = r
    for r in records:
        g = r.representative.array
        p = g
        for m in range(1, r.order + 1):
            target = by_label[labels[index[p.tobytes()]]].torus
            if r.torus.power(m).canonical() != target:
                return False
            p = compose_doubled(p, g)
    return True


def records_to_json(records: list[ConjClassRecord]) -> str:
    return json.dumps([r.as_dict() for r in records], indent=1) + "\n"


def records_from_json(text: str) -> list[ConjClassRecord]:
    raw = json.loads(text)
    if not isinstance(raw, list) or not raw:
        raise ConsistencyError("class datafile must be a nonempty JSON array")
    out = []
    for i, rec in enumerate(raw):
        t = rec["torus"]
        out.append(
            ConjClassRecord(
                i,
                int(rec["size"]),
                int(rec["order"]),
                TorusElement(int(t["N"]), int(t["c"]), int(t["d"])),
                tuple(int(c) for c in rec["charpoly7"]),
            )
        )
    return out


def default_datafile() -> Path:
    return Path(str(resources.files("g2quat") / "data" / DATAFILE_NAME))


def load_classes(path: str | Path | None = None) -> list[ConjClassRecord]:
    p = Path(path) if path is not None else default_datafile()
    return records_from_json(p.read_text())


def regenerate(path: str | Path | None = None) -> list[ConjClassRecord]:
    """Rerun the octonion oracle; write the datafile if ``path`` is given."""
    records = classify()
    if path is not None:
        Path(path).write_text(records_to_json(records))
    return records


def group_order(records: list[ConjClassRecord]) -> int:
    return sum(r.size for r in records)


def class_sum(lam: Weight, records: list[ConjClassRecord]) -> CyclotomicNumber:
    """sum over classes of size * chi_lam(torus), in a common cyclotomic field."""
    by_mod: dict[int, CyclotomicNumber] = {}
    for r in records:
        v = char_at(lam, r.torus) * r.size
        M = r.torus.field_modulus
        by_mod[M] = by_mod[M] + v if M in by_mod else v
    M = lcm(*by_mod)
    total = CyclotomicNumber.zero(M)
    for v in by_mod.values():
        total = total + v.embed(M)
    return total


def invariant_dim(lam: Weight, records: list[ConjClassRecord]) -> int:
    """dim of the G2(Z)-invariants in V_lam, by pairing its character with the trivial one."""
    total = class_sum(lam, records) / group_order(records)
    n = to_rational_integer(total)
    if n < 0:
        raise ConsistencyError(f"negative invariant dimension {n} for {lam}")
    return n
