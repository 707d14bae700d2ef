"""Invariant checks across all modules, run by ``g2quat selftest``."""

from __future__ import annotations

import random
from typing import Callable, Iterator

from . import endoscopy, modforms, rootlattice as rl
from .counts import count_range, load_fixture
from .gammaclasses import group_order, invariant_dim
from .rootlattice import BETA, LAMBDA1, ZERO, Weight
from .weylchar import TorusElement, char_at, char_at_limit, char_from_weights, freudenthal_multiplicities, weyl_dim


def _root_lattice() -> bool:
    ok = len(rl.WEYL_GROUP) == 12 and rl.LONGEST.sign == 1
    ok &= sum(rl.POSITIVE_ROOTS, ZERO) == 2 * rl.RHO_G
    ok &= all(rl.pairing(a, rl.coroot(a)) == 2 for a in rl.ROOTS)
    ok &= all(rl.minimal_k_type(k) == Weight(0, 2 * k) for k in range(2, 101))
    ok &= all(
        rl.transfer_weights(k) == (Weight(3 * k - 3, k - 1), Weight(3 * k - 2, k - 2), Weight(0, 2 * k - 2))
        for k in range(3, 201)
    )
    return ok


def _characters(classes) -> bool:
    ok = True
    for lam in rl.dominant_weights(6):
        ok &= char_at(lam, TorusElement.identity()) == weyl_dim(lam)
    for lam in rl.dominant_weights(4):
        mults = freudenthal_multiplicities(lam)
        for r in classes:
            ok &= char_at(lam, r.torus) == char_from_weights(mults, r.torus)
            if r.torus.is_regular():
                ok &= char_at_limit(lam, r.torus) == char_at(lam, r.torus)
    return ok


def _classes(classes) -> bool:
    return group_order(classes) == 12096 and invariant_dim(ZERO, classes) == 1 and invariant_dim(LAMBDA1, classes) == 0


def _invariant_sweep(classes) -> bool:
    rng = random.Random(0)
    for _ in range(20):
        lam = Weight.from_fundamental(rng.randrange(12), rng.randrange(12))
        if invariant_dim(lam, classes) < 0:
            return False
    return True


def _modforms() -> bool:
    return all(modforms.dim_cusp_forms(k + 12) == modforms.dim_cusp_forms(k) + 1 for k in range(4, 200, 2))


def _endoscopy() -> bool:
    ok = all(endoscopy.correction(k) == endoscopy.correction_table(k) for k in range(3, 241))
    ok &= all(endoscopy.correction(k) * (-1) ** k >= 0 for k in range(3, 241))
    for N in range(1, 9):
        for c in range(N):
            for d in range(c % 2, 2 * N, 2):
                g = endoscopy.G2Class.of(TorusElement(N, c, d))
                ok &= (len(endoscopy.fiber(g)) == 3) == g.is_regular()
                ok &= endoscopy.fiber_weighted_size(g) == 3
    return ok


def _fixture(classes) -> bool:
    table = load_fixture()
    reports = count_range(min(table), max(table), classes)
    return all(table[r.k] == r.total for r in reports)


def checks(classes) -> Iterator[tuple[str, Callable[[], bool]]]:
    yield "rootlattice", _root_lattice
    yield "weylchar", lambda: _characters(classes)
    yield "gammaclasses", lambda: _classes(classes)
    yield "invariant sweep", lambda: _invariant_sweep(classes)
    yield "modforms", _modforms
    yield "endoscopy", _endoscopy
    yield "table fixture", lambda: _fixture(classes)


def run(classes, out) -> bool:
    all_ok = True
    for name, check in checks(classes):
        ok = bool(check())
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'} {name}", file=out)
    return all_ok
