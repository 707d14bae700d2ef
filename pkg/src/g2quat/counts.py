"""Counts of level-1 quaternionic representations of weight k on G2.

    total(k) = dim V_{(k-2)beta}^Gamma + correction(k)

with Gamma = G2(Z) of the compact form and the correction coming from
pairs of cusp forms via H.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from functools import partial
from importlib import resources
from pathlib import Path

from .endoscopy import correction
from .errors import ConsistencyError, FixtureMalformed, FixtureMissing
from .gammaclasses import ConjClassRecord, invariant_dim, load_classes
from .modforms import dim_cusp_forms
from .rootlattice import BETA

log = logging.getLogger(__name__)

FIXTURE_NAME = "table1.json"


class JLKind(str, Enum):
    EVEN_ADDITION = "EvenAddition"
    ODD_SUBTRACTION = "OddSubtraction"


@dataclass(frozen=True)
class CountReport:
    k: int
    g2c_term: int
    correction: int
    total: int
    jl_kind: JLKind
    jl_pairs: int

    def as_dict(self) -> dict:
        d = asdict(self)
        d["jl_kind"] = self.jl_kind.value
        return d


def jl_note(k: int) -> tuple[JLKind, int]:
    """Which pairs of eigenforms contribute, and how many pairs there are.

    Even k adds pairs of weights (3k, k); odd k removes pairs of weights
    (3k-1, k+1).
    """
    if k % 2 == 0:
        return JLKind.EVEN_ADDITION, dim_cusp_forms(3 * k) * dim_cusp_forms(k)
    return JLKind.ODD_SUBTRACTION, dim_cusp_forms(3 * k - 1) * dim_cusp_forms(k + 1)


def count_quaternionic(k: int, classes: list[ConjClassRecord] | None = None) -> CountReport:
    if k <= 2:
        raise ValueError(f"the count is only defined for k > 2 (got k = {k})")
    if classes is None:
        classes = load_classes()
    g2c = invariant_dim((k - 2) * BETA, classes)
    corr = correction(k)
    total = g2c + corr
    if total < 0:
        raise ConsistencyError(f"negative count {total} at k = {k}")
    kind, pairs = jl_note(k)
    return CountReport(k, g2c, corr, total, kind, pairs)


def count_range(k_from: int, k_to: int, classes: list[ConjClassRecord] | None = None, jobs: int = 1) -> list[CountReport]:
    """One report per k in [k_from, k_to], in order of k."""
    if k_from <= 2:
        raise ValueError(f"the count is only defined for k > 2 (got k = {k_from})")
    if k_to < k_from:
        raise ValueError(f"empty range {k_from}..{k_to}")
    if classes is None:
        classes = load_classes()
    ks = range(k_from, k_to + 1)
    work = partial(count_quaternionic, classes=classes)
    if jobs <= 1 or len(ks) == 1:
        return [work(k) for k in ks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(ks))) as pool:
        # map preserves input order
        return list(pool.map(work, ks))


def default_fixture() -> Path:
    return Path(str(resources.files("g2quat") / "data" / FIXTURE_NAME))


def load_fixture(path: str | Path | None = None) -> dict[int, int]:
    p = Path(path) if path is not None else default_fixture()
    if not p.is_file():
        raise FixtureMissing(f"fixture {p} does not exist")
    try:
        raw = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise FixtureMalformed(f"fixture {p} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict) or not raw:
        raise FixtureMalformed(f"fixture {p} must be a nonempty JSON object")
    try:
        table = {int(k): v for k, v in raw.items()}
    except ValueError as exc:
        raise FixtureMalformed(f"fixture {p} has a non-integer key") from exc
    for k, v in table.items():
        if k <= 2 or not isinstance(v, int) or isinstance(v, bool):
            raise FixtureMalformed(f"fixture entry {k}: {v!r} is not a valid count")
    return table


@dataclass(frozen=True)
class FixtureDiff:
    k: int
    expected: int
    computed: int


def verify_fixture(path: str | Path | None = None, classes=None, jobs: int = 1) -> tuple[bool, list[FixtureDiff]]:
    table = load_fixture(path)
    ks = sorted(table)
    reports = {r.k: r for r in count_range(ks[0], ks[-1], classes, jobs)}
    diffs = [FixtureDiff(k, table[k], reports[k].total) for k in ks if reports[k].total != table[k]]
    return not diffs, diffs


CSV_HEADER = ("k", "g2c_term", "correction", "total", "jl_pairs")


def format_csv(reports: list[CountReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow([r.k, r.g2c_term, r.correction, r.total, r.jl_pairs])
    return buf.getvalue()


def format_json(reports: list[CountReport]) -> str:
    return json.dumps([r.as_dict() for r in reports], indent=1) + "\n"


def format_table(reports: list[CountReport], rows: int = 10) -> str:
    """Columns of (k, total) pairs, ``rows`` entries per column."""
    cols = [reports[i : i + rows] for i in range(0, len(reports), rows)]
    kw = max(len("k"), *(len(str(r.k)) for r in reports))
    tw = max(len("count"), *(len(str(r.total)) for r in reports))
    cell = lambda a, b: f"{a:>{kw}}  {b:>{tw}}"
    lines = ["   ".join(cell("k", "count") for _ in cols).rstrip()]
    for i in range(rows):
        parts = [cell(c[i].k, c[i].total) for c in cols if i < len(c)]
        if parts:
            lines.append("   ".join(parts))
    return "\n".join(lines) + "\n"


FORMATTERS = {"table": format_table, "csv": format_csv, "json": format_json}
