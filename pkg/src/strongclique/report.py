"""Per-graph property reports and JSON-lines emission."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .cliques import (
    chromatic_number,
    clique_cover_number,
    clique_number,
    independence_number,
    maximal_cliques,
    maximal_independent_sets,
)
from .graph import Graph, valency
from .io import to_graph6
from .perm import is_vertex_transitive
from .strong import (
    cis_by_enumeration,
    cis_by_strong_pair,
    MethodDisagreement,
    has_strong_clique,
    localizable_partition,
    strong_cliques,
)

# Field order here is the key order of every emitted JSON line.
REPORT_FIELDS = (
    "graph_id",
    "graph6",
    "n",
    "valency",
    "omega",
    "alpha",
    "chi",
    "theta",
    "n_max_cliques",
    "n_mis",
    "vertex_transitive",
    "well_covered",
    "co_well_covered",
    "cis",
    "has_strong_clique",
    "localizable",
    "witnesses",
)


@dataclass
class PropertyReport:
    graph_id: str
    graph6: str
    n: int
    valency: int | None
    omega: int
    alpha: int
    chi: int | None
    theta: int | None
    n_max_cliques: int
    n_mis: int
    vertex_transitive: bool
    well_covered: bool
    co_well_covered: bool
    cis: bool
    has_strong_clique: bool
    localizable: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> str:
        d = asdict(self)
        return json.dumps({k: d[k] for k in REPORT_FIELDS}, separators=(",", ":"), ensure_ascii=False)

    def consistency_errors(self) -> list[str]:
        errs = []
        if self.localizable and not self.has_strong_clique:
            errs.append("localizable without a strong clique")
        if self.vertex_transitive and self.cis and not (self.well_covered and self.co_well_covered):
            errs.append("vertex-transitive CIS graph not (co-)well-covered")
        if self.chi is not None and self.omega > self.chi:
            errs.append("clique number exceeds chromatic number")
        if self.theta is not None and self.alpha > self.theta:
            errs.append("independence number exceeds clique cover number")
        return errs


def analyze(graph_id: str, g: Graph, colorings: bool = True) -> PropertyReport:
    """Compute every invariant of ``g``; ``colorings=False`` skips χ and θ."""
    cliques = maximal_cliques(g)
    mis = maximal_independent_sets(g)
    vt = is_vertex_transitive(g)
    strong = strong_cliques(g, cliques)
    if vt and strong:
        w = max(len(c) for c in cliques)
        assert all(len(c) == w for c in strong)
    first = has_strong_clique(g, vt)
    if (first is None) != (not strong):
        raise MethodDisagreement("strong-clique search disagrees with full scan")
    part = localizable_partition(g, strong) if strong else None
    cis = cis_by_enumeration(g)
    if vt and g.n and cis != cis_by_strong_pair(g):
        raise MethodDisagreement(f"{graph_id}: CIS methods disagree")
    witnesses: dict = {}
    if first is not None:
        witnesses["strong_clique"] = list(first)
    if part is not None:
        witnesses["partition"] = [list(c) for c in part]
    clique_sizes = {len(c) for c in cliques}
    mis_sizes = {len(i) for i in mis}
    return PropertyReport(
        graph_id=graph_id,
        graph6=to_graph6(g),
        n=g.n,
        valency=valency(g),
        omega=clique_number(g),
        alpha=independence_number(g),
        chi=chromatic_number(g) if colorings else None,
        theta=clique_cover_number(g) if colorings else None,
        n_max_cliques=len(cliques),
        n_mis=len(mis),
        vertex_transitive=vt,
        well_covered=len(mis_sizes) <= 1,
        co_well_covered=len(clique_sizes) <= 1,
        cis=cis,
        has_strong_clique=first is not None,
        localizable=part is not None,
        witnesses=witnesses,
    )


def _analyze_star(args):
    return analyze(*args)


def analyze_many(
    items: Iterable[tuple[str, Graph]], jobs: int = 1, colorings: bool = True, sort: bool = True
) -> list[PropertyReport]:
    """Analyse independently, optionally in a process pool; sorted by graph id
    unless ``sort`` is false (then in input order)."""
    work = [(gid, g, colorings) for gid, g in items]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_analyze_star, work, chunksize=4))
    else:
        reports = [analyze(*w) for w in work]
    return sorted(reports, key=lambda r: r.graph_id) if sort else reports


def emit(reports: Sequence[PropertyReport], path: str | Path | None) -> str:
    """Write one JSON object per line to ``path`` (if given); return the text."""
    text = "".join(r.to_json() + "\n" for r in reports)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
