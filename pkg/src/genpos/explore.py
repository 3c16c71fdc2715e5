"""Exploratory sweeps over pairs of factor graphs.

``problem-1`` looks at direct products G x H: whenever the product is
connected it records whether gp equals omega of the strong resolving graph
and what the diameter is, flagging pairs with equality but diameter other
than 2.  ``problem-2`` looks at strong products and records whether
gp(G x H) equals gp(G) gp(H); a value below the product counts as a
violation of the known lower bound.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Optional

from . import families as fam
from .errors import InvalidParameter
from .gp import clique_number, gp_number
from .graph import diameter, is_connected
from .io import emit_graph6, parse_graph6
from .products import direct_product, strong_product
from .resolving import strong_resolving_graph

PROBLEMS = ("problem-1", "problem-2")


@dataclass
class Catalog:
    source: str
    graphs: list  # (name, Graph)
    rejected: int = 0


@dataclass(frozen=True)
class ExploreBudget:
    max_pairs: Optional[int] = None  # stop after examining this many pairs
    max_order: int = 64  # skip products larger than this


@dataclass
class ExploreReport:
    problem: str
    examined: int = 0
    skipped: int = 0
    counts: dict = field(default_factory=dict)
    records: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    strict_examples: list = field(default_factory=list)
    cursor: Optional[int] = None  # index to resume from; None once the sweep is complete
    rejected: int = 0

    @property
    def complete(self) -> bool:
        return self.cursor is None

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "complete": self.complete,
            "cursor": self.cursor,
            "examined": self.examined,
            "skipped": self.skipped,
            "rejected_inputs": self.rejected,
            "counts": dict(sorted(self.counts.items())),
            "violations": self.violations,
            "records": self.records,
        }


_RANGE = re.compile(r"^(\d+)(?:\.\.(\d+))?$")


def load_catalog(source: str) -> Catalog:
    """Resolve a catalog name or a graph6 file.

    Built-in names: ``connected:N`` (every connected graph of order <= N),
    ``connected=N`` (order exactly N) and ``FAMILY:a..b`` for the one-parameter
    families (e.g. ``complete:3..5``).  Anything naming an existing file is
    read as graph6, one graph per line; disconnected entries are rejected.
    """
    if os.path.isfile(source):
        graphs, rejected = [], 0
        with open(source) as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                g = parse_graph6(line)
                if is_connected(g):
                    graphs.append((f"{os.path.basename(source)}:{lineno}", g))
                else:
                    rejected += 1
        return Catalog(source, graphs, rejected)
    name, sep, arg = source.partition(":")
    if name.startswith("connected="):
        n = int(name.split("=", 1)[1])
        return Catalog(source, [(emit_graph6(g), g) for g in fam.enumerate_connected_graphs(n)])
    m = _RANGE.match(arg) if sep else None
    if m is None:
        raise InvalidParameter(f"unknown catalog {source!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    if name == "connected":
        return Catalog(source, [(emit_graph6(g), g) for g in fam.connected_graphs_up_to(hi)])
    if name not in fam.family_names():
        raise InvalidParameter(f"unknown catalog family {name!r}")
    return Catalog(source, [(f"{name}:{k}", fam.from_spec(f"{name}:{k}")) for k in range(lo, hi + 1)])


def _problem_1(g, h, report: ExploreReport, names, budget):
    if g.n * h.n > budget.max_order:
        report.skipped += 1
        return
    prod, _ = direct_product(g, h)
    if prod.n == 1:
        report.skipped += 1
        report.counts["trivial"] = report.counts.get("trivial", 0) + 1
        return
    if not is_connected(prod):
        report.skipped += 1
        report.counts["disconnected"] = report.counts.get("disconnected", 0) + 1
        return
    gp = gp_number(prod).value
    om = clique_number(strong_resolving_graph(prod)).value
    diam = diameter(prod)
    equal = gp == om
    kind = "equal" if equal else "strict"
    report.counts[kind] = report.counts.get(kind, 0) + 1
    rec = {"G": names[0], "H": names[1], "gp": gp, "omega_sr": om, "diam": diam}
    report.records.append(rec)
    if equal and diam != 2:
        report.violations.append(rec)


def _problem_2(g, h, report: ExploreReport, names, budget):
    if g.n * h.n > budget.max_order:
        report.skipped += 1
        return
    a, b = gp_number(g).value, gp_number(h).value
    gp = gp_number(strong_product(g, h)[0]).value
    kind = "equal" if gp == a * b else ("strict" if gp > a * b else "violation")
    report.counts[kind] = report.counts.get(kind, 0) + 1
    rec = {"G": names[0], "H": names[1], "gp_G": a, "gp_H": b, "gp": gp, "relation": kind}
    report.records.append(rec)
    if kind == "violation":
        report.violations.append(rec)
    elif kind == "strict":
        report.strict_examples.append([names[0], names[1], gp, a * b])


def explore_conjecture(problem: str, cat_g: Catalog, cat_h: Catalog,
                       budget: ExploreBudget = ExploreBudget(), cursor: int = 0) -> ExploreReport:
    """Sweep pairs in lexicographic order starting at ``cursor``.

    When ``budget.max_pairs`` runs out the report is partial and its
    ``cursor`` tells where to resume.
    """
    if problem not in PROBLEMS:
        raise InvalidParameter(f"unknown problem {problem!r}; choose from {', '.join(PROBLEMS)}")
    step = _problem_1 if problem == "problem-1" else _problem_2
    report = ExploreReport(problem, rejected=cat_g.rejected + (cat_h.rejected if cat_h is not cat_g else 0))
    total = len(cat_g.graphs) * len(cat_h.graphs)
    k = cursor
    while k < total:
        if budget.max_pairs is not None and report.examined >= budget.max_pairs:
            report.cursor = k
            return report
        (ng, g), (nh, h) = cat_g.graphs[k // len(cat_h.graphs)], cat_h.graphs[k % len(cat_h.graphs)]
        step(g, h, report, (ng, nh), budget)
        report.examined += 1
        k += 1
    return report
