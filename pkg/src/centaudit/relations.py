"""Catalog of centrality relations and their exact evaluation.

Each relation couples an average-path-length, clustering, closeness,
radiality, or stress quantity to another. Relations are evaluated in exact
rational arithmetic; a result is ``equality`` only when both sides agree
exactly. Two catalog entries are marked ``audit-inequality``: their statements
are checked empirically and violations are reported without failing a run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterable, Optional, Union

from .graphs import Graph, induced_subsets, neighborhood
from .metrics import (
    CentralityProfile,
    DistanceMatrix,
    apsp,
    diameter,
    internal_distances,
    mean_pair_distance,
    profile,
)

# result statuses
HOLDS = "holds"
EQUALITY = "equality"
VIOLATED = "violated"
SKIPPED = "skipped-precondition"

# relation kinds
EXACT_IDENTITY = "exact-identity"
INEQUALITY = "inequality"
AUDIT_INEQUALITY = "audit-inequality"

# scopes
PER_VERTEX = "per-vertex"
PER_GRAPH = "per-graph"
PER_SUBGRAPH = "per-subgraph"

Subject = Union[None, int, tuple[int, ...]]


@dataclass(frozen=True)
class RelationSpec:
    id: str
    description: str
    preconditions: tuple[str, ...]
    kind: str
    scope: str

    @property
    def audit(self) -> bool:
        return self.kind == AUDIT_INEQUALITY


@dataclass(frozen=True)
class RelationResult:
    """Outcome of one relation on one subject.

    ``slack`` is oriented so that a satisfied inequality has slack >= 0 (it is
    ``lhs - rhs`` for >=-shaped relations and ``rhs - lhs`` for <=-shaped ones
    and identities). lhs and rhs are reported even when the status is
    ``skipped-precondition``.
    """

    relation_id: str
    subject: Subject
    status: str
    lhs: Fraction
    rhs: Fraction
    slack: Fraction


_CATALOG = (
    RelationSpec(
        "R1",
        "mean ambient distance within an open neighborhood equals 2 minus the "
        "local clustering coefficient",
        ("degree>=2",),
        EXACT_IDENTITY,
        PER_VERTEX,
    ),
    RelationSpec(
        "R2",
        "average clustering equals 2 minus the mean over vertices of the open-"
        "neighborhood mean distance",
        ("min-degree>=2",),
        EXACT_IDENTITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R3",
        "closed-neighborhood mean distance equals ((d-1) * open-neighborhood "
        "mean distance + 2) / (d+1)",
        ("degree>=1",),
        EXACT_IDENTITY,
        PER_VERTEX,
    ),
    RelationSpec(
        "R4",
        "graph mean distance is at least (n-1)/n times the ambient mean "
        "distance after deleting one vertex",
        (),
        INEQUALITY,
        PER_VERTEX,
    ),
    RelationSpec(
        "R5",
        "closed-neighborhood mean distance is at least d/(d+1) times the open-"
        "neighborhood mean distance",
        (),
        INEQUALITY,
        PER_VERTEX,
    ),
    RelationSpec(
        "R6",
        "graph mean distance is at least |S|/n times the ambient mean distance "
        "over any vertex subset S",
        (),
        INEQUALITY,
        PER_SUBGRAPH,
    ),
    RelationSpec(
        "R7",
        "graph mean distance is at least n divided by the sum of closeness "
        "centralities",
        (),
        INEQUALITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R8",
        "graph mean distance equals diameter + 1 minus the mean radiality",
        (),
        EXACT_IDENTITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R9",
        "half the average clustering is at least the mean closed-neighborhood "
        "radiality average minus 2 plus the share of complete neighborhoods",
        (),
        AUDIT_INEQUALITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R10",
        "on geodetic graphs the mean distance equals 1 + total stress / (n(n-1))",
        ("geodetic",),
        EXACT_IDENTITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R10b",
        "the mean distance is at most 1 + total stress / (n(n-1))",
        (),
        INEQUALITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R11",
        "without pendant vertices, average clustering is at least 1 minus the "
        "mean of stress / (d(d-1))",
        ("pendant-free",),
        INEQUALITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R11b",
        "average clustering is at least 1 minus the mean of stress / (d(d-1)) "
        "over non-pendant vertices minus the pendant share",
        (),
        INEQUALITY,
        PER_GRAPH,
    ),
    RelationSpec(
        "R12",
        "on geodetic graphs with degree-monotone stress, 1 minus average "
        "clustering is at most the mean of (L-1)(n-1)/(d(d-1)) over non-pendant "
        "vertices plus the pendant share",
        ("geodetic", "degree-stress-monotone"),
        AUDIT_INEQUALITY,
        PER_GRAPH,
    ),
)

_BY_ID = {spec.id: spec for spec in _CATALOG}

RELATION_IDS = tuple(spec.id for spec in _CATALOG)


def catalog() -> tuple[RelationSpec, ...]:
    """All fourteen relations, in catalog order."""
    return _CATALOG


def relation(relation_id: str) -> RelationSpec:
    try:
        return _BY_ID[relation_id]
    except KeyError:
        raise ValueError(f"unknown relation id {relation_id!r}") from None


def restricted_radiality_sum(g: Graph, i: int) -> Fraction:
    """Mean, over the neighbors of i, of their radiality measured inside the
    closed neighborhood of i (internal distances and internal diameter)."""
    g.check_vertex(i)
    if len(g.adj[i]) == 0:
        raise ValueError(f"vertex {i} has no neighbors")
    view = neighborhood(g, i, closed=True)
    dmat = internal_distances(view)  # closed neighborhoods are always connected
    diam = diameter(dmat)
    k = len(view.members)
    index_of_i = view.members.index(i)
    total = Fraction(0)
    for a in range(k):
        if a == index_of_i:
            continue
        row = dmat.dist[a]
        total += Fraction((k - 1) * (diam + 1) - sum(row), k - 1)
    return total / (k - 1)


def _identity(lhs: Fraction, rhs: Fraction, ok: bool) -> tuple[str, Fraction]:
    slack = rhs - lhs
    if not ok:
        return SKIPPED, slack
    return (EQUALITY if lhs == rhs else VIOLATED), slack


def _at_least(lhs: Fraction, rhs: Fraction, ok: bool) -> tuple[str, Fraction]:
    """Status and slack for a relation shaped lhs >= rhs."""
    slack = lhs - rhs
    if not ok:
        return SKIPPED, slack
    if lhs == rhs:
        return EQUALITY, slack
    return (HOLDS if lhs > rhs else VIOLATED), slack


def _at_most(lhs: Fraction, rhs: Fraction, ok: bool) -> tuple[str, Fraction]:
    """Status and slack for a relation shaped lhs <= rhs."""
    slack = rhs - lhs
    if not ok:
        return SKIPPED, slack
    if lhs == rhs:
        return EQUALITY, slack
    return (HOLDS if lhs < rhs else VIOLATED), slack


def _open_neighborhood_L(g: Graph, d: DistanceMatrix, i: int) -> Fraction:
    return mean_pair_distance(d.dist, sorted(g.adj[i]))


def _closed_neighborhood_L(g: Graph, d: DistanceMatrix, i: int) -> Fraction:
    return mean_pair_distance(d.dist, sorted(g.adj[i] | {i}))


def _stress_over_pairs_sum(prof: CentralityProfile) -> Fraction:
    """Sum over non-pendant vertices of stress / (d(d-1))."""
    total = Fraction(0)
    for deg, str_i in zip(prof.degrees, prof.stress):
        if deg >= 2:
            total += Fraction(str_i, deg * (deg - 1))
    return total


def _degree_stress_monotone(prof: CentralityProfile) -> bool:
    """True when sorting by degree also sorts stress: d_i <= d_j implies Str_i <= Str_j."""
    pairs = sorted(zip(prof.degrees, prof.stress))
    for (da, sa), (db, sb) in zip(pairs, pairs[1:]):
        if sa > sb:
            return False
    return True


def _eval_r1(g, prof, d):
    results = []
    for i in range(g.n):
        lhs = _open_neighborhood_L(g, d, i)
        rhs = 2 - prof.local_clustering[i]
        status, slack = _identity(lhs, rhs, prof.degrees[i] >= 2)
        results.append(RelationResult("R1", i, status, lhs, rhs, slack))
    return results


def _eval_r2(g, prof, d):
    lhs = prof.average_clustering
    rhs = 2 - sum(_open_neighborhood_L(g, d, i) for i in range(g.n)) / Fraction(g.n)
    status, slack = _identity(lhs, rhs, min(prof.degrees) >= 2)
    return [RelationResult("R2", None, status, lhs, rhs, slack)]


def _eval_r3(g, prof, d):
    results = []
    for i in range(g.n):
        deg = prof.degrees[i]
        lhs = _closed_neighborhood_L(g, d, i)
        rhs = ((deg - 1) * _open_neighborhood_L(g, d, i) + 2) / Fraction(deg + 1)
        status, slack = _identity(lhs, rhs, deg >= 1)
        results.append(RelationResult("R3", i, status, lhs, rhs, slack))
    return results


def _eval_r4(g, prof, d):
    lhs = prof.avg_path_length
    results = []
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        rhs = Fraction(g.n - 1, g.n) * mean_pair_distance(d.dist, rest)
        status, slack = _at_least(lhs, rhs, True)
        results.append(RelationResult("R4", v, status, lhs, rhs, slack))
    return results


def _eval_r5(g, prof, d):
    results = []
    for i in range(g.n):
        deg = prof.degrees[i]
        lhs = _closed_neighborhood_L(g, d, i)
        rhs = Fraction(deg, deg + 1) * _open_neighborhood_L(g, d, i)
        status, slack = _at_least(lhs, rhs, True)
        results.append(RelationResult("R5", i, status, lhs, rhs, slack))
    return results


def _eval_r6(g, prof, d, max_subjects=None):
    lhs = prof.avg_path_length
    results = []
    views = induced_subsets(g, min_size=2)
    if max_subjects is not None:
        views = islice(views, max_subjects)
    for view in views:
        rhs = Fraction(len(view.members), g.n) * mean_pair_distance(d.dist, view.members)
        status, slack = _at_least(lhs, rhs, True)
        results.append(RelationResult("R6", view.members, status, lhs, rhs, slack))
    return results


def _eval_r7(g, prof, d):
    lhs = prof.avg_path_length
    rhs = g.n / sum(prof.closeness)
    status, slack = _at_least(lhs, rhs, True)
    return [RelationResult("R7", None, status, lhs, rhs, slack)]


def _eval_r8(g, prof, d):
    lhs = prof.avg_path_length
    rhs = prof.diameter + 1 - sum(prof.radiality) / Fraction(g.n)
    status, slack = _identity(lhs, rhs, True)
    return [RelationResult("R8", None, status, lhs, rhs, slack)]


def _eval_r9(g, prof, d):
    lhs = prof.average_clustering / 2
    complete = sum(prof.complete_neighborhood)
    rhs = (
        sum(restricted_radiality_sum(g, i) for i in range(g.n)) / g.n
        - 2
        + Fraction(complete, g.n)
    )
    status, slack = _at_least(lhs, rhs, True)
    return [RelationResult("R9", None, status, lhs, rhs, slack)]


def _stress_bound(prof: CentralityProfile) -> Fraction:
    n = prof.n
    return 1 + Fraction(sum(prof.stress), n * (n - 1))


def _eval_r10(g, prof, d):
    lhs = prof.avg_path_length
    rhs = _stress_bound(prof)
    status, slack = _identity(lhs, rhs, prof.geodetic)
    return [RelationResult("R10", None, status, lhs, rhs, slack)]


def _eval_r10b(g, prof, d):
    lhs = prof.avg_path_length
    rhs = _stress_bound(prof)
    status, slack = _at_most(lhs, rhs, True)
    return [RelationResult("R10b", None, status, lhs, rhs, slack)]


def _eval_r11(g, prof, d):
    # pendant terms are 0/0 in the statement; report them as 0 so that the
    # skipped results still carry both sides
    lhs = prof.average_clustering
    rhs = 1 - _stress_over_pairs_sum(prof) / g.n
    status, slack = _at_least(lhs, rhs, not any(prof.pendant))
    return [RelationResult("R11", None, status, lhs, rhs, slack)]


def _eval_r11b(g, prof, d):
    lhs = prof.average_clustering
    pendants = sum(prof.pendant)
    rhs = 1 - _stress_over_pairs_sum(prof) / g.n - Fraction(pendants, g.n)
    status, slack = _at_least(lhs, rhs, True)
    return [RelationResult("R11b", None, status, lhs, rhs, slack)]


def _eval_r12(g, prof, d):
    lhs = 1 - prof.average_clustering
    n = g.n
    scale = (prof.avg_path_length - 1) * (n - 1)
    total = Fraction(0)
    for deg in prof.degrees:
        if deg >= 2:
            total += scale / (deg * (deg - 1))
    pendants = sum(prof.pendant)
    rhs = total / n + Fraction(pendants, n)
    ok = prof.geodetic and _degree_stress_monotone(prof)
    status, slack = _at_most(lhs, rhs, ok)
    return [RelationResult("R12", None, status, lhs, rhs, slack)]


_EVALUATORS = {
    "R1": _eval_r1,
    "R2": _eval_r2,
    "R3": _eval_r3,
    "R4": _eval_r4,
    "R5": _eval_r5,
    "R6": _eval_r6,
    "R7": _eval_r7,
    "R8": _eval_r8,
    "R9": _eval_r9,
    "R10": _eval_r10,
    "R10b": _eval_r10b,
    "R11": _eval_r11,
    "R11b": _eval_r11b,
    "R12": _eval_r12,
}


def evaluate(
    spec: RelationSpec,
    g: Graph,
    prof: CentralityProfile,
    d: DistanceMatrix,
    max_subjects: Optional[int] = None,
) -> list[RelationResult]:
    """Evaluate one relation on a connected graph, one result per subject.

    ``max_subjects`` truncates the subset stream of per-subgraph relations
    (used by the miner to bound work per graph); other scopes ignore it.
    """
    if g.n < 2:
        raise ValueError("relation evaluation needs at least 2 vertices")
    evaluator = _EVALUATORS[spec.id]
    if spec.scope == PER_SUBGRAPH:
        return evaluator(g, prof, d, max_subjects)
    return evaluator(g, prof, d)


def evaluate_all(
    g: Graph,
    relation_ids: Iterable[str] | None = None,
    max_subjects: Optional[int] = None,
) -> list[RelationResult]:
    """Convenience wrapper: profile the graph and evaluate the given relations
    (default: the whole catalog) in catalog order."""
    d = apsp(g)
    prof = profile(g, d)
    ids = RELATION_IDS if relation_ids is None else tuple(relation_ids)
    results = []
    for rid in ids:
        results.extend(evaluate(relation(rid), g, prof, d, max_subjects))
    return results
