#!/usr/bin/env python3
"""Walk the relation catalog over a gallery of small named graphs.

Every relation couples the average shortest path length to a clustering,
closeness, radiality, or stress quantity. Identities must land on exact
equality; inequalities may be strict or tight; audit-mode relations are
statements checked empirically, and the star promptly violates one of them.
"""

from centaudit import Graph, catalog, complete_graph, cycle_graph, evaluate_all, path_graph, star_graph

GALLERY = [
    ("triangle K3", complete_graph(3)),
    ("path P4", path_graph(4)),
    ("star, 3 leaves", star_graph(3)),
    ("cycle C4", cycle_graph(4)),
    ("cycle C5", cycle_graph(5)),
    ("complete K4", complete_graph(4)),
    ("paw (triangle + tail)", Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])),
    ("bowtie (two triangles)", Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])),
]

KINDS = {spec.id: spec.kind for spec in catalog()}

print("relation catalog:")
for spec in catalog():
    print(f"  {spec.id:<5} [{spec.kind}] {spec.description}")

for name, g in GALLERY:
    print(f"\n{name}  (n={g.n}, m={g.m})")
    results = evaluate_all(g)
    # per-vertex and per-subset relations are summarized; per-graph ones shown in full
    by_relation: dict[str, list] = {}
    for r in results:
        by_relation.setdefault(r.relation_id, []).append(r)
    for rid, rs in by_relation.items():
        audit = " [audit]" if KINDS[rid] == "audit-inequality" else ""
        if len(rs) == 1 and rs[0].subject is None:
            r = rs[0]
            print(f"  {rid:<5} {r.status:<21} lhs={r.lhs} rhs={r.rhs}{audit}")
        else:
            counts: dict[str, int] = {}
            for r in rs:
                counts[r.status] = counts.get(r.status, 0) + 1
            summary = " ".join(f"{status}={count}" for status, count in sorted(counts.items()))
            print(f"  {rid:<5} {len(rs)} subjects: {summary}{audit}")

print()
print("note the star's R12 line: the audited statement evaluates to lhs=1 vs")
print("rhs=13/16, an exact violation. Audit findings never fail a run; they")
print("are recorded so the statement's scope can be mapped empirically.")
