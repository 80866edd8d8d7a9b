"""Command-line interface: compute, check, mine, and gen.

Output is a stable report document (text or JSON) suitable for scripting and
regression testing: identical invocations produce byte-identical documents.
Rationals are serialized as "numerator/denominator" strings in lowest terms;
the accompanying ``*_approx`` decimal fields are display-only.

Exit codes: 0 success (audit findings included), 2 usage or parse error,
3 disconnected input graph, 4 violation of a non-audit relation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import relations as rel
from .graphs import EdgeListError, Graph, generate, parse_edge_list, serialize_edge_list
from .metrics import DisconnectedGraphError, apsp, profile
from .mining import (
    DEFAULT_WITNESS_CAP,
    ConnectivityRetryError,
    MiningReport,
    Witness,
    mine_exhaustive,
    mine_random,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_VIOLATION = 4


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational` (also accepts bare integers)."""
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def _rat_fields(name: str, value: Fraction | None) -> list[tuple[str, object]]:
    if value is None:
        return [(name, None), (f"{name}_approx", None)]
    return [(name, format_rational(value)), (f"{name}_approx", float(value))]


def _subject_json(subject: rel.Subject):
    if subject is None:
        return None
    if isinstance(subject, int):
        return {"vertex": subject}
    return {"subset": list(subject)}


def _subject_text(subject: rel.Subject) -> str:
    if subject is None:
        return "graph"
    if isinstance(subject, int):
        return f"vertex {subject}"
    return "subset {" + ",".join(str(v) for v in subject) + "}"


# ---------------------------------------------------------------------------
# payload builders
# ---------------------------------------------------------------------------

def _profile_payload(g: Graph) -> dict:
    prof = profile(g, apsp(g))
    payload: dict[str, object] = {"n": g.n, "m": g.m, "diameter": prof.diameter}
    payload.update(_rat_fields("L", prof.avg_path_length))
    payload.update(_rat_fields("C_WS", prof.average_clustering))
    payload.update(_rat_fields("C_global", prof.global_clustering))
    payload["geodetic"] = prof.geodetic
    payload["even_cycle_free"] = prof.even_cycle_free
    vertices = []
    for v in range(g.n):
        entry: dict[str, object] = {"id": v, "degree": prof.degrees[v]}
        entry.update(_rat_fields("clustering", prof.local_clustering[v]))
        entry.update(_rat_fields("closeness", prof.closeness[v]))
        entry.update(_rat_fields("radiality", prof.radiality[v]))
        entry["stress"] = prof.stress[v]
        entry["pendant"] = prof.pendant[v]
        entry["complete_neighborhood"] = prof.complete_neighborhood[v]
        vertices.append(entry)
    payload["vertices"] = vertices
    return payload


def _result_payload(result: rel.RelationResult) -> dict:
    spec = rel.relation(result.relation_id)
    entry: dict[str, object] = {
        "relation": result.relation_id,
        "kind": spec.kind,
        "audit": spec.audit,
        "subject": _subject_json(result.subject),
        "status": result.status,
    }
    entry.update(_rat_fields("lhs", result.lhs))
    entry.update(_rat_fields("rhs", result.rhs))
    entry.update(_rat_fields("slack", result.slack))
    return entry


def _check_payload(g: Graph, results: list[rel.RelationResult]) -> dict:
    non_audit = sum(
        1
        for r in results
        if r.status == rel.VIOLATED and not rel.relation(r.relation_id).audit
    )
    audit = sum(
        1
        for r in results
        if r.status == rel.VIOLATED and rel.relation(r.relation_id).audit
    )
    return {
        "graph": {"n": g.n, "m": g.m},
        "results": [_result_payload(r) for r in results],
        "non_audit_violations": non_audit,
        "audit_violations": audit,
    }


def _witness_payload(w: Witness, with_sides: bool = True) -> dict:
    entry: dict[str, object] = {
        "n": w.n,
        "edges": [[u, v] for u, v in w.edges],
        "subject": _subject_json(w.subject),
    }
    if with_sides:
        entry.update(_rat_fields("lhs", w.lhs))
        entry.update(_rat_fields("rhs", w.rhs))
    return entry


def _mine_payload(report: MiningReport) -> dict:
    tallies = {}
    for rid in report.relation_ids:
        tally = report.tallies[rid]
        tallies[rid] = {
            "kind": rel.relation(rid).kind,
            "holds": tally.holds,
            "equality": tally.equality,
            "violated": tally.violated,
            "skipped": tally.skipped,
            "witnesses": [_witness_payload(w) for w in tally.witnesses],
        }
    audit = report.geodetic_audit
    return {
        "population": report.population,
        "graphs_evaluated": report.graphs_evaluated,
        "witness_cap": report.witness_cap,
        "relations": tallies,
        "geodetic_audit": {
            "graphs": audit.graphs,
            "ecf_and_geodetic": audit.ecf_and_geodetic,
            "geodetic_not_ecf": audit.geodetic_not_ecf,
            "ecf_not_geodetic": audit.ecf_not_geodetic,
            "neither": audit.neither,
            "geodetic_not_ecf_witnesses": [
                _witness_payload(w, with_sides=False)
                for w in audit.geodetic_not_ecf_witnesses
            ],
            "ecf_not_geodetic_witnesses": [
                _witness_payload(w, with_sides=False)
                for w in audit.ecf_not_geodetic_witnesses
            ],
        },
        "non_audit_violations": report.non_audit_violations,
        "audit_violations": report.audit_violations,
    }


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _document(argv: Sequence[str], payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": list(argv), "payload": payload}


def _render_json(argv: Sequence[str], payload: dict) -> str:
    return json.dumps(_document(argv, payload), indent=2) + "\n"


def _fmt_value(value) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _render_profile_text(argv, payload: dict) -> str:
    lines = [
        f"# centaudit compute (schema {SCHEMA_VERSION})",
        f"graph: n={payload['n']} m={payload['m']}",
        f"diameter: {payload['diameter']}",
        f"L: {payload['L']}",
        f"C_WS: {payload['C_WS']}",
        f"C_global: {_fmt_value(payload['C_global'])}",
        f"geodetic: {_fmt_value(payload['geodetic'])}",
        f"even_cycle_free: {_fmt_value(payload['even_cycle_free'])}",
    ]
    for v in payload["vertices"]:
        lines.append(
            f"vertex {v['id']}: degree={v['degree']} clustering={v['clustering']} "
            f"closeness={v['closeness']} radiality={v['radiality']} "
            f"stress={v['stress']} pendant={_fmt_value(v['pendant'])} "
            f"complete_neighborhood={_fmt_value(v['complete_neighborhood'])}"
        )
    return "".join(line + "\n" for line in lines)


def _render_check_text(argv, payload: dict) -> str:
    lines = [f"# centaudit check (schema {SCHEMA_VERSION})"]
    lines.append(f"graph: n={payload['graph']['n']} m={payload['graph']['m']}")
    for r in payload["results"]:
        flag = " [audit]" if r["audit"] else ""
        lines.append(
            f"{r['relation']} {_subject_text_from_json(r['subject'])}: {r['status']}"
            f" lhs={r['lhs']} rhs={r['rhs']} slack={r['slack']}{flag}"
        )
    lines.append(
        f"violations: non_audit={payload['non_audit_violations']} "
        f"audit={payload['audit_violations']}"
    )
    return "".join(line + "\n" for line in lines)


def _subject_text_from_json(subject) -> str:
    if subject is None:
        return "graph"
    if "vertex" in subject:
        return f"vertex {subject['vertex']}"
    return "subset {" + ",".join(str(v) for v in subject["subset"]) + "}"


def _render_mine_text(argv, payload: dict) -> str:
    pop = payload["population"]
    if pop["kind"] == "exhaustive":
        pop_text = f"exhaustive n={pop['n_min']}..{pop['n_max']}"
    else:
        params = " ".join(f"{k}={v}" for k, v in pop["params"].items())
        pop_text = (
            f"random model={pop['model']} {params} trials={pop['trials']} "
            f"seed={pop['seed']}"
        )
    lines = [
        f"# centaudit mine (schema {SCHEMA_VERSION})",
        f"population: {pop_text}",
        f"graphs: {payload['graphs_evaluated']}",
    ]
    for rid, tally in payload["relations"].items():
        flag = " [audit]" if tally["kind"] == "audit-inequality" else ""
        lines.append(
            f"{rid}: holds={tally['holds']} equality={tally['equality']} "
            f"violated={tally['violated']} skipped={tally['skipped']}{flag}"
        )
        for w in tally["witnesses"]:
            edges = ",".join(f"{u}-{v}" for u, v in w["edges"])
            lines.append(
                f"  witness n={w['n']} edges={edges} "
                f"subject={_subject_text_from_json(w['subject'])} "
                f"lhs={w['lhs']} rhs={w['rhs']}"
            )
    audit = payload["geodetic_audit"]
    lines.append(
        "geodetic_audit: ecf_and_geodetic={0} geodetic_not_ecf={1} "
        "ecf_not_geodetic={2} neither={3}".format(
            audit["ecf_and_geodetic"],
            audit["geodetic_not_ecf"],
            audit["ecf_not_geodetic"],
            audit["neither"],
        )
    )
    for w in audit["geodetic_not_ecf_witnesses"]:
        edges = ",".join(f"{u}-{v}" for u, v in w["edges"])
        lines.append(f"  geodetic_not_ecf witness n={w['n']} edges={edges}")
    for w in audit["ecf_not_geodetic_witnesses"]:
        edges = ",".join(f"{u}-{v}" for u, v in w["edges"])
        lines.append(f"  ecf_not_geodetic witness n={w['n']} edges={edges}")
    lines.append(
        f"violations: non_audit={payload['non_audit_violations']} "
        f"audit={payload['audit_violations']}"
    )
    return "".join(line + "\n" for line in lines)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def _cmd_compute(args, argv, out) -> int:
    g = _read_graph(args.input)
    payload = _profile_payload(g)
    if args.format == "json":
        out.write(_render_json(argv, payload))
    else:
        out.write(_render_profile_text(argv, payload))
    return EXIT_OK


def _parse_relation_ids(text: str) -> tuple[str, ...]:
    if text == "all":
        return rel.RELATION_IDS
    ids = tuple(token.strip() for token in text.split(",") if token.strip())
    if not ids:
        raise ValueError("no relation ids given")
    for rid in ids:
        rel.relation(rid)
    return ids


def _cmd_check(args, argv, out) -> int:
    relation_ids = _parse_relation_ids(args.relations)
    g = _read_graph(args.input)
    results = rel.evaluate_all(g, relation_ids)
    payload = _check_payload(g, results)
    if args.format == "json":
        out.write(_render_json(argv, payload))
    else:
        out.write(_render_check_text(argv, payload))
    return EXIT_OK if payload["non_audit_violations"] == 0 else EXIT_VIOLATION


def _model_params(args) -> dict:
    params = {}
    for key in ("n", "k", "leaves"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    if getattr(args, "p", None) is not None:
        params["p"] = args.p
    model = args.model
    required = {
        "path": {"n"},
        "cycle": {"n"},
        "star": {"leaves"},
        "complete": {"n"},
        "gnp": {"n", "p"},
        "watts_strogatz": {"n", "k", "p"},
    }[model]
    missing = required - set(params)
    if missing:
        raise ValueError(f"model {model!r} requires {sorted(missing)}")
    extra = set(params) - required
    if extra:
        raise ValueError(f"model {model!r} does not take {sorted(extra)}")
    return params


def _cmd_mine(args, argv, out) -> int:
    relation_ids = _parse_relation_ids(args.relations)
    if (args.n_max is None) == (args.model is None):
        raise ValueError("give exactly one of --n-max (exhaustive) or --model (random)")
    if args.n_max is not None:
        report = mine_exhaustive(
            args.n_max,
            relation_ids=relation_ids,
            witness_cap=args.witness_cap,
            workers=args.workers,
        )
    else:
        if args.trials is None:
            raise ValueError("--model mining requires --trials")
        report = mine_random(
            args.model,
            _model_params(args),
            trials=args.trials,
            seed=args.seed,
            relation_ids=relation_ids,
            witness_cap=args.witness_cap,
            workers=args.workers,
        )
    payload = _mine_payload(report)
    if args.format == "json":
        out.write(_render_json(argv, payload))
    else:
        out.write(_render_mine_text(argv, payload))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_gen(args, argv, out) -> int:
    g = generate(args.model, _model_params(args), args.seed)
    text = serialize_edge_list(g)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centaudit",
        description="Exact graph centralities, relation checking, and counterexample mining.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="centrality profile of one graph")
    compute.add_argument("input", help="edge-list file, or - for stdin")
    compute.add_argument("--format", choices=("text", "json"), default="text")
    compute.set_defaults(func=_cmd_compute)

    check = sub.add_parser("check", help="evaluate catalog relations on one graph")
    check.add_argument("input", help="edge-list file, or - for stdin")
    check.add_argument("--relations", default="all", help="comma-separated ids or 'all'")
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.set_defaults(func=_cmd_check)

    mine = sub.add_parser("mine", help="verify relations over a graph population")
    mine.add_argument("--n-max", type=int, default=None, dest="n_max",
                      help="exhaustive mining over all connected graphs with 2..N vertices")
    mine.add_argument("--model", choices=("path", "cycle", "star", "complete", "gnp",
                                          "watts_strogatz"), default=None)
    mine.add_argument("--trials", type=int, default=None)
    mine.add_argument("--seed", type=int, default=0)
    mine.add_argument("--n", type=int, default=None)
    mine.add_argument("--k", type=int, default=None)
    mine.add_argument("--p", type=float, default=None)
    mine.add_argument("--leaves", type=int, default=None)
    mine.add_argument("--relations", default="all")
    mine.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    mine.add_argument("--workers", type=int, default=1)
    mine.add_argument("--format", choices=("text", "json"), default="text")
    mine.set_defaults(func=_cmd_mine)

    gen = sub.add_parser("gen", help="write a generated graph as an edge list")
    gen.add_argument("--model", required=True,
                     choices=("path", "cycle", "star", "complete", "gnp", "watts_strogatz"))
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--p", type=float, default=None)
    gen.add_argument("--leaves", type=int, default=None)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("output", nargs="?", default="-", help="output path, or - for stdout")
    gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv, out)
    except EdgeListError as exc:
        print(f"centaudit: parse error: {exc}", file=err)
        return EXIT_USAGE
    except DisconnectedGraphError as exc:
        print(f"centaudit: {exc}", file=err)
        return EXIT_DISCONNECTED
    except (ValueError, ConnectivityRetryError) as exc:
        print(f"centaudit: {exc}", file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"centaudit: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
