"""Command-line front door: construct, verify, oracle, gen, stress.

Exit code contract: 0 success, 1 verification failure, 2 input or schema
error, 3 internal invariant violation (an implementation bug, never a legal
input), 4 resource refusal (oracle cap).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import oracle as oracle_mod
from .construction import ConstructionTrace, construct
from .generators import GeneratorConfig, enumerate_caterpillars, random_caterpillar
from .graph_core import (
    Caterpillar,
    InputError,
    InvariantViolation,
    OrientedLabeling,
    ResourceLimitError,
    VertexClass,
    format_leaf_counts,
    parse_caterpillar,
    parse_leaf_counts,
)
from .verification import check_claims, check_weight_classes, oriented_sums, verify_antimagic

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_REFUSED = 4


@dataclass
class RunRecord:
    line: str
    m: int
    r: int
    k1: int
    k2: int
    n_l: int
    n_h: int
    seed: int
    antimagic: bool
    violations: list[str] = field(default_factory=list)
    wall_time: float = 0.0


def _read_instances(path: str | None) -> list[tuple[int, Caterpillar]]:
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            out.append((lineno, parse_caterpillar(parse_leaf_counts(stripped))))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc
    return out


def labeling_to_json(ol: OrientedLabeling, trace: ConstructionTrace) -> dict:
    return {
        "n": ol.n,
        "arcs": [
            {"from": tail, "to": head, "label": lbl}
            for (tail, head), lbl in zip(ol.arcs, ol.labels)
        ],
        "sums": {str(v): s for v, s in sorted(oriented_sums(ol).items())},
        "classes": {str(v): cls.value for v, cls in sorted(trace.classes.items())},
        "k1": trace.partition.k1,
        "k2": trace.partition.k2,
    }


def _render_dot(ol: OrientedLabeling, trace: ConstructionTrace) -> str:
    sums = oriented_sums(ol)
    lines = ["digraph antimagic {"]
    for v in range(ol.n):
        style = ""
        if trace.classes[v] is VertexClass.LIGHT:
            style = ', style=filled, fillcolor="lightgrey"'
        lines.append(f'  v{v} [label="{v}\\ns={sums[v]}"{style}];')
    for (tail, head), lbl in zip(ol.arcs, ol.labels):
        lines.append(f'  v{tail} -> v{head} [label="{lbl}"];')
    lines.append("}")
    return "\n".join(lines)


def _render_tsv(ol: OrientedLabeling, trace: ConstructionTrace) -> str:
    sums = oriented_sums(ol)
    rows = [f"arc\t{tail}\t{head}\t{lbl}" for (tail, head), lbl in zip(ol.arcs, ol.labels)]
    rows += [f"sum\t{v}\t{sums[v]}" for v in range(ol.n)]
    rows += [f"class\t{v}\t{trace.classes[v].value}" for v in range(ol.n)]
    return "\n".join(rows)


def cmd_construct(args: argparse.Namespace) -> int:
    instances = _read_instances(args.input)
    all_ok = True
    for _, c in instances:
        ol, trace = construct(c, seed=args.seed)
        ok = verify_antimagic(ol)
        all_ok &= ok
        if args.format == "json":
            print(json.dumps(labeling_to_json(ol, trace)))
        elif args.format == "dot":
            print(_render_dot(ol, trace))
        else:
            print(_render_tsv(ol, trace))
    return EXIT_OK if all_ok else EXIT_VERIFY_FAIL


def _labeling_from_json(doc: dict) -> OrientedLabeling:
    try:
        n = int(doc["n"])
        arcs = tuple((int(a["from"]), int(a["to"])) for a in doc["arcs"])
        labels = tuple(int(a["label"]) for a in doc["arcs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad labeling JSON: {exc}") from exc
    try:
        return OrientedLabeling(n=n, arcs=arcs, labels=labels)
    except InputError as exc:
        raise InputError(f"labels_not_bijection: {exc}") from exc


def _class_violations(ol: OrientedLabeling, doc: dict) -> list[str]:
    """Interval checks reconstructible from the JSON alone (no trace)."""
    if "classes" not in doc or "k1" not in doc or "k2" not in doc:
        return []
    classes = {int(v): str(c) for v, c in doc["classes"].items()}
    k1, k2, m = int(doc["k1"]), int(doc["k2"]), ol.m
    weights = {v: abs(s) for v, s in oriented_sums(ol).items()}
    leaf_neighbors: dict[int, bool] = {v: False for v in range(ol.n)}
    for tail, head in ol.arcs:
        if classes.get(head) == "leaf":
            leaf_neighbors[tail] = True
        if classes.get(tail) == "leaf":
            leaf_neighbors[head] = True
    violations = []

    def ws(names: set[str]) -> list[int]:
        return [weights[v] for v, c in classes.items() if c in names]

    light = ws({"light"})
    if light and not all(0 <= w <= k1 - 1 for w in light):
        violations.append("light_range")
    ones = ws({"leaf", "path_end_leaf"})
    if ones and not all(k1 <= w <= k2 + 1 for w in ones):
        violations.append("degree_one_range")
    ends = ws({"path_end_leaf"})
    if ends and k1 not in ends:
        violations.append("u0_weight")
    for v, c in classes.items():
        if c != "heavy":
            continue
        if leaf_neighbors[v]:
            if weights[v] < m + k1 + 1:
                violations.append("heavy_with_heavy_edge_range")
        elif not k2 + 2 <= weights[v] <= m + k1:
            violations.append("heavy_no_heavy_edge_range")
    for name, group in (("light", light), ("degree_one", ones)):
        if len(set(group)) != len(group):
            violations.append(f"{name}_not_distinct")
    return sorted(set(violations))


def cmd_verify(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.input in (None, "-") else open(args.input, encoding="utf-8").read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from exc
    ol = _labeling_from_json(doc)
    sums = oriented_sums(ol)
    violations = []
    if not verify_antimagic(ol):
        violations.append("duplicate_sum")
    if "sums" in doc:
        declared = {int(v): int(s) for v, s in doc["sums"].items()}
        if declared != sums:
            violations.append("declared_sums_mismatch")
    violations += _class_violations(ol, doc)
    report = {
        "sums": {str(v): s for v, s in sorted(sums.items())},
        "antimagic": "duplicate_sum" not in violations,
        "violations": violations,
    }
    print(json.dumps(report))
    return EXIT_OK if not violations else EXIT_VERIFY_FAIL


def _oracle_cap(args: argparse.Namespace) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("ANTIMAGIC_ORACLE_CAP")
    return int(env) if env else oracle_mod.DEFAULT_CAP


def cmd_oracle(args: argparse.Namespace) -> int:
    cap = _oracle_cap(args)
    instances = _read_instances(args.input)
    all_found = True
    for _, c in instances:
        count_all = True if args.count_all else None
        res = oracle_mod.exhaustive_search(c.tree, cap=cap, count_all=count_all)
        found = res.witness is not None
        all_found &= found
        doc = {
            "input": format_leaf_counts(c),
            "m": res.m,
            "orientations_with_solution": res.orientations_with_solution,
            "total_antimagic_pairs": res.total_antimagic_pairs,
            "pairs_enumerated": res.pairs_enumerated,
            "witness": None
            if res.witness is None
            else [
                {"from": t, "to": h, "label": l}
                for (t, h), l in zip(res.witness.arcs, res.witness.labels)
            ],
        }
        print(json.dumps(doc))
    return EXIT_OK if all_found else EXIT_VERIFY_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    if args.random:
        rng = random.Random(args.seed)
        for _ in range(args.count):
            cfg = GeneratorConfig(
                seed=args.seed,
                spine_range=(args.spine_min, args.spine_max),
                leaf_budget=args.leaf_budget,
            )
            print(format_leaf_counts(random_caterpillar(cfg, rng=rng)))
    else:
        for c in enumerate_caterpillars(args.max_n):
            print(format_leaf_counts(c))
    return EXIT_OK


def _stress_one(task: tuple[int, int, int]) -> RunRecord:
    index, master_seed, max_m = task
    rng = random.Random(hash((master_seed, index)))
    target_m = rng.randint(2, max_m)
    s = rng.randint(1, max(1, target_m // 2))
    budget = max(2, target_m - (s - 1))
    cfg = GeneratorConfig(seed=0, spine_range=(s, s), leaf_budget=budget)
    c = random_caterpillar(cfg, rng=rng)
    start = time.perf_counter()
    ol, trace = construct(c, seed=master_seed + index)
    ok = verify_antimagic(ol)
    report = check_weight_classes(ol, trace)
    violations = list(report.violations)
    if not ok:
        violations.append("duplicate_sum")
    violations += [name for name, passed in check_claims(c, ol, trace) if not passed]
    return RunRecord(
        line=format_leaf_counts(c),
        m=c.m,
        r=c.r,
        k1=trace.partition.k1,
        k2=trace.partition.k2,
        n_l=trace.n_l,
        n_h=trace.n_h,
        seed=master_seed + index,
        antimagic=ok,
        violations=violations,
        wall_time=time.perf_counter() - start,
    )


def cmd_stress(args: argparse.Namespace) -> int:
    tasks = [(i, args.seed, args.max_m) for i in range(args.count)]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_stress_one, tasks))  # map keeps input order
    else:
        records = [_stress_one(t) for t in tasks]
    bad = [r for r in records if r.violations]
    for r in bad:
        print(json.dumps({"line": r.line, "seed": r.seed, "violations": r.violations}))
    summary = {
        "instances": len(records),
        "max_m": max((r.m for r in records), default=0),
        "violations": sum(len(r.violations) for r in records),
    }
    print(json.dumps(summary))
    # timing goes to stderr so stdout stays byte-identical across repeat runs
    mean = sum(r.wall_time for r in records) / len(records) if records else 0.0
    print(f"mean wall time per instance: {mean:.6f}s", file=sys.stderr)
    return EXIT_OK if not bad else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Antimagic orientations of caterpillars: construct, verify, brute-force.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="construct and verify an antimagic orientation")
    p.add_argument("input", nargs="?", help="file of leaf-count lines, or - for stdin")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "dot", "tsv"], default="tsv")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a labeling given as JSON")
    p.add_argument("input", nargs="?", help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force search over orientations and labelings")
    p.add_argument("input", nargs="?", help="file of leaf-count lines, or - for stdin")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--count-all", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit caterpillars in the canonical text format")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--random", action="store_true")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spine-min", type=int, default=1)
    p.add_argument("--spine-max", type=int, default=10)
    p.add_argument("--leaf-budget", type=int, default=10)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stress", help="generate, construct and verify many instances")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-m", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_stress)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
