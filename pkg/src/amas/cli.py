"""Command-line entry points.

Exit codes: 0 success, 1 failed verification, 2 usage error.  ``--json``
switches any report to a machine-readable object; ``--rng`` fixes every
randomized search.  The AMAS_LOG environment variable sets the log level.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from fractions import Fraction
from typing import Any

from .ccmap import cc_bijection_check
from .jsonio import (
    SCHEMA_VERSION,
    SchemaError,
    parse_mutation_sequence,
    quiver_from_json,
    quiver_to_json,
)
from .models import (
    plucker_check,
    random_generic_matrix,
    total_positivity_oracle,
    total_positivity_test,
    unipotent_initial_seed,
)
from .potentials import ArrowQuiver, cyclic_derivative, parse_arrows, parse_potential
from .quiver import IceQuiver, detect_finite_type, is_dynkin, mutation_class
from .roots import DynkinType
from .seeds import (
    cluster_variables,
    exchange_graph,
    initial_seed,
    mutate_seed_sequence,
    rank2_variable,
)
from .textform import default_names, render_laurent, render_rational
from .ysystem import ysystem_period

logger = logging.getLogger("amas")


class UsageError(Exception):
    pass


def _load_quiver(path: str) -> IceQuiver:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return quiver_from_json(json.load(handle))
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except (json.JSONDecodeError, SchemaError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if getattr(args, "json", False):
        payload = {"v": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_orientation(text: str, rank: int) -> IceQuiver:
    arrows = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        src, _, tgt = chunk.partition(">")
        if not src.strip().isdigit() or not tgt.strip().isdigit():
            raise UsageError(f"cannot parse arrow {chunk!r}; expected like 1>2")
        arrows.append((int(src), int(tgt)))
    return IceQuiver.from_arrows(rank, arrows)


# -- subcommands -------------------------------------------------------------


def cmd_mutate(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    seq = parse_mutation_sequence(args.sequence, q.n)
    seed = mutate_seed_sequence(initial_seed(q), seq)
    names = default_names(q.m)
    rendered = [render_laurent(v, names) for v in seed.vars]
    _emit(
        args,
        {"quiver": quiver_to_json(seed.quiver), "vars": rendered, "sequence": list(seq)},
        "( " + " , ".join(rendered) + " )",
    )
    return 0


def cmd_explore(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    graph = exchange_graph(q, budget=args.budget)
    variables, _ = cluster_variables(q, budget=args.budget)
    status = "complete" if graph.complete else "incomplete"
    _emit(
        args,
        {
            "seeds": len(graph.seeds),
            "edges": len(graph.edges),
            "variables": len(variables),
            "complete": graph.complete,
        },
        f"seeds {len(graph.seeds)}, edges {len(graph.edges)}, "
        f"variables {len(variables)} ({status})",
    )
    return 0


def cmd_class(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    members, complete = mutation_class(q, budget=args.budget)
    _emit(
        args,
        {"size": len(members), "complete": complete},
        f"{len(members)} ({'complete' if complete else 'incomplete'})",
    )
    return 0


def cmd_finite_type(args: argparse.Namespace) -> int:
    q = _load_quiver(args.quiver)
    result = detect_finite_type(q, budget=args.budget)
    if result.status == "finite":
        text = f"finite {result.dynkin}"
    elif result.status == "infinite":
        text = "infinitely-many-variables"
    else:
        text = "unknown (budget exhausted)"
    _emit(
        args,
        {
            "status": result.status,
            "dynkin": str(result.dynkin) if result.dynkin else None,
            "explored": result.explored,
        },
        text,
    )
    return 0


def cmd_ysystem(args: argparse.Namespace) -> int:
    delta = DynkinType.parse(args.delta)
    delta_prime = DynkinType.parse(args.delta_prime)
    report = ysystem_period(
        delta, delta_prime, max_steps=args.max_steps, full=args.full_init
    )
    verdict = "yes" if report.divides else "no"
    _emit(
        args,
        {
            "period": report.period,
            "bound": report.bound,
            "divides": report.divides,
        },
        f"period {report.period} divides {report.bound}: {verdict}",
    )
    return 0 if report.divides else 1


def cmd_cc(args: argparse.Namespace) -> int:
    dynkin = DynkinType.parse(args.type)
    if args.orientation:
        q = _parse_orientation(args.orientation, dynkin.rank)
    else:
        q = IceQuiver.from_arrows(
            dynkin.rank, [(i, i + 1) for i in range(1, dynkin.rank)]
        )
        if dynkin.family != "A":
            raise UsageError(f"--orientation is required for type {dynkin}")
    found = is_dynkin(q)
    if found != dynkin:
        raise UsageError(f"orientation has type {found}, not {dynkin}")
    report = cc_bijection_check(q, rng=args.rng)
    names = default_names(q.n)
    lines = []
    for entry in report.entries:
        lines.append(
            f"root {entry.root}  denominator {entry.denominator}  "
            f"value {render_laurent(entry.value, names)}  "
            f"{'ok' if entry.matched else 'MISMATCH'}"
        )
    lines.append("bijection: " + ("ok" if report.ok else "FAILED"))
    _emit(
        args,
        {
            "ok": report.ok,
            "entries": [
                {
                    "root": list(e.root),
                    "denominator": list(e.denominator),
                    "value": render_laurent(e.value, names),
                    "matched": e.matched,
                }
                for e in report.entries
            ],
        },
        "\n".join(lines),
    )
    return 0 if report.ok else 1


def cmd_grassmannian(args: argparse.Namespace) -> int:
    rng = random.Random(args.sample_seed)
    sample = random_generic_matrix(args.n, rng)
    report = plucker_check(args.n, sample=sample, budget=args.budget)
    text = (
        f"n {report.n}: seeds {report.seeds} (path-quiver count {report.dynkin_seeds}), "
        f"variables {report.variables_reached}/{report.expected_variables}, "
        + ("ok" if report.ok else "FAILED")
    )
    if report.mismatches:
        text += "\n" + "\n".join(report.mismatches)
    _emit(
        args,
        {
            "ok": report.ok,
            "seeds": report.seeds,
            "dynkin_seeds": report.dynkin_seeds,
            "variables": report.variables_reached,
            "expected_variables": report.expected_variables,
            "mismatches": list(report.mismatches),
        },
        text,
    )
    return 0 if report.ok else 1


def cmd_tp(args: argparse.Namespace) -> int:
    try:
        with open(args.matrix, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        raise UsageError(f"no such file: {args.matrix}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.matrix}: {exc}") from None
    if not isinstance(payload, dict) or "entries" not in payload:
        raise UsageError("matrix file must carry an 'entries' object")
    entries: dict[tuple[int, int], Fraction] = {}
    for key, value in payload["entries"].items():
        try:
            k, l = (int(part) for part in key.split(","))
            entries[(k, l)] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad entry {key!r}: {value!r}") from None
    n = args.n
    for k in range(1, n + 2):
        for l in range(k + 1, n + 2):
            entries.setdefault((k, l), Fraction(0))
    model = unipotent_initial_seed(n)
    seq = parse_mutation_sequence(args.mutations, model.seed.quiver.n)
    verdict = total_positivity_test(n, entries, seq)
    oracle = total_positivity_oracle(n, entries)
    agree = verdict == oracle
    _emit(
        args,
        {"verdict": verdict, "oracle": oracle, "agree": agree},
        f"cluster criterion: {'positive' if verdict else 'not positive'}; "
        f"minor oracle: {'positive' if oracle else 'not positive'}; "
        f"{'agree' if agree else 'DISAGREE'}",
    )
    return 0 if agree else 1


def cmd_derive(args: argparse.Namespace) -> int:
    arrows = parse_arrows(args.arrows)
    if args.quiver:
        q = _load_quiver(args.quiver)
        vertices = q.m
        counts: dict[tuple[int, int], int] = {}
        for _, s, t in arrows:
            counts[(s, t)] = counts.get((s, t), 0) + 1
        for (s, t), mult in counts.items():
            if q.b[s - 1][t - 1] != mult - counts.get((t, s), 0):
                raise UsageError(
                    f"arrow list disagrees with the quiver at {s}>{t}"
                )
    else:
        vertices = max(max(s, t) for _, s, t in arrows)
    aq = ArrowQuiver(vertices, arrows)
    try:
        potential = parse_potential(aq, args.potential)
        derivative = cyclic_derivative(potential, args.wrt)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    _emit(
        args,
        {
            "wrt": args.wrt,
            "derivative": [
                {"path": p.render(), "coeff": c} for p, c in derivative.terms
            ],
        },
        derivative.render(),
    )
    return 0


def cmd_rank2(args: argparse.Namespace) -> int:
    value = rank2_variable(args.b, args.c, args.m)
    _emit(
        args,
        {"b": args.b, "c": args.c, "m": args.m, "value": render_rational(value)},
        render_rational(value),
    )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import run

    run(host=args.host, port=args.port, persist_dir=args.persist)
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amas",
        description="Exact cluster-algebra computations: mutation, exchange "
        "graphs, Y-systems, cluster characters and geometric seed models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--rng", type=int, default=0, help="seed for randomized searches")
        return p

    p = add("mutate", cmd_mutate, "mutate the initial seed of a quiver")
    p.add_argument("-q", "--quiver", required=True, help="quiver JSON file")
    p.add_argument("-s", "--sequence", default="", help='mutation sequence, e.g. "1,2,1"')

    p = add("explore", cmd_explore, "exchange graph summary")
    p.add_argument("-q", "--quiver", required=True)
    p.add_argument("--budget", type=int, default=20_000)

    p = add("class", cmd_class, "mutation class size")
    p.add_argument("-q", "--quiver", required=True)
    p.add_argument("--budget", type=int, default=100_000)

    p = add("finite-type", cmd_finite_type, "finite-type detection")
    p.add_argument("-q", "--quiver", required=True)
    p.add_argument("--budget", type=int, default=100_000)

    p = add("ysystem", cmd_ysystem, "Y-system periodicity verification")
    p.add_argument("--delta", required=True, help="e.g. A2")
    p.add_argument("--delta-prime", required=True, help="e.g. A1")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument(
        "--full-init",
        action="store_true",
        help="iterate both parity classes (two indeterminates per node)",
    )

    p = add("cc", cmd_cc, "cluster-character table against mutation")
    p.add_argument("--type", required=True, help="Dynkin type, e.g. A3")
    p.add_argument("--orientation", default="", help='arrows like "1>2,2>3"')

    p = add("grassmannian", cmd_grassmannian, "polygon/Pluecker model verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="run the full verification")
    p.add_argument("--sample-seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10_000)

    p = add("tp", cmd_tp, "total positivity of a unitriangular matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", required=True, help='JSON file {"entries": {"1,2": "3/2"}}')
    p.add_argument("--mutations", default="", help='mutation sequence, e.g. "1,2"')

    p = add("derive", cmd_derive, "cyclic derivative of a potential")
    p.add_argument("--quiver", default="", help="optional quiver JSON file")
    p.add_argument("--arrows", required=True, help='e.g. "a:1>2,b:2>3,c:3>1"')
    p.add_argument("--potential", required=True, help='e.g. "c.b.a + 2*b.a.b.a"')
    p.add_argument("--wrt", required=True, help="arrow name to derive by")

    p = add("rank2", cmd_rank2, "rank-2 recurrence variable")
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("-m", type=int, required=True)

    p = add("serve", cmd_serve, "run the session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8777)
    p.add_argument("--persist", default=None, help="directory for session snapshots")

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("AMAS_LOG", "WARNING").upper())
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
