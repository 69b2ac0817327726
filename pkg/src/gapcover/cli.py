"""Command line front end.

One executable, five subcommands:

- ``solve``: run a distinguisher on an instance file, optionally double
  checked against the oracle.
- ``generate``: write a seeded promise instance of a requested family.
- ``oracle``: run one of the exhaustive solvers on an instance file.
- ``check-lemmas``: audit the structural invariants on a file or on a
  freshly generated random batch.
- ``bench``: time the kernel computation and the full distinguisher over a
  ladder of instance sizes.

Every run emits a single JSON document (the run report) on stdout, except
``bench`` which defaults to CSV, and ``generate`` without ``--out`` which
emits the instance document itself.  No floating point value ever appears
in any output: times are integer microseconds or milliseconds, rationals
are num/den pairs or 'p/q' strings.

Exit codes: 0 a verdict or artifact was produced; 2 parameters out of range
or infeasible; 3 invalid or malformed instance; 4 oracle budget exceeded;
1 anything else.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from fractions import Fraction

from .distinguisher import (
    distinguish_hypergraph_vc,
    distinguish_set_cover,
    distinguish_zero_kernel,
)
from .errors import (
    BudgetExceededError,
    GapCoverError,
    InfeasibleParametersError,
    InvariantViolationError,
    MalformedInputError,
    NoSolutionError,
    ParameterRangeError,
)
from .exact_linalg import kernel_lattice_basis
from .generators import (
    _random_partition,
    generate_no_hypergraph,
    generate_no_set_cover,
    generate_promise_batch,
    generate_yes_hypergraph,
    generate_yes_set_cover,
)
from .instances import (
    GapParams,
    HypergraphInstance,
    SetCoverInstance,
    build_set_cover_incidence,
    instance_digest,
    parse_document,
    serialize_instance,
)
from .lemmas import audit_batch, audit_instance
from .oracle import (
    DEFAULT_NODE_BUDGET,
    classify_hypergraph,
    classify_set_cover,
    has_exact_vertex_cover,
    min_cover_size,
    min_exact_cover_size,
    min_vertex_cover_size,
)

_ETA_PATTERN = re.compile(r"^\d+(/\d+)?$")


def _parse_eta_arg(text: str) -> Fraction:
    if not _ETA_PATTERN.match(text):
        raise argparse.ArgumentTypeError(f"eta must look like '2' or '3/2', got {text!r}")
    return Fraction(text)


def _read_instance(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _params_json(params: GapParams) -> dict:
    return {"d": params.d, "eta": {"num": params.eta.numerator, "den": params.eta.denominator}}


def cmd_solve(args: argparse.Namespace) -> int:
    inst, params = parse_document(_read_instance(args.instance))
    started = time.perf_counter_ns()
    if isinstance(inst, SetCoverInstance):
        kind = "set_cover"
        if args.zero_kernel_shortcut:
            verdict = distinguish_zero_kernel(inst, params)
        else:
            verdict = distinguish_set_cover(inst, params)
    else:
        kind = "hypergraph_vc"
        if args.zero_kernel_shortcut:
            raise ParameterRangeError("--zero-kernel-shortcut applies to set cover instances only")
        verdict = distinguish_hypergraph_vc(inst, params)
    report = {
        "command": "solve",
        "instance_type": kind,
        "instance_digest": instance_digest(inst, params),
        "params": _params_json(params),
        "verdict": {
            "answer": verdict.answer,
            "decided_at": verdict.decided_at,
            "witness": verdict.witness_json(),
        },
    }
    if args.verify:
        if isinstance(inst, SetCoverInstance):
            truth = classify_set_cover(inst, params, node_budget=args.budget)
        else:
            truth = classify_hypergraph(inst, params, node_budget=args.budget)
        report["oracle_class"] = truth
        report["agreement"] = truth == verdict.answer if truth != "neither" else None
    report["wall_time_ms"] = (time.perf_counter_ns() - started) // 1_000_000
    report["exit_code"] = 0
    _emit(_report_json(report), args.out)
    return 0


_GENERATORS = {
    "yes-set-cover": ("set_cover", "YES"),
    "no-set-cover": ("set_cover", "NO"),
    "yes-hypergraph": ("hypergraph_vc", "YES"),
    "no-hypergraph": ("hypergraph_vc", "NO"),
}


def cmd_generate(args: argparse.Namespace) -> int:
    started = time.perf_counter_ns()
    kind, expected = _GENERATORS[args.kind]
    params = GapParams(args.d, args.eta)
    if kind == "set_cover":
        if args.kind == "yes-set-cover":
            inst = generate_yes_set_cover(args.n, args.m, args.d, args.eta, args.seed)
            certificate = min_exact_cover_size(inst, limit=args.d)
        else:
            inst = generate_no_set_cover(args.n, args.m, args.d, args.eta, args.seed)
            certificate = min_cover_size(inst)
    else:
        if args.k is None:
            raise InfeasibleParametersError("hypergraph generation requires --k")
        if args.kind == "yes-hypergraph":
            inst = generate_yes_hypergraph(args.n, args.m, args.k, args.d, args.eta, args.seed)
            certificate = has_exact_vertex_cover(inst, args.d)
        else:
            inst = generate_no_hypergraph(args.n, args.m, args.k, args.d, args.eta, args.seed)
            certificate = min_vertex_cover_size(inst)
    payload = serialize_instance(inst, params)
    if not args.out:
        sys.stdout.buffer.write(payload)
        return 0
    with open(args.out, "wb") as handle:
        handle.write(payload)
    report = {
        "command": "generate",
        "kind": args.kind,
        "path": args.out,
        "instance_type": kind,
        "instance_digest": instance_digest(inst, params),
        "params": _params_json(params),
        "expected_class": expected,
        "oracle": {
            "optimum": certificate.optimum if certificate.optimum is not None else "infeasible",
            "witness": list(certificate.witness) if certificate.witness is not None else None,
            "nodes_explored": certificate.nodes_explored,
        },
        "wall_time_ms": (time.perf_counter_ns() - started) // 1_000_000,
        "exit_code": 0,
    }
    sys.stdout.write(_report_json(report))
    return 0


_QUESTIONS = ("exact-cover", "min-cover", "min-vertex-cover", "exact-vertex-cover")


def cmd_oracle(args: argparse.Namespace) -> int:
    inst, params = parse_document(_read_instance(args.instance))
    started = time.perf_counter_ns()
    if args.question in ("exact-cover", "min-cover"):
        if not isinstance(inst, SetCoverInstance):
            raise InvariantViolationError(f"question {args.question} needs a set cover instance")
        if args.question == "exact-cover":
            result = min_exact_cover_size(inst, limit=args.limit, node_budget=args.budget)
        else:
            result = min_cover_size(inst, node_budget=args.budget)
    else:
        if not isinstance(inst, HypergraphInstance):
            raise InvariantViolationError(f"question {args.question} needs a hypergraph instance")
        if args.question == "exact-vertex-cover":
            result = has_exact_vertex_cover(inst, params.d, node_budget=args.budget)
        else:
            result = min_vertex_cover_size(inst, node_budget=args.budget)
    report = {
        "command": "oracle",
        "question": args.question,
        "instance_digest": instance_digest(inst, params),
        "optimum": result.optimum if result.optimum is not None else "infeasible",
        "witness": list(result.witness) if result.witness is not None else None,
        "nodes_explored": result.nodes_explored,
        "wall_time_ms": (time.perf_counter_ns() - started) // 1_000_000,
        "exit_code": 0,
    }
    _emit(_report_json(report), args.out)
    return 0


def cmd_check_lemmas(args: argparse.Namespace) -> int:
    started = time.perf_counter_ns()
    if args.instance:
        inst, params = parse_document(_read_instance(args.instance))
        report = audit_instance(inst, params)
        count = 1
    else:
        batch = generate_promise_batch(
            args.random, args.seed, max_n=args.max_n, max_m=args.max_m
        )
        report = audit_batch(batch)
        count = len(batch)
    document = {
        "command": "check-lemmas",
        "instances": count,
        "evaluated": report.evaluated,
        "violations": [{"check": v.check, "detail": v.detail} for v in report.violations],
        "wall_time_ms": (time.perf_counter_ns() - started) // 1_000_000,
        "exit_code": 0 if report.ok() else 1,
    }
    _emit(_report_json(document), args.out)
    return 0 if report.ok() else 1


def _parse_sizes(spec: str) -> list[int]:
    if ":" in spec:
        pieces = spec.split(":")
        if len(pieces) != 3 or not all(p.isdigit() for p in pieces):
            raise argparse.ArgumentTypeError("size range must look like start:stop:step")
        start, stop, step = (int(p) for p in pieces)
        if step < 1 or start < 1 or stop < start:
            raise argparse.ArgumentTypeError(f"bad size range {spec!r}")
        return list(range(start, stop + 1, step))
    values = spec.split(",")
    if not all(v.isdigit() and int(v) > 0 for v in values):
        raise argparse.ArgumentTypeError(f"sizes must look like '10:100:10' or '12,24', got {spec!r}")
    return [int(v) for v in values]


def _bench_instance(size: int, seed: int) -> tuple[SetCoverInstance, GapParams]:
    """Planted square instance for timing only; skips oracle verification."""
    eta = Fraction(2)
    d = 2 * size // 5 + 1
    rng = random.Random(seed)
    blocks = _random_partition(rng, size, d)
    sets = [list(b) for b in blocks]
    while len(sets) < size:
        width = rng.randint(1, size)
        sets.append(sorted(rng.sample(range(size), width)))
    rng.shuffle(sets)
    return SetCoverInstance.from_sets(size, sets), GapParams(d, eta)


def cmd_bench(args: argparse.Namespace) -> int:
    rows = []
    for size in args.sizes:
        inst, params = _bench_instance(size, args.seed + size)
        incidence = build_set_cover_incidence(inst)
        t0 = time.perf_counter_ns()
        kernel_lattice_basis(incidence)
        t1 = time.perf_counter_ns()
        distinguish_set_cover(inst, params)
        t2 = time.perf_counter_ns()
        rows.append(
            {
                "n": size,
                "m": size,
                "digest": instance_digest(inst, params),
                "kernel_us": (t1 - t0) // 1_000,
                "total_us": (t2 - t1) // 1_000,
            }
        )
    if args.format == "json":
        _emit(_report_json({"command": "bench", "rows": rows, "exit_code": 0}), args.out)
    else:
        lines = ["n,m,digest,kernel_us,total_us"]
        for row in rows:
            lines.append(f"{row['n']},{row['m']},{row['digest']},{row['kernel_us']},{row['total_us']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapcover",
        description="Lattice distinguishers for gap set cover and hypergraph vertex cover.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide a promise instance")
    solve.add_argument("instance", help="instance file, or - for stdin")
    solve.add_argument("--verify", action="store_true", help="cross-check against the oracle")
    solve.add_argument("--zero-kernel-shortcut", action="store_true")
    solve.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    solve.add_argument("--out", default=None)
    solve.set_defaults(func=cmd_solve)

    generate = sub.add_parser("generate", help="write a seeded promise instance")
    generate.add_argument("kind", choices=sorted(_GENERATORS))
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--m", type=int, required=True)
    generate.add_argument("--k", type=int, default=None, help="edge size for hypergraphs")
    generate.add_argument("--d", type=int, required=True)
    generate.add_argument("--eta", type=_parse_eta_arg, required=True)
    generate.add_argument("--seed", type=int, required=True)
    generate.add_argument("--out", default=None)
    generate.set_defaults(func=cmd_generate)

    oracle = sub.add_parser("oracle", help="run an exhaustive solver")
    oracle.add_argument("instance", help="instance file, or - for stdin")
    oracle.add_argument("--question", choices=_QUESTIONS, required=True)
    oracle.add_argument("--limit", type=int, default=None)
    oracle.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    oracle.add_argument("--out", default=None)
    oracle.set_defaults(func=cmd_oracle)

    lemmas = sub.add_parser("check-lemmas", help="audit structural invariants")
    lemmas.add_argument("instance", nargs="?", default=None)
    lemmas.add_argument("--random", type=int, default=200, help="batch size when no file is given")
    lemmas.add_argument("--seed", type=int, default=0)
    lemmas.add_argument("--max-n", type=int, default=12)
    lemmas.add_argument("--max-m", type=int, default=12)
    lemmas.add_argument("--out", default=None)
    lemmas.set_defaults(func=cmd_check_lemmas)

    bench = sub.add_parser("bench", help="time the distinguisher over a size ladder")
    bench.add_argument("--sizes", type=_parse_sizes, default=list(range(10, 101, 10)))
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--format", choices=("csv", "json"), default="csv")
    bench.add_argument("--out", default=None)
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParameterRangeError, InfeasibleParametersError) as exc:
        return _fail(2, exc)
    except (MalformedInputError, InvariantViolationError) as exc:
        return _fail(3, exc)
    except BudgetExceededError as exc:
        return _fail(4, exc)
    except NoSolutionError as exc:
        return _fail(1, exc)
    except GapCoverError as exc:
        return _fail(1, exc)


def _fail(code: int, exc: Exception) -> int:
    sys.stderr.write(json.dumps({"error": str(exc), "exit_code": code}) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
