"""Command-line interface.

Subcommands: solve (run the solver), oracle (brute force), gen (emit a
planted instance), experiment (probability reports), verify-universal
(check a family). Exit codes: 0 decided, 1 usage error, 2 capacity or
internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

import numpy as np

from .errors import CapacityError
from .experiments import estimate_amplification, estimate_split_probability
from .generator import GenerationError, generate_planted_instance
from .graph import GraphParseError, parse_graph, serialize_graph
from .kpath import ExtractionError
from .oracle import brute_force_longest_cycle
from .partition import build_universal_set, family_from_text, family_to_text, verify_universal
from .solver import SolverConfig, WitnessVerificationError, solve_verified


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 1, not argparse's 2
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="longcycle",
        description="Find simple cycles on at least k vertices in directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve_p = sub.add_parser("solve", help="decide and print YES/NO with a witness")
    solve_p.add_argument("--k", type=int, required=True, help="minimum cycle size (>= 2)")
    solve_p.add_argument("--mode", choices=("det", "rand"), default="det")
    solve_p.add_argument("--seed", type=int, default=0)
    solve_p.add_argument(
        "--amplification", type=float, default=10.0,
        help="c in the randomized trial count ceil(c * 4^k)",
    )
    solve_p.add_argument("--kpath", choices=("dp", "color"), default=None,
                         help="override the path-query backend")
    solve_p.add_argument("--repetition-constant", type=float, default=3.0)
    solve_p.add_argument("--input", default=None, help="edge-list file (default stdin)")
    solve_p.add_argument("--json", action="store_true", help="machine-readable answer")

    oracle_p = sub.add_parser("oracle", help="exhaustive longest-cycle search")
    oracle_p.add_argument("--input", default=None)
    oracle_p.add_argument("--cap", type=int, default=14)

    gen_p = sub.add_parser("gen", help="emit a planted-cycle instance")
    gen_p.add_argument("--n", type=int, required=True)
    gen_p.add_argument("--cycle-length", type=int, required=True)
    gen_p.add_argument("--density", type=float, default=0.0)
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument("--forbid-short", action="store_true",
                       help="reject extra edges that would create a shorter cycle")
    gen_p.add_argument("--output", default=None, help="file (default stdout)")

    exp_p = sub.add_parser("experiment", help="partition-probability reports")
    exp_p.add_argument("--name", choices=("split", "amplification"), required=True)
    exp_p.add_argument("--k", type=int, required=True)
    exp_p.add_argument("--trials", type=int, default=100_000)
    exp_p.add_argument("--meta-trials", type=int, default=1000)
    exp_p.add_argument("--c", type=float, default=1.0)
    exp_p.add_argument("--seed", type=int, default=0)

    ver_p = sub.add_parser("verify-universal", help="build or load a family and verify it")
    ver_p.add_argument("--n", type=int, default=None)
    ver_p.add_argument("--t", type=int, default=None)
    ver_p.add_argument("--family", default=None, help="verify a saved family instead")
    ver_p.add_argument("--save", default=None, help="write the built family to a file")

    return parser


def _read_text(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(path: str | None):
    graph = parse_graph(_read_text(path))
    if graph.dropped:
        print(
            f"note: dropped {graph.dropped} self-loop/duplicate edge(s)",
            file=sys.stderr,
        )
    return graph


def _cmd_solve(args) -> int:
    graph = _load_graph(args.input)
    cfg = SolverConfig(
        mode=args.mode,
        seed=args.seed,
        amplification=args.amplification,
        kpath=args.kpath,
        repetition_constant=args.repetition_constant,
    )
    if args.k < 2:
        raise _UsageError("--k must be at least 2")
    result = solve_verified(graph, args.k, cfg)
    if args.json:
        print(json.dumps(result.to_json_dict()))
    elif result.found:
        vs = " ".join(str(v) for v in result.witness.vertices)
        print(f"YES {len(result.witness)} {vs}")
    else:
        print("NO")
    return 0


def _cmd_oracle(args) -> int:
    graph = _load_graph(args.input)
    result = brute_force_longest_cycle(graph, cap=args.cap)
    if result.witness is None:
        print("LONGEST 0")
    else:
        vs = " ".join(str(v) for v in result.witness.vertices)
        print(f"LONGEST {result.length} {vs}")
    return 0


def _cmd_gen(args) -> int:
    rng = np.random.default_rng(args.seed)
    graph, witness = generate_planted_instance(
        args.n, args.cycle_length, args.density, rng, forbid_short=args.forbid_short
    )
    vs = " ".join(str(v) for v in witness.vertices)
    text = f"# planted cycle: {vs}\n" + serialize_graph(graph)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


def _cmd_experiment(args) -> int:
    if args.name == "split":
        report = estimate_split_probability(args.k, args.trials, seed=args.seed)
    else:
        report = estimate_amplification(args.k, args.c, args.meta_trials, seed=args.seed)
    print(report.summary())
    return 0


def _cmd_verify_universal(args) -> int:
    if args.family is not None:
        family = family_from_text(_read_text(args.family))
    else:
        if args.n is None or args.t is None:
            raise _UsageError("verify-universal needs --n and --t (or --family)")
        family = build_universal_set(args.n, args.t)
    if args.save is not None:
        with open(args.save, "w", encoding="utf-8") as handle:
            handle.write(family_to_text(family))
    check = verify_universal(family)
    if check:
        print(f"UNIVERSAL n={family.n} t={family.t} size={family.size} OK")
    else:
        indices, bits = check.violation
        print(
            f"UNIVERSAL n={family.n} t={family.t} size={family.size} "
            f"FAIL indices={list(indices)} pattern={list(bits)}"
        )
    return 0


_COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "gen": _cmd_gen,
    "experiment": _cmd_experiment,
    "verify-universal": _cmd_verify_universal,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("run with --help for usage", file=sys.stderr)
        return 1
    except (GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CapacityError, GenerationError, ExtractionError, WitnessVerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:  # anything else is an internal error
        traceback.print_exc()
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
