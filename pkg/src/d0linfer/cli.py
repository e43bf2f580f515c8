"""Command line interface.

Exit codes: 0 system found / compatible, 1 infeasible / incompatible,
2 usage or input error, 3 resource cap hit, 4 unverified QAOA candidate.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import chargraph, qubo, sat
from .errors import D0LError, ResourceError
from .generate import gen_random_instance
from .pipeline import INFEASIBLE, SYSTEM, classical_d0l_solver, quant_infer_d0l, sat_infer_d0l, verify
from .qaoa import QUBIT_CAP, QaoaParams, trace_json
from .textio import parse_sequence, parse_system, serialize_sequence, serialize_system

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_RESOURCE, EXIT_UNVERIFIED = 0, 1, 2, 3, 4

BACKENDS = {"exact": "structured", "exact-generic": "generic-mis", "qaoa": None, "sat-internal": None}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _nonneg_float(text):
    value = float(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="d0linfer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    infer = sub.add_parser("infer", help="infer a D0L-system from a sequence file")
    infer.add_argument("sequence", type=Path)
    infer.add_argument("--backend", choices=sorted(BACKENDS), default="exact")
    infer.add_argument("--json", action="store_true", help="print a machine-readable report")
    infer.add_argument("--budget", type=_positive_int, help="search node budget for exact backends")
    q = infer.add_argument_group("qaoa")
    q.add_argument("--p", type=_nonneg_int, help="layers (default ceil(log2 n))")
    q.add_argument("--lam", type=_nonneg_float, default=2.0, help="penalty weight")
    q.add_argument("--shots", type=_positive_int, default=512)
    q.add_argument("--iters", type=_nonneg_int, default=100)
    q.add_argument("--eta", type=_positive_float, default=0.05)
    q.add_argument("--fd-step", type=_positive_float, default=1e-3)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--qubit-cap", type=_positive_int, default=QUBIT_CAP)
    q.add_argument("--shot-based", action="store_true", help="descend on sampled cost averages")
    q.add_argument("--trace", type=Path, help="write the per-iteration optimizer trace as JSON")

    export = sub.add_parser("export", help="write the graph, QUBO or CNF of a sequence")
    export.add_argument("sequence", type=Path)
    what = export.add_mutually_exclusive_group(required=True)
    what.add_argument("--dot", action="store_true")
    what.add_argument("--qubo", action="store_true")
    what.add_argument("--cnf", action="store_true")
    what.add_argument("--graph-json", action="store_true")
    export.add_argument("-o", "--output", type=Path, required=True)
    export.add_argument("--lam", type=_nonneg_float, default=2.0)

    verify = sub.add_parser("verify", help="check that a system generates a sequence")
    verify.add_argument("sequence", type=Path)
    verify.add_argument("system", type=Path)

    gen = sub.add_parser("gen", help="write a random system and its trace")
    gen.add_argument("--alphabet", type=_positive_int, required=True)
    gen.add_argument("--max-succ", type=_nonneg_int, required=True)
    gen.add_argument("--steps", type=_positive_int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--cap", type=_positive_int, default=60, help="maximum word length")
    gen.add_argument("-o", "--prefix", type=Path, default=Path("instance"),
                     help="writes PREFIX.seq and PREFIX.sys")

    decode = sub.add_parser("decode", help="turn an external SAT solver's model into a system")
    decode.add_argument("sequence", type=Path)
    decode.add_argument("model", type=Path)
    decode.add_argument("--json", action="store_true")
    return parser


def _report(result, as_json, out):
    if as_json:
        out.write(json.dumps(result.as_dict(), indent=1, sort_keys=True) + "\n")
    elif result.outcome == SYSTEM:
        out.write(serialize_system(result.system))
    elif result.outcome == INFEASIBLE:
        out.write("INFEASIBLE\n")
        print(result.reason, file=sys.stderr)
    else:
        out.write("UNVERIFIED\n")
        out.write(f"# {result.reason}\n")
        if result.system is not None:
            out.write(serialize_system(result.system))
        out.write("# selected: " + " ".join(v_label(v) for v in result.vertices) + "\n")
    return {SYSTEM: EXIT_OK, INFEASIBLE: EXIT_INFEASIBLE}.get(result.outcome, EXIT_UNVERIFIED)


def v_label(v):
    return chargraph.CGVertex(*v).label()


def cmd_infer(args, out) -> int:
    theta = parse_sequence(args.sequence.read_text())
    if args.backend == "qaoa":
        params = QaoaParams(
            p=args.p, lam=args.lam, shots=args.shots, iters=args.iters, eta=args.eta,
            fd_step=args.fd_step, seed=args.seed, qubit_cap=args.qubit_cap, shot_based=args.shot_based,
        )
        result = quant_infer_d0l(theta, args.p, params)
        if args.trace and "history" in result.details:
            args.trace.write_text(trace_json(result.details["history"]))
        result.details.pop("history", None)
    elif args.backend == "sat-internal":
        result = sat_infer_d0l(theta)
    else:
        result = classical_d0l_solver(theta, BACKENDS[args.backend], args.budget)
    return _report(result, args.json, out)


def cmd_export(args, out) -> int:
    theta = parse_sequence(args.sequence.read_text())
    G = chargraph.build(theta)
    if args.dot:
        text = G.to_dot()
    elif args.graph_json:
        text = G.to_json()
    elif args.qubo:
        text = qubo.to_json(qubo.build_qubo(G), qubo.PenaltyConfig(args.lam, G.k))
    else:
        formula, _ = sat.encode(G)
        text = sat.write_dimacs(formula, sat.theta_comments(theta))
    args.output.write_text(text)
    out.write(f"wrote {args.output}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    theta = parse_sequence(args.sequence.read_text())
    system = parse_system(args.system.read_text())
    ok = verify(theta, system)
    out.write("COMPATIBLE\n" if ok else "INCOMPATIBLE\n")
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_gen(args, out) -> int:
    system, theta = gen_random_instance(args.alphabet, args.max_succ, args.steps, args.cap, args.seed)
    seq_path = args.prefix.with_name(args.prefix.name + ".seq")
    sys_path = args.prefix.with_name(args.prefix.name + ".sys")
    seq_path.write_text(serialize_sequence(theta))
    sys_path.write_text(serialize_system(system))
    out.write(f"wrote {seq_path} and {sys_path}\n")
    return EXIT_OK


def cmd_decode(args, out) -> int:
    theta = parse_sequence(args.sequence.read_text())
    result = sat_infer_d0l(theta, args.model.read_text())
    return _report(result, args.json, out)


COMMANDS = {"infer": cmd_infer, "export": cmd_export, "verify": cmd_verify, "gen": cmd_gen, "decode": cmd_decode}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (D0LError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
