"""Command-line front end.

Subcommands cover a single run of each algorithm (secret recovery, DDH
decision, level lifting, the multiplicative-subgroup embedding, one
Grover run), the adversary-bound report and the three Monte Carlo
experiments.  Every command takes an explicit seed where randomness is
involved; identical invocations produce byte-identical output files.

Exit codes: 0 success, 1 input/usage error, 2 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .adversary import adversary_bounds
from .algorithms import (
    DHInstance,
    brute_force_secret,
    ddh_decide_by_search,
    ddh_decide_level1,
    embed_generic_group,
    honest_cdh_oracle,
    honest_dlog_oracle,
    lift_instance,
    lift_oracle,
    secret_from_cdh,
    secret_from_cdh_random,
    secret_from_dlog,
    secret_from_dlog_random,
)
from .blackbox import Escrow, GroupElement, IdentityOracle, random_element
from .experiments import (
    ExperimentConfig,
    format_value,
    run_level2_solution_counts,
    run_reduction_success,
    run_scaling,
    trial_rng,
    write_rows,
)
from .grover_sim import grover_search
from .modmath import PrimeModulus


class UsageError(Exception):
    """Bad command line; carries the parser for a usage message."""

    def __init__(self, parser: argparse.ArgumentParser, message: str):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we map usage errors to 1
        raise UsageError(self, message)


def _parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def _parse_coords(text: str):
    return tuple(int(part) for part in text.split(","))


def _write_or_print(payload, out: Optional[str], fmt: str) -> None:
    if out is None:
        if fmt == "json":
            print(json.dumps(payload, indent=2))
        else:
            for row in payload:
                print("  ".join(f"{k}={format_value(v)}" for k, v in row.items()))
    else:
        write_rows(out, payload, fmt)
        print(f"wrote {out}")


def build_parser() -> _Parser:
    parser = _Parser(prog="dhbox", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"dhbox {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name: str, help_text: str, **defaults):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--p", required=True, help="prime modulus (comma list where applicable)")
        sp.add_argument("--t", type=int, default=1, help="group level")
        sp.add_argument("--seed", type=int, default=0, help="master seed")
        sp.add_argument("--trials", type=int, default=defaults.get("trials", 1000))
        sp.add_argument("--out", default=None, help="output file path")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        return sp

    sp = add("secret", "recover the hidden secret with a chosen algorithm")
    sp.add_argument(
        "--algo",
        choices=("dlog", "cdh", "dlog-random", "cdh-random", "brute", "brute-random"),
        default="cdh",
    )

    sp = add("ddh", "decide whether a level-1 quadruple is a DH-quadruple")
    sp.add_argument("--secret", type=int, required=True, help="hidden secret of the oracle")
    sp.add_argument("--g", required=True, help="generator coordinates, e.g. 1,0")
    sp.add_argument("--h", dest="hh", required=True)
    sp.add_argument("--k", required=True)
    sp.add_argument("--l", required=True)

    add("lift", "check that lifting preserves DDH answers on random instances", trials=20)

    sp = add("embed", "embed a multiplicative prime-order subgroup DDH input")
    sp.add_argument("--q", type=int, required=True, help="prime with p | q-1")
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--b", type=int, default=None)
    sp.add_argument("--c", type=int, default=None)

    sp = add("adversary", "emit the level-2 adversary-bound report")
    sp.add_argument("--force", action="store_true", help="override the enumeration guard")

    sp = add("grover", "run the Grover search simulator once")
    sp.add_argument("--iterations", type=int, default=None)

    add("scaling", "brute-force query scaling across primes", trials=10000)
    add("reductions", "random-instance reduction success rates", trials=10000)
    add("level2-counts", "random level-2 instance line-solution counts", trials=1000)
    return parser


def _single_p(args) -> int:
    ps = _parse_int_list(args.p)
    if len(ps) != 1:
        raise ValueError(f"this command takes a single prime, got {ps}")
    return ps[0]


def _cmd_secret(args) -> int:
    p = _single_p(args)
    modulus = PrimeModulus(p)
    rng = trial_rng(args.seed, 100)
    s = int(rng.integers(0, p))
    oracle = IdentityOracle.level1(modulus, s)
    escrow = Escrow()
    dlog_calls = cdh_calls = 0
    if args.algo == "dlog":
        handle = honest_dlog_oracle(oracle, escrow)
        got = secret_from_dlog(handle)
        dlog_calls = handle.calls
    elif args.algo == "dlog-random":
        handle = honest_dlog_oracle(oracle, escrow)
        got = secret_from_dlog_random(handle, rng)
        dlog_calls = handle.calls
    elif args.algo == "cdh":
        handle = honest_cdh_oracle(oracle, escrow)
        got = secret_from_cdh(handle, oracle)
        cdh_calls = handle.calls
    elif args.algo == "cdh-random":
        handle = honest_cdh_oracle(oracle, escrow)
        got = secret_from_cdh_random(handle, oracle, rng)
        cdh_calls = handle.calls
    elif args.algo == "brute":
        got = brute_force_secret(oracle)
    else:
        got = brute_force_secret(oracle, rng)
    recovered = "none" if got is None else str(got.value)
    row = {
        "algorithm": args.algo,
        "p": p,
        "secret": s,
        "recovered": recovered,
        "correct": got is not None and got.value == s,
        "identity_queries": oracle.queries,
        "dlog_calls": dlog_calls,
        "cdh_calls": cdh_calls,
    }
    _write_or_print([row], args.out, args.format)
    return 0


def _cmd_ddh(args) -> int:
    p = _single_p(args)
    modulus = PrimeModulus(p)
    oracle = IdentityOracle.level1(modulus, args.secret)
    inst = DHInstance(
        GroupElement(_parse_coords(args.g), modulus),
        GroupElement(_parse_coords(args.hh), modulus),
        GroupElement(_parse_coords(args.k), modulus),
        GroupElement(_parse_coords(args.l), modulus),
    )
    answer = ddh_decide_level1(oracle, inst)
    print(f"DH-quadruple: {'yes' if answer else 'no'}")
    print(f"identity queries: {oracle.queries} (including 1 generator check)")
    return 0


def _cmd_lift(args) -> int:
    p = _single_p(args)
    modulus = PrimeModulus(p)
    agree = 0
    for t in range(args.trials):
        rng = trial_rng(args.seed, 300, t)
        s = int(rng.integers(0, p))
        oracle = IdentityOracle.level1(modulus, s)
        g = random_element(modulus, 1, rng)
        while oracle.query(g) == 1:
            g = random_element(modulus, 1, rng)
        inst = DHInstance(
            g,
            random_element(modulus, 1, rng),
            random_element(modulus, 1, rng),
            random_element(modulus, 1, rng),
        )
        base_answer = ddh_decide_level1(oracle, inst, check_generator=False)
        lifted = lift_instance(inst)
        lifted_oracle = lift_oracle(oracle)
        lifted_answer = ddh_decide_by_search(lifted_oracle, lifted)
        if base_answer == lifted_answer:
            agree += 1
    print(f"lift agreement: {agree}/{args.trials} instances")
    return 0 if agree == args.trials else 2


def _cmd_embed(args) -> int:
    p = _single_p(args)
    modulus = PrimeModulus(p)
    q = args.q
    # Find a generator of the order-p subgroup of the units mod q.
    g1 = None
    for w in range(2, q):
        cand = pow(w, (q - 1) // p, q)
        if cand != 1:
            g1 = cand
            break
    if g1 is None:
        raise ValueError(f"no order-{p} subgroup generator found mod {q}")
    if args.a is None or args.b is None or args.c is None:
        rng = trial_rng(args.seed, 400)
        a, b, c = (int(x) for x in rng.integers(0, p, size=3))
    else:
        a, b, c = args.a % p, args.b % p, args.c % p
    gens = (g1, pow(g1, a, q), pow(g1, b, q), pow(g1, c, q))
    oracle, inst = embed_generic_group(modulus, q, gens)
    answer = ddh_decide_by_search(oracle, inst)
    direct = 1 if c == a * b % p else 0
    print(f"exponents: a={a} b={b} c={c} (mod {p}); subgroup elements {gens} mod {q}")
    print(f"DDH via embedded oracle: {'yes' if answer else 'no'}")
    print(f"DDH via exponents:       {'yes' if direct else 'no'}")
    print(f"identity queries: {oracle.queries}, modular multiplications: {oracle.mults}")
    return 0 if answer == direct else 2


def _cmd_adversary(args) -> int:
    p = _single_p(args)
    report = adversary_bounds(p, force=args.force)
    text = report.to_json() + "\n"
    if args.out is None:
        print(text, end="")
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    return 0


def _cmd_grover(args) -> int:
    p = _single_p(args)
    modulus = PrimeModulus(p)
    rng = trial_rng(args.seed, 500)
    s = int(rng.integers(0, p))
    oracle = IdentityOracle.level1(modulus, s)
    run = grover_search(oracle, iterations=args.iterations, rng=rng)
    line = run.to_json_line() + "\n"
    if args.out is None:
        print(line, end="")
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(line)
        print(f"wrote {args.out}")
    return 0


def _config(args, command: str) -> ExperimentConfig:
    return ExperimentConfig(
        command=command,
        p=tuple(_parse_int_list(args.p)),
        seed=args.seed,
        trials=args.trials,
        t=args.t,
        out=args.out,
        format=args.format,
        force=getattr(args, "force", False),
    )


def _cmd_scaling(args) -> int:
    cfg = _config(args, "scaling")
    rows = [r.to_dict() for r in run_scaling(list(cfg.p), cfg.trials, cfg.seed)]
    _write_or_print(rows, cfg.out, cfg.format)
    return 0


def _cmd_reductions(args) -> int:
    cfg = _config(args, "reductions")
    if len(cfg.p) != 1:
        raise ValueError(f"this command takes a single prime, got {list(cfg.p)}")
    rows = [r.to_dict() for r in run_reduction_success(cfg.p[0], cfg.trials, cfg.seed)]
    _write_or_print(rows, cfg.out, cfg.format)
    return 0


def _cmd_level2(args) -> int:
    cfg = _config(args, "level2-counts")
    if len(cfg.p) != 1:
        raise ValueError(f"this command takes a single prime, got {list(cfg.p)}")
    p = cfg.p[0]
    result = run_level2_solution_counts(p, cfg.trials, cfg.seed)
    payload = result.to_dict()
    if args.out is None:
        print(json.dumps(payload, indent=2))
    else:
        if args.format == "json":
            with open(args.out, "w", newline="") as fh:
                fh.write(json.dumps(payload, indent=2) + "\n")
        else:
            flat = {k: v for k, v in payload.items() if k != "bad_samples"}
            write_rows(args.out, [flat], "csv")
        print(f"wrote {args.out}")
    return 0 if result.within_threshold else 2


_COMMANDS = {
    "secret": _cmd_secret,
    "ddh": _cmd_ddh,
    "lift": _cmd_lift,
    "embed": _cmd_embed,
    "adversary": _cmd_adversary,
    "grover": _cmd_grover,
    "scaling": _cmd_scaling,
    "reductions": _cmd_reductions,
    "level2-counts": _cmd_level2,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        exc.parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - internal failures map to exit 2
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
