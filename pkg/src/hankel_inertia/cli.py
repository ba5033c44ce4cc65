"""Command-line front end.

Every run prints one JSON document on stdout. Errors go to stderr with exit
code 1 (malformed input), 2 (not self-adjoint), 3 (domain violation) or
4 (an oracle check failed). Wall time goes to stderr so stdout stays
byte-identical across runs.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from typing import Sequence

from . import __version__
from .automorphisms import Automorphism
from .carleman import DEFAULT_SIZES, negative_count_experiment
from .errors import HankelError, MalformedSpec
from .generators import kernel_corpus, random_kernel
from .inertia import DEFAULT_ZERO_TOL, kernel_inertia, numeric_inertia, sign_matrix_inertia
from .oracle import oracle_inertia
from .representations import KINDS, convert, inertia_in_representation, to_kernel
from .serialize import dumps, load, sign_matrix_to_json, to_json
from .sign import sign_distribution, sign_matrix

EXIT_CHECK_FAILED = 4
_SOURCES = ("kernel", "line", "circle", "sequence")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedSpec(message)


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    for kind in _SOURCES:
        group.add_argument(f"--{kind}", metavar="FILE", help=f"{kind} representation (JSON file)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hankel-inertia", description="Inertia of finite-rank Hankel operators.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("inertia", help="closed-form (N+, N-) of an operator")
    _add_source(p)

    p = sub.add_parser("sign-matrix", help="sign-matrix blocks of a kernel and their inertia")
    p.add_argument("--kernel", metavar="FILE", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL, help="relative zero threshold for the numeric check")

    p = sub.add_parser("convert", help="change representation")
    p.add_argument("--from", dest="src", choices=KINDS, required=True)
    p.add_argument("--to", dest="dst", choices=KINDS, required=True)
    p.add_argument("file", metavar="FILE")

    p = sub.add_parser("oracle-check", help="closed form vs. exact brute force on random kernels and the corpus")
    p.add_argument("--instances", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("carleman", help="finite sections of Carleman + V")
    p.add_argument("--kernel", metavar="FILE", required=True)
    p.add_argument("--sizes", default=",".join(map(str, DEFAULT_SIZES)))
    p.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL)

    p = sub.add_parser("transform", help="apply dilate:RHO, involute or parity")
    p.add_argument("--op", required=True)
    _add_source(p)
    return parser


def _source(args) -> tuple[str, str]:
    for kind in _SOURCES:
        path = getattr(args, kind, None)
        if path:
            return kind, path
    raise MalformedSpec("no input file given")


def _digest(argv: Sequence[str], paths: Sequence[str]) -> str:
    h = hashlib.sha256("\0".join(argv).encode())
    for path in paths:
        with open(path, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()[:16]


def _cmd_inertia(args):
    kind, path = _source(args)
    x = load(path, kind)
    report = kernel_inertia(x) if kind == "kernel" else inertia_in_representation(x)
    return [path], report.to_dict(), 0


def _cmd_sign_matrix(args):
    k = load(args.kernel, "kernel")
    S = sign_matrix(k)
    closed = sign_matrix_inertia(S)
    numeric = numeric_inertia(S, args.tol)
    atoms = [{"alpha": str(a.alpha), "beta": [a.beta.real + 0.0, a.beta.imag + 0.0], "q": [str(x) for x in a.q]}
             for a in sign_distribution(k)]
    payload = {
        "blocks": sign_matrix_to_json(S),
        "atoms": atoms,
        "inertia": closed.to_dict(),
        "numeric_check": {"n_plus": numeric.n_plus, "n_minus": numeric.n_minus, "n_zero": numeric.n_zero,
                          "tol": args.tol, "agrees": numeric.counts == closed.counts},
    }
    return [args.kernel], payload, 0


def _cmd_convert(args):
    x = load(args.file, args.src)
    return [args.file], to_json(convert(x, args.dst)), 0


def _check_row(name, k) -> dict:
    closed = kernel_inertia(k).counts
    oracle = oracle_inertia(k).counts
    return {"instance": name, "rank": k.rank(), "closed_form": list(closed), "oracle": list(oracle),
            "pass": closed == oracle}


def _cmd_oracle_check(args):
    if args.instances < 0:
        raise MalformedSpec("--instances must be non-negative")
    rng = random.Random(args.seed)
    rows = [_check_row(f"corpus:{name}", k) for name, k in kernel_corpus().items()]
    rows += [_check_row(f"random:{i}", random_kernel(rng)) for i in range(args.instances)]
    failed = sum(not r["pass"] for r in rows)
    payload = {"seed": args.seed, "instances": args.instances, "checked": len(rows), "failed": failed, "table": rows}
    return [], payload, EXIT_CHECK_FAILED if failed else 0


def _cmd_carleman(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise MalformedSpec(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if not sizes or any(n <= 0 for n in sizes):
        raise MalformedSpec("--sizes must list positive integers")
    k = load(args.kernel, "kernel")
    exp = negative_count_experiment(k, sorted(sizes), args.tol)
    payload = {
        "perturbation": to_json(exp.perturbation),
        "sizes": list(exp.sizes),
        "counts": list(exp.counts),
        "predicted": exp.predicted,
        "tol": exp.tol,
        "bounded": exp.bounded,
        "monotone": exp.monotone,
        "stabilized": exp.stabilized,
    }
    return [args.kernel], payload, 0


def _cmd_transform(args):
    try:
        op = Automorphism.parse(args.op)
    except ValueError as exc:
        raise MalformedSpec(str(exc)) from None
    kind, path = _source(args)
    x = load(path, kind)
    y = op.apply(x)
    payload = {
        "op": args.op,
        "output": to_json(y),
        "inertia_before": list(kernel_inertia(to_kernel(x)).counts),
        "inertia_after": list(kernel_inertia(to_kernel(y)).counts),
    }
    return [path], payload, 0


_COMMANDS = {
    "inertia": _cmd_inertia,
    "sign-matrix": _cmd_sign_matrix,
    "convert": _cmd_convert,
    "oracle-check": _cmd_oracle_check,
    "carleman": _cmd_carleman,
    "transform": _cmd_transform,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        paths, payload, code = _COMMANDS[args.command](args)
        report = {"command": args.command, "input_digest": _digest(argv, paths), **payload}
    except HankelError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=stderr)
        return exc.exit_code
    stdout.write(dumps(report) + "\n")
    print(f"wall_time: {time.perf_counter() - start:.3f}s", file=stderr)
    return code


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "main", "run"]
