"""Command-line entry point: ``setramsey <subcommand> ...``.

Every subcommand prints one JSON document. Exit codes: 0 success, 1 a valid
but negative answer, 2 malformed input, 3 capacity or budget limits.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Sequence

from .bounds import UnsupportedTargetError, aggregate_bounds
from .coloring import Certificate, ColorSet, MalformedError
from .construct import (
    DegenerateConstructionError,
    path_lower_certificate,
    repair_search,
    star_lower_certificate,
    uniform_coloring,
)
from .decompose import ParityError, hamilton_decomposition, maximal_matching_decomposition, one_factorization
from .detect import verify_certificate
from .graph import CapacityError, InvalidTargetError, parse_targets
from .search import DEFAULT_BUDGET, UNKNOWN, ramsey_number

EXIT_OK, EXIT_NEGATIVE, EXIT_MALFORMED, EXIT_CAPACITY = 0, 1, 2, 3
THREADS_ENV = "SETRAMSEY_THREADS"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="setramsey", description="Set-coloring Ramsey numbers: bounds, constructions, exact search.")
    p.add_argument("--output", "-o", help="write JSON here instead of standard output")
    p.add_argument("--verbose", "-v", action="store_true", help="log progress to standard error")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="check a certificate file ('-' for standard input)")
    v.add_argument("file")

    c = sub.add_parser("construct", help="emit a lower-bound coloring as a certificate")
    c.add_argument("kind", choices=["uniform", "path", "star"])
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--n1", type=int, help="smallest target parameter (path/star)")
    c.add_argument("--n", type=int, help="host size (uniform)")
    c.add_argument("--set", type=_int_list, help="color set for uniform, e.g. 2,3")
    c.add_argument("--targets", help="target list for uniform")

    d = sub.add_parser("decompose", help="edge decompositions of K_n")
    d.add_argument("kind", choices=["1f", "ham", "maxmatch"])
    d.add_argument("n", type=int)

    b = sub.add_parser("bounds", help="all applicable bounds and the resulting interval")
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--targets", required=True)

    so = sub.add_parser("solve", help="exact value by exhaustive search")
    so.add_argument("--r", type=int, required=True)
    so.add_argument("--s", type=int, required=True)
    so.add_argument("--targets", required=True)
    so.add_argument("--cap", type=int, required=True, help="largest host to try")
    so.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget per host")
    so.add_argument("--threads", type=int, help=f"worker processes (default ${THREADS_ENV} or 1)")
    so.add_argument("--seed", type=int, default=0, help="accepted for uniformity; the search is deterministic")

    sa = sub.add_parser("sample", help="randomized repair search for a free coloring")
    sa.add_argument("--n", type=int, required=True)
    sa.add_argument("--r", type=int, required=True)
    sa.add_argument("--s", type=int, required=True)
    sa.add_argument("--targets", required=True)
    sa.add_argument("--budget", type=int, required=True)
    sa.add_argument("--seed", type=int, required=True)
    return p


def _threads(flag: int | None) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise MalformedError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return 1


def _targets(text: str, r: int):
    targets = parse_targets(text)
    if len(targets) != r:
        raise MalformedError(f"need {r} targets, got {len(targets)}")
    return targets


def _cmd_verify(args) -> tuple[dict, int]:
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise MalformedError(f"cannot read {args.file}: {exc.strerror}") from None
    report = verify_certificate(Certificate.loads(text))
    return report.to_json(), report.exit_code


def _cmd_construct(args) -> tuple[dict, int]:
    if args.kind == "uniform":
        if args.n is None or args.set is None or args.targets is None:
            raise MalformedError("construct uniform needs --n, --set and --targets")
        cs = ColorSet.of(args.set, args.r, args.s)
        cert = Certificate(uniform_coloring(args.n, cs), tuple(_targets(args.targets, args.r)))
    else:
        if args.n1 is None:
            raise MalformedError(f"construct {args.kind} needs --n1")
        build = path_lower_certificate if args.kind == "path" else star_lower_certificate
        cert = build(args.r, args.s, args.n1)
    return cert.to_json(), EXIT_OK


def _cmd_decompose(args) -> tuple[dict, int]:
    if args.kind == "1f":
        return one_factorization(args.n).to_json("1f"), EXIT_OK
    if args.kind == "ham":
        return hamilton_decomposition(args.n).to_json("ham"), EXIT_OK
    return maximal_matching_decomposition(args.n).to_json("maxmatch"), EXIT_OK


def _cmd_bounds(args) -> tuple[dict, int]:
    report = aggregate_bounds(args.r, args.s, _targets(args.targets, args.r))
    return report.to_json(), EXIT_OK


def _cmd_solve(args) -> tuple[dict, int]:
    targets = _targets(args.targets, args.r)
    res = ramsey_number(args.r, args.s, targets, args.cap, budget=args.budget, threads=_threads(args.threads))
    if res.status == "exact":
        return res.to_json(), EXIT_OK
    if any(d.outcome == UNKNOWN for d in res.decisions):
        return res.to_json(), EXIT_CAPACITY
    return res.to_json(), EXIT_NEGATIVE


def _cmd_sample(args) -> tuple[dict, int]:
    targets = _targets(args.targets, args.r)
    cert = repair_search(args.n, args.r, args.s, targets, args.budget, args.seed)
    if cert is None:
        return {"status": "none", "n": args.n, "budget": args.budget, "seed": args.seed}, EXIT_NEGATIVE
    return cert.to_json(), EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "decompose": _cmd_decompose,
    "bounds": _cmd_bounds,
    "solve": _cmd_solve,
    "sample": _cmd_sample,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the subcommand and print its JSON; returns the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        payload, code = _COMMANDS[args.command](args)
    except CapacityError as exc:
        payload, code = {"error": "capacity", "message": str(exc)}, EXIT_CAPACITY
    except (MalformedError, InvalidTargetError, ParityError, DegenerateConstructionError, UnsupportedTargetError) as exc:
        payload, code = {"error": "malformed", "message": str(exc)}, EXIT_MALFORMED
    except ValueError as exc:
        payload, code = {"error": "malformed", "message": str(exc)}, EXIT_MALFORMED
    text = json.dumps(payload, ensure_ascii=False)
    if "message" in payload:
        print(payload["message"], file=sys.stderr)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
