"""``steinberg-rsk``: JSON in on stdin (or ``--in FILE``), one JSON document out on stdout.

Exit codes: 0 ok, 1 verification failure, 2 input error.  On failure the
error document goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass, field
from typing import Any, Callable

from . import correspondence as corr
from .matrices import MarginMatrix, PartialPermutation, enumerate_pp
from .rsk import NoPreimageError, calibrate, variant_rsk
from .signed_diagrams import enumerate_asyd, enumerate_syd, hasse_edges
from .tableaux import RowStandardTableau, TableauError, evacuate, rectify

EXIT_OK, EXIT_VERIFY, EXIT_INPUT = 0, 1, 2

COMMANDS = ("map", "unmap", "dual", "tauhat", "rsk", "evac", "rect",
            "enum-syd", "enum-pp", "census", "verify", "poset", "calibrate")


class InputError(ValueError):
    pass


@dataclass
class CommandResult:
    status: str
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    @classmethod
    def ok(cls, payload: Any) -> CommandResult:
        return cls("ok", payload)

    @classmethod
    def error(cls, exit_code: int, *diagnostics: str) -> CommandResult:
        return cls("error", None, list(diagnostics), exit_code)

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "diagnostics": self.diagnostics}
        if self.status == "ok":
            out["payload"] = self.payload
        return out


def _need(data: Any, *keys: str) -> None:
    if not isinstance(data, dict) or any(k not in data for k in keys):
        raise InputError(f"expected a JSON object with keys {list(keys)}, got {data!r}")


def _signature(data: Any) -> tuple[int, int]:
    _need(data, "q", "p")
    q, p = data["q"], data["p"]
    if not all(isinstance(v, int) and v >= 0 for v in (q, p)):
        raise InputError("signature entries must be nonnegative integers")
    return q, p


def _dims(data: Any) -> tuple[int, int]:
    _need(data, "p", "q")
    p, q = data["p"], data["q"]
    if not all(isinstance(v, int) and v >= 1 for v in (p, q)):
        raise InputError("p and q must be positive integers")
    return p, q


def _cmd_map(data, args, rng):
    return corr.forward(PartialPermutation.from_json(data), rng).to_json()


def _cmd_unmap(data, args, rng):
    return corr.inverse(corr.CorrespondenceTriple.from_json(data), rng).to_json()


def _cmd_dual(data, args, rng):
    return corr.dual(PartialPermutation.from_json(data), rng).to_json()


def _cmd_tauhat(data, args, rng):
    return corr.tau_hat(PartialPermutation.from_json(data)).tolist()


def _cmd_rsk(data, args, rng):
    qhat, phat = variant_rsk(MarginMatrix.from_json(data), rng, method=args.method)
    return {"qhat": qhat.to_json(), "phat": phat.to_json()}


def _cmd_evac(data, args, rng):
    return evacuate(RowStandardTableau.from_json(data)).to_json()


def _cmd_rect(data, args, rng):
    _need(data, "tableau", "i")
    return rectify(RowStandardTableau.from_json(data["tableau"]), int(data["i"])).to_json()


def _cmd_enum_syd(data, args, rng):
    sig = _signature(data)
    admissible_only = bool(data.get("admissible", False))
    diagrams = enumerate_asyd(sig) if admissible_only else enumerate_syd(sig)
    return [d.to_json() for d in diagrams]


def _cmd_enum_pp(data, args, rng):
    return [t.to_json() for t in enumerate_pp(*_dims(data))]


def _cmd_census(data, args, rng):
    p, q = _dims(data)
    return corr.census(p, q, check_forward=bool(data.get("check_forward", True))).to_json()


def _cmd_poset(data, args, rng):
    diagrams = sorted(enumerate_syd(_signature(data)), key=lambda d: d.render())
    return {
        "nodes": [d.render() for d in diagrams],
        "edges": [list(e) for e in sorted(hasse_edges(diagrams))],
    }


def _cmd_calibrate(data, args, rng):
    size = int(data.get("max_size", 4)) if isinstance(data, dict) else 4
    return calibrate(size, rng if args.seed is not None else None, args.trials or 5).to_json()


_HANDLERS: dict[str, Callable] = {
    "map": _cmd_map,
    "unmap": _cmd_unmap,
    "dual": _cmd_dual,
    "tauhat": _cmd_tauhat,
    "rsk": _cmd_rsk,
    "evac": _cmd_evac,
    "rect": _cmd_rect,
    "enum-syd": _cmd_enum_syd,
    "enum-pp": _cmd_enum_pp,
    "census": _cmd_census,
    "poset": _cmd_poset,
    "calibrate": _cmd_calibrate,
}

# commands that take no stdin document (only --in)
_NO_INPUT = {"verify", "calibrate"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steinberg-rsk", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--in", dest="infile", help="read the input document from FILE instead of stdin")
    parser.add_argument("--seed", type=int, help="seed for every random draw")
    parser.add_argument("--trials", type=int, help="independent oracle samples per certificate")
    parser.add_argument("--pmax", type=int, default=3)
    parser.add_argument("--qmax", type=int, default=3)
    parser.add_argument("--strict", action="store_true", help="refuse --trials without --seed")
    parser.add_argument("--method", choices=("auto", "fast", "oracle"), default="auto",
                        help="variant RSK implementation for the rsk command")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def _read_input(args, stdin) -> Any:
    if args.infile:
        try:
            with open(args.infile, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.infile}: {exc}") from exc
    elif args.command in _NO_INPUT:
        text = ""
    else:
        text = stdin.read()
    if not text.strip():
        if args.command in _NO_INPUT:
            return {}
        raise InputError("empty input document")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def run(argv: list[str], stdin=None) -> CommandResult:
    """Parse ``argv`` and execute; never raises for bad input."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if not exc.code:  # --help already printed usage
            return CommandResult("help", exit_code=EXIT_OK)
        return CommandResult.error(EXIT_INPUT, "invalid command line")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.strict and args.trials is not None and args.seed is None:
        return CommandResult.error(EXIT_INPUT, "--strict: --trials requires --seed")
    if args.trials is not None and args.trials < 2:
        return CommandResult.error(EXIT_INPUT, "--trials must be at least 2")
    rng = random.Random(args.seed) if args.seed is not None else random.Random()
    try:
        data = _read_input(args, stdin if stdin is not None else sys.stdin)
        if args.command == "verify":
            return _verify(args)
        return CommandResult.ok(_HANDLERS[args.command](data, args, rng))
    except (InputError, TableauError, NoPreimageError, ValueError, IndexError, KeyError, TypeError) as exc:
        return CommandResult.error(EXIT_INPUT, f"{type(exc).__name__}: {exc}")


def _verify(args) -> CommandResult:
    from .verify import run_all

    if args.pmax < 1 or args.qmax < 1:
        raise InputError("--pmax and --qmax must be positive")
    results = run_all(args.pmax, args.qmax, seed=args.seed or 0, trials=args.trials or 5)
    payload = {"passed": all(r.passed for r in results), "checks": [r.to_json() for r in results]}
    if payload["passed"]:
        return CommandResult.ok(payload)
    failed = [r.name for r in results if not r.passed]
    res = CommandResult.error(EXIT_VERIFY, *(f"failed: {name}" for name in failed))
    res.payload = payload
    return res


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.payload is not None:
        json.dump(result.payload, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    if result.status == "error":
        json.dump(result.to_json(), sys.stderr)
        sys.stderr.write("\n")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
