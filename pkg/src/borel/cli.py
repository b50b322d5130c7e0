"""Command line front end: ``borel <command> ...``.

Exit codes: 0 success, 1 a property asserted by the command is false,
2 bad input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import codim3
from .errors import BorelError, InconsistentInput, InternalError
from .gallery import run_gallery
from .groebner import DEFAULT_ENTRY_BOUND, DEFAULT_TRIALS, gin, require_homogeneous
from .invariants import (DEFAULT_DEGREE_BOUND, BettiTable, HilbertFunction, ek_betti,
                         hilbert_function, hilbert_function_of, koszul_betti)
from .lefschetz import SLP, SSP, WLP, analyze
from .monomials import MonomialIdeal
from .parsing import load_ideal
from .polynomials import format_monomial

log = logging.getLogger("borel")

PROPERTIES = {"wlp": (WLP,), "slp": (SLP,), "ssp": (SSP,), "all": (WLP, SLP, SSP)}
METHODS = {"criterion": ("criterion",), "betti": ("betti",), "oracle": ("oracle",),
           "all": ("criterion", "betti", "oracle")}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InconsistentInput(f"{name}={raw!r} is not an integer") from None


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load_block(args):
    f = load_ideal(args.file)
    if args.block:
        if args.block not in f.ideals:
            raise InconsistentInput(f"no block {args.block!r}; have {', '.join(f.ideals)}")
        gens = f.ideals[args.block]
    else:
        gens = f.generators
    return f, [g for g in gens if g]


def _monomial(n, gens) -> MonomialIdeal | None:
    if gens and all(g.is_monomial() for g in gens):
        return MonomialIdeal(n, tuple(g.lm for g in gens))
    return None


def _gin(args, n, gens) -> MonomialIdeal:
    return gin(gens, trials=args.trials, seed=args.seed, entry_bound=args.entry_bound)


def _stable(args, n, gens) -> MonomialIdeal:
    """The ideal itself when it is strongly stable, else its gin."""
    I = _monomial(n, gens)
    if I is not None and I.is_strongly_stable():
        return I
    log.info("input is not a strongly stable monomial ideal; using gin")
    return _gin(args, n, gens)


def _generators_payload(I: MonomialIdeal, names) -> dict:
    return {"n": I.n, "variables": list(names),
            "generators": [list(g) for g in I.gens],
            "text": [format_monomial(g, names) for g in I.gens]}


def cmd_gin(args) -> int:
    f, gens = _load_block(args)
    G = _gin(args, f.n, gens)
    payload = _generators_payload(G, f.names)
    _emit(args, payload, "gin = (" + ", ".join(payload["text"]) + ")")
    return 0


def cmd_hilbert(args) -> int:
    f, gens = _load_block(args)
    I = _monomial(f.n, gens)
    if I is not None:
        H = hilbert_function(I, args.degree_bound)
    else:
        require_homogeneous(gens)
        H = hilbert_function_of(gens, args.degree_bound)
    payload = {"hilbert": H.to_json(), "socle_degree": H.socle_degree}
    _emit(args, payload, "H = " + " ".join(map(str, H.values)) + f"   (t = {H.socle_degree})")
    return 0


def cmd_betti(args) -> int:
    f, gens = _load_block(args)
    I = _monomial(f.n, gens)
    if args.method == "ek" or (args.method == "auto" and I is not None and I.is_stable()):
        if I is None:
            raise InconsistentInput("the Eliahou-Kervaire formula needs a monomial ideal")
        B = ek_betti(I)
        method = "ek"
    else:
        require_homogeneous(gens)
        B = koszul_betti(I if I is not None else gens, args.degree_bound)
        method = "koszul"
    payload = {"n": B.n, "method": method, "betti": B.to_json()}
    _emit(args, payload, B.diagram())
    return 0


def cmd_lefschetz(args) -> int:
    f, gens = _load_block(args)
    S = _stable(args, f.n, gens)
    reports = analyze(S, PROPERTIES[args.property], METHODS[args.method])
    verdicts = {}
    for r in reports:
        verdicts.setdefault(r.property, set()).add(r.verdict)
    for prop, vs in verdicts.items():
        if len(vs) > 1:
            raise InternalError(f"methods disagree on {prop}: {[r.to_json() for r in reports]}")
    payload = {"reports": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        line = f"{r.property:<4} {r.method:<9} {'true' if r.verdict else 'false'}"
        if r.witnesses:
            w = r.witnesses[0]
            line += f"   witness {w.tuple}: {w.f_value} vs {w.required} ({w.condition})"
        lines.append(line)
    _emit(args, payload, "\n".join(lines))
    return 0 if all(r.verdict for r in reports) else 1


def _read_reconstruct_input(path):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except json.JSONDecodeError as e:
        raise InconsistentInput(f"bad JSON: {e}") from None
    if not isinstance(data, dict):
        raise InconsistentInput("expected a JSON object with 'betti' and/or 'hilbert'")
    try:
        H = HilbertFunction.from_json(data["hilbert"]) if "hilbert" in data else None
        B = BettiTable.from_json(data["betti"], codim3.N) if "betti" in data else None
    except (ValueError, TypeError, AttributeError) as e:
        raise InconsistentInput(f"malformed table: {e}") from None
    return H, B


def cmd_reconstruct(args) -> int:
    H, B = _read_reconstruct_input(args.input)
    inp = codim3.ReconstructionInput(args.mode, H, B)
    result = codim3.reconstruct(inp)
    names = ["x1", "x2", "x3"]
    if isinstance(result, BettiTable):
        payload = {"n": result.n, "method": "reconstructed", "betti": result.to_json()}
        _emit(args, payload, result.diagram())
    else:
        payload = _generators_payload(result, names)
        _emit(args, payload, "gin = (" + ", ".join(payload["text"]) + ")")
    return 0


def cmd_paper_gallery(args) -> int:
    checks = run_gallery(trials=args.trials, seed=args.seed, entry_bound=args.entry_bound)
    failed = [c for c in checks if not c.ok]
    payload = {"passed": len(checks) - len(failed), "failed": len(failed),
               "checks": [c.to_json() for c in checks]}
    lines = [f"{'ok  ' if c.ok else 'FAIL'} {c.fixture} [{c.block}] {c.key}"
             + ("" if c.ok else f": expected {c.expected}, got {c.actual}") for c in checks]
    lines.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit(args, payload, "\n".join(lines))
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trials", type=int, default=None, help="gin trials (BOREL_TRIALS)")
    common.add_argument("--entry-bound", type=int, default=None,
                        help="random matrix entries in [-B, B] (BOREL_ENTRY_BOUND)")
    common.add_argument("--seed", type=int, default=None, help="RNG seed (BOREL_SEED)")
    common.add_argument("--degree-bound", type=int, default=None,
                        help="search bound for Hilbert/Betti computations (BOREL_DEGREE_BOUND)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="borel", description="Generic initial ideals and Lefschetz properties")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("file", help="ideal file")
        sp.add_argument("--block", default="", help="generator block label (default: first)")
        sp.set_defaults(func=fn)
        return sp

    with_file("gin", cmd_gin, "generic initial ideal (graded revlex)")
    with_file("hilbert", cmd_hilbert, "Hilbert function of R/I")
    sp = with_file("betti", cmd_betti, "graded Betti numbers of I")
    sp.add_argument("--method", choices=("auto", "ek", "koszul"), default="auto")
    sp = with_file("lefschetz", cmd_lefschetz, "WLP / SLP / SSP verdicts")
    sp.add_argument("--property", choices=tuple(PROPERTIES), default="all")
    sp.add_argument("--method", choices=tuple(METHODS), default="all")

    sp = sub.add_parser("reconstruct", parents=[common], help="rebuild gin in three variables")
    sp.add_argument("--mode", choices=codim3.MODES, required=True)
    sp.add_argument("input", help="JSON with 'betti' ({'q,i': count}) and/or 'hilbert' ([H0, H1, ...]); '-' for stdin")
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("paper-gallery", parents=[common], help="replay the bundled worked examples")
    sp.set_defaults(func=cmd_paper_gallery)
    return p


def _fill_env_defaults(args):
    for attr, env, default in (("trials", "BOREL_TRIALS", DEFAULT_TRIALS),
                               ("entry_bound", "BOREL_ENTRY_BOUND", DEFAULT_ENTRY_BOUND),
                               ("seed", "BOREL_SEED", 0),
                               ("degree_bound", "BOREL_DEGREE_BOUND", DEFAULT_DEGREE_BOUND)):
        if getattr(args, attr) is None:
            setattr(args, attr, _env_int(env, default))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _fill_env_defaults(args)
        return args.func(args)
    except BorelError as e:
        return _report_error(args, e, e.exit_code)
    except (OSError, ValueError) as e:
        return _report_error(args, e, 2)


def _report_error(args, e: Exception, code: int) -> int:
    payload = e.to_json() if isinstance(e, BorelError) else {"error": type(e).__name__, "message": str(e)}
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"error: {payload['error']}: {payload['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
