"""Command-line entry point: ``arfs2 COMMAND [INPUT] [options]``.

Exit codes: 0 certified result, 3 result qualified by a search bound,
1 parse or precondition error, 2 search or iteration limit hit,
4 self-test failures.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Any

from . import io, selftest
from .errors import (ArfS2Error, BoundExceeded, DegreeCapExceeded, IterationLimit)
from .ideals import colon_stabilize, u_part
from .polymod import DEFAULT_CHAR, frac_intersect, ab_module_sides
from .s2 import s2ify
from .semigroup import AffineSemigroup, conductor_element, saturation
from .vectors import ExpVec, grlex_sorted
from .weak_arf import is_weakly_arf_bounded, wa_s2ify, weak_arf_closure

EXIT_OK, EXIT_ERROR, EXIT_LIMIT, EXIT_BOUNDED, EXIT_SELFTEST = 0, 1, 2, 3, 4
COMMANDS = ("normalize", "conductor", "colon", "upart", "s2ify", "wapcheck",
            "arfclose", "was2ify", "modcalc", "selftest")
DEFAULT_BOUND = 60


class UsageError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def _default_bound() -> int:
    env = os.environ.get("ARFS2_BOUND")
    if env is None:
        return DEFAULT_BOUND
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"ARFS2_BOUND must be an integer, got {env!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arfs2", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", nargs="?", help="semigroup or module; read from stdin if omitted or '-'")
    ap.add_argument("--bound", type=int, default=None, help="search box bound (default 60 or $ARFS2_BOUND)")
    ap.add_argument("--max-iter", type=int, default=64)
    ap.add_argument("--char", type=int, default=DEFAULT_CHAR, help="field characteristic for modcalc")
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--certify", action="store_true")
    ap.add_argument("--a", dest="a", help="first element: exponent tuple, monomial or polynomial")
    ap.add_argument("--b", dest="b", help="second element")
    ap.add_argument("--suite", action="append", help="selftest: run only this suite (repeatable)")
    return ap


def _read_input(arg: str | None) -> str:
    if arg is None or arg == "-":
        return sys.stdin.read()
    return arg


def _parse_vec(text: str | None, S: AffineSemigroup, what: str) -> ExpVec:
    if text is None:
        raise UsageError(f"--{what} is required for this command")
    t = text.strip()
    if t.startswith("("):
        v = io.parse_gens(t)
        if len(v) != 1:
            raise UsageError(f"--{what} must be a single vector")
        vec = v[0]
    elif t.isdigit():
        vec = (int(t),)
    else:
        vec = io.parse_monomial(t, "xy" if S.dim == 2 else "t")
    if len(vec) != S.dim:
        raise UsageError(f"--{what} has dimension {len(vec)}, semigroup has {S.dim}")
    if not any(vec) or vec not in S:
        raise UsageError(f"--{what}={vec} must be a nonzero element of the semigroup")
    return vec


def _presented(S: AffineSemigroup, given: list[ExpVec] | None) -> list[list[int]]:
    """Generators of ``S``: those of the input in input order, then new ones in grlex."""
    gens = set(S.gens)
    first = [g for g in dict.fromkeys(given or []) if g in gens]
    rest = [g for g in grlex_sorted(gens) if g not in first]
    return [list(g) for g in first + rest]


def _vecs(vs) -> list[list[int]]:
    return [list(v) for v in vs]


def _semigroup_input(raw: str) -> tuple[AffineSemigroup, list[ExpVec]]:
    if io._is_json(raw):
        S = io.parse_semigroup(raw)
        import json
        return S, [tuple(g) for g in json.loads(raw)["gens"]]
    gens = io.parse_gens(raw)
    return io.parse_semigroup(raw), gens


def run(args: argparse.Namespace, stdin_text: str | None = None) -> tuple[dict[str, Any], int]:
    """Execute one command; returns the report and the exit code."""
    bound = args.bound if args.bound is not None else _default_bound()
    if bound < 8:
        raise UsageError("--bound must be at least 8")
    if not _is_prime(args.char):
        raise UsageError(f"--char {args.char} is not prime")
    cmd = args.command
    if cmd == "selftest":
        rep = selftest.run(args.seed, args.suite)
        return rep, EXIT_OK if rep["passed"] else EXIT_SELFTEST

    raw = stdin_text if stdin_text is not None else _read_input(args.input)
    if cmd == "modcalc":
        return _modcalc(raw, args)

    S, given = _semigroup_input(raw)
    out: dict[str, Any] = {"input": _presented(S, given)}
    code = EXIT_OK
    if cmd == "normalize":
        out["gens"] = _presented(saturation(S), given)
    elif cmd == "conductor":
        out["conductor_element"] = list(conductor_element(S))
    elif cmd == "colon":
        a, b = _parse_vec(args.a, S, "a"), _parse_vec(args.b, S, "b")
        U, n = colon_stabilize(S, a, b)
        out.update(a=list(a), b=list(b), n=n, gens=_vecs(U.gens))
    elif cmd == "upart":
        a = _parse_vec(args.a, S, "a")
        out.update(a=list(a), gens=_vecs(u_part(S, a).gens))
    elif cmd == "s2ify":
        rep = s2ify(S, certify=args.certify)
        out.update(gens=_presented(rep.s2_gens, given), added=_vecs(rep.added),
                   a=list(rep.a) if rep.a else None, b=list(rep.b) if rep.b else None,
                   n=rep.stabilization_n, is_fixed=rep.is_fixed,
                   u_ideal=_vecs(rep.u_ideal.gens) if rep.u_ideal else None,
                   certificates=[{"name": c.name, "passed": c.passed, "detail": c.detail}
                                 for c in rep.certificates],
                   certified=rep.certified)
        code = EXIT_OK if rep.certified else EXIT_BOUNDED
    elif cmd == "wapcheck":
        v = is_weakly_arf_bounded(S, bound)
        out.update(bound=bound, verdict=str(v), witness=_witness(v.witness))
        code = EXIT_BOUNDED if v.holds else EXIT_OK
    elif cmd == "arfclose":
        rep = weak_arf_closure(S, bound, args.max_iter)
        out.update(gens=_presented(rep.closure, given), added=_vecs(rep.new_generators),
                   iterations=rep.iterations, bound=rep.search_bound, certified=rep.certified)
        code = EXIT_OK if rep.certified else EXIT_BOUNDED
    elif cmd == "was2ify":
        rep = wa_s2ify(S, bound, args.max_iter, certify=args.certify)
        out.update(gens=_presented(rep.result, given),
                   closure_added=_vecs(rep.closure.new_generators),
                   s2_added=_vecs(rep.s2.added), wap=str(rep.wap), s2_fixed=rep.s2_fixed,
                   bound=bound, certified=rep.certified)
        code = EXIT_OK if rep.certified else EXIT_BOUNDED
    return out, code


def _witness(w) -> Any:
    if w is None:
        return None
    if hasattr(w, "witnesses"):
        return {"binomial": [list(w.p), list(w.q)], "adds": _vecs(w.witnesses)}
    return {"x": list(w.x), "y": list(w.y), "z": list(w.z), "adds": list(w.witness)}


def _modcalc(raw: str, args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    p = args.char
    M = io.parse_module(raw, p)
    if args.a is None or args.b is None:
        raise UsageError("modcalc needs --a and --b")
    a, b = io.parse_poly(args.a, p), io.parse_poly(args.b, p)
    if a.is_zero() or b.is_zero():
        raise UsageError("--a and --b must be nonzero")
    L = frac_intersect(M, a, b)
    equal, regular = ab_module_sides(M, a, b)
    out = {"input": io.module_to_json(M)["gens"], "char": p,
           "a": io.format_poly(a), "b": io.format_poly(b),
           "denominator": io.format_poly(L.denom),
           "numerator_basis": [[io.format_poly(c) for c in g.components] for g in L.num.gb],
           "equals_square_intersection": equal, "pair_regular": regular,
           "biconditional_holds": equal == regular}
    return out, EXIT_OK


def _render_text(cmd: str, out: dict[str, Any]) -> str:
    if cmd == "selftest":
        lines = [f"{name}: {r['instances'] - r['failures']}/{r['instances']} passed"
                 for name, r in out["suites"].items()]
        lines += [f"fixture {k}: {'ok' if v else 'MISMATCH'}" for k, v in out["fixtures"]["match"].items()]
        lines.append("PASSED" if out["passed"] else "FAILED")
        return "\n".join(lines)
    lines = []
    for k, v in out.items():
        if isinstance(v, list) and v and isinstance(v[0], list) and all(isinstance(x, int) for x in v[0]):
            v = " ".join("(" + ",".join(map(str, x)) + ")" for x in v)
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        out, code = run(args)
    except (BoundExceeded, IterationLimit, DegreeCapExceeded) as e:
        return _fail(args, e, EXIT_LIMIT)
    except (ArfS2Error, ValueError, KeyError, TypeError) as e:
        return _fail(args, e, EXIT_ERROR)
    out = {"schema": selftest.SCHEMA, "command": args.command, **out}
    print(io.dumps(out) if args.json else _render_text(args.command, out))
    return code


def _fail(args: argparse.Namespace, e: Exception, code: int) -> int:
    if args.json:
        print(io.dumps({"schema": selftest.SCHEMA, "command": args.command,
                        "error": str(e), "kind": type(e).__name__}))
    else:
        print(f"error: {e}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
