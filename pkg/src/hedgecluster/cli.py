"""Command-line interface: ``hedgecd solve|verify|reduce|gen|stats``.

Exit codes: 0 success, 1 invalid solution / no solution within budget /
infeasible formula, 2 input or usage error, 3 structural precondition
violated.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from . import io, reductions, solvers
from .core import structural_stats, validate_solution
from .errors import InputError, StructuralError
from .generators import FAMILIES, InstanceFamily, generate
from .structure import build_intersection_graph, is_acyclic

OK, FAIL, USAGE, STRUCTURAL = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(path).write_text(text + "\n", encoding="utf-8")


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _auto(H):
    if is_acyclic(build_intersection_graph(H)):
        _log("auto: hedge intersection graph is acyclic, using the exact acyclic solver")
        return solvers.solve_acyclic(H)
    if structural_stats(H, delta_cap=0).bihedge:
        _log("auto: graph is bi-hedge, using the 2-approximation")
        return solvers.solve_approx2_bihedge(H)
    _log("auto: general graph, using the search tree with a doubling budget")
    return solvers.solve_fpt_optimal(H)


def cmd_solve(args) -> int:
    H = io.parse("hedgegraph", _read(args.input))
    if args.k is not None and args.k < 0:
        raise InputError("--k must be non-negative")
    if args.algo == "fpt":
        sol = solvers.solve_fpt(H, args.k) if args.k is not None else solvers.solve_fpt_optimal(H)
    elif args.algo == "brute":
        sol = solvers.solve_bruteforce(H)
    elif args.algo == "delta":
        sol = solvers.solve_delta_bounded(H, args.cap)
    elif args.algo == "approx2":
        sol = solvers.solve_approx2_bihedge(H)
    elif args.algo == "acyclic":
        sol = solvers.solve_acyclic(H)
    else:
        sol = _auto(H)
    if sol is None or (args.k is not None and len(sol) > args.k):
        _log(f"no solution with at most {args.k} hedges")
        return FAIL
    _write(args.output, io.serialize("solution", sol, H))
    return OK


def cmd_verify(args) -> int:
    H = io.parse("hedgegraph", _read(args.input))
    sol = io.parse("solution", _read(args.solution), H)
    verdict = validate_solution(H, sol)
    if verdict.valid:
        print(f"valid: {len(sol)} hedges")
        return OK
    a, b, c = (v + 1 for v in verdict.witness)
    print(f"invalid: induced P3 {a} {b} {c} remains")
    return FAIL


def _write_map(path: str | None, pairs) -> None:
    if path is not None:
        _write(path, "\n".join(f"{src} {dst}" for src, dst in pairs))


def cmd_reduce(args) -> int:
    src, dst = args.source, args.target
    if src == "vc" and dst == "hcd":
        g = io.parse("graph", _read(args.input))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            H, mapping = reductions.vc_to_hcd(g)
        for w in caught:
            _log(f"warning: {w.message}")
        _write(args.output, io.serialize("hedgegraph", H))
        _write_map(args.map, ((v + 1, H.token(mapping[v]) if v in mapping else "-") for v in range(g.n)))
        return OK
    if src in ("minones", "propsat") and dst == "hcd":
        phi = io.parse("formula", _read(args.input))
        eliminated: set[str] = set()
        if src == "propsat":
            reduced = reductions.eliminate_constants(phi)
            if isinstance(reduced, reductions.Infeasible):
                _log(f"infeasible: {reduced.reason}")
                return FAIL
            eliminated = set(phi.variables) - set(reduced.variables)
            H, mapping = reductions.propsat_to_hcd(reduced)
        else:
            H, mapping = reductions.minones_to_hcd(phi)
        _write(args.output, io.serialize("hedgegraph", H))
        _write_map(args.map, (
            (v, "0" if v in eliminated else H.token(mapping[v]) if v in mapping else "-")
            for v in phi.variables
        ))
        return OK
    if src == "hcd" and dst in ("minones", "propsat"):
        H = io.parse("hedgegraph", _read(args.input))
        encode = reductions.hcd_to_minones if dst == "minones" else reductions.hcd_to_propsat
        phi, names = encode(H)
        _write(args.output, io.serialize("formula", phi))
        _write_map(args.map, ((H.token(h), names[h]) for h in H.hedges))
        return OK
    raise InputError(f"no reduction from {src} to {dst}")


def cmd_gen(args) -> int:
    spec = InstanceFamily(
        family=args.family, seed=args.seed, n=args.n, ell=args.ell, density=args.density,
        host=args.host, host_size=args.host_size, variant=args.variant,
    )
    _write(args.output, io.serialize("hedgegraph", generate(spec)))
    return OK


def cmd_stats(args) -> int:
    H = io.parse("hedgegraph", _read(args.input))
    rep = structural_stats(H, args.cap)
    F = build_intersection_graph(H)
    lines = [
        f"vertices: {H.n}",
        f"edges: {H.m}",
        f"hedges: {H.num_hedges}",
        f"p3 internal: {rep.p3_counts['internal']}",
        f"p3 simple: {rep.p3_counts['simple']}",
        *(f"k3 {k}-hedge: {rep.k3_counts[k]}" for k in (1, 2, 3)),
        f"bihedge: {'yes' if rep.bihedge else 'no'}",
        f"delta_max: {rep.delta_max if not rep.exceeds_cap else f'> {rep.delta_cap}'}",
        f"intersection acyclic: {'yes' if is_acyclic(F) else 'no'}",
    ]
    print("\n".join(lines))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hedgecd", description="Hedge cluster deletion toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve an instance")
    s.add_argument("--algo", choices=("brute", "fpt", "delta", "approx2", "acyclic", "auto"), default="auto")
    s.add_argument("--input", required=True)
    s.add_argument("--k", type=int, help="budget; exit 1 when no solution fits")
    s.add_argument("--cap", type=int, default=3, help="packing cap for --algo delta")
    s.add_argument("--output")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution file")
    v.add_argument("--input", required=True)
    v.add_argument("--solution", required=True)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("reduce", help="translate between problems")
    r.add_argument("--from", dest="source", choices=("vc", "minones", "propsat", "hcd"), required=True)
    r.add_argument("--to", dest="target", choices=("hcd", "minones", "propsat"), required=True)
    r.add_argument("--input", required=True)
    r.add_argument("--output", required=True)
    r.add_argument("--map", help="write 'source target' pairs; 0 = fixed to zero, - = unused")
    r.set_defaults(func=cmd_reduce)

    g = sub.add_parser("gen", help="generate a seeded instance")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--ell", type=int, default=6)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--host", choices=("path", "clique"), default="path")
    g.add_argument("--host-size", type=int, default=0)
    g.add_argument("--variant", choices=("blocks", "clique"))
    g.add_argument("--output", required=True)
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("stats", help="structural summary")
    t.add_argument("--input", required=True)
    t.add_argument("--cap", type=int, default=3)
    t.set_defaults(func=cmd_stats)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        _log(f"error: {exc}")
        return USAGE
    except StructuralError as exc:
        _log(f"structural error: {exc}")
        return STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
