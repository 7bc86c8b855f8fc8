"""Command-line front end.

Exit codes: 0 success, 1 a verification or equivalence check came out
negative, 2 usage error, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import census
from .cycles import analyze
from .errors import ConvergenceError, Graph6Error, MixedGraphFormatError, SpectrumError, VerificationError
from .graphs import Graph, automorphisms, MAX_AUTOMORPHISM_N, find_isomorphism, named_graph, parse_graph6
from .hermitian import build_hermitian, hermitian_square
from .hypercube import EXACT_MAX_K, phi0, reduce_to_phi0, verify_phi0
from .mixed import MixedGraph, emit_mixed_json, parse_mixed_json
from .spectra import energy_bound, eigenvalues
from .switching import iso_switching_equivalent, switching_equivalent

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _fmt(x: float) -> str:
    s = f"{x:.9f}"
    return s[1:] if s == "-0.000000000" else s


def _load_mixed(path: str) -> MixedGraph:
    try:
        return parse_mixed_json(Path(path).read_bytes())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except (MixedGraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_graph(spec: str) -> Graph:
    """A named shortcut, a graph6 string, or a file holding one graph6 line."""
    try:
        return named_graph(spec)
    except ValueError:
        pass
    p = Path(spec)
    if p.is_file():
        try:
            text = p.read_bytes().strip()
        except OSError as exc:
            raise InputError(f"cannot read {spec}: {exc.strerror or exc}") from None
    else:
        text = spec.encode("ascii", "replace")
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise InputError(f"{spec!r} is neither a known graph name nor valid graph6: {exc}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


# --- subcommands ----------------------------------------------------------


def cmd_energy(args) -> int:
    m = _load_mixed(args.mixed)
    e = eigenvalues(build_hermitian(m), args.tol).energy
    bound = energy_bound(m)
    sq = hermitian_square(build_hermitian(m))
    print(f"E_H={_fmt(e)}, bound={_fmt(bound)}, gap={_fmt(bound - e)}")
    print(f"optimum: {'yes' if sq.is_scalar(m.underlying.max_degree) else 'no'}")
    return EXIT_OK


def cmd_check_optimum(args) -> int:
    m = _load_mixed(args.mixed)
    delta = m.underlying.max_degree
    sq = hermitian_square(build_hermitian(m))
    if sq.is_scalar(delta):
        print(f"optimum: yes (H^2 = {delta}I)")
        return EXIT_OK
    for u in range(m.n):
        for v in range(m.n):
            want = delta if u == v else 0
            got = sq[u, v]
            if (got.re, got.im) != (want, 0):
                print(f"optimum: no (H^2[{u},{v}] = {got}, expected {want} for H^2 = {delta}I)")
                return EXIT_FAIL
    raise AssertionError("unreachable")


def cmd_cycles(args) -> int:
    m = _load_mixed(args.mixed)
    rows = analyze(m)
    print(f"{'cycle':<20} {'holonomy':>8}  type")
    for c in rows:
        quad = "-".join(str(v) for v in c.vertices)
        print(f"{quad:<20} {str(c.holonomy):>8}  {c.type.value}")
    valid = sum(1 for c in rows if c.holonomy.re == -1 and c.holonomy.im == 0)
    print(f"{valid}/{len(rows)} cycles have holonomy -1")
    return EXIT_OK


def cmd_switch_equiv(args) -> int:
    m1, m2 = _load_mixed(args.a), _load_mixed(args.b)
    if m1.n != m2.n:
        print("not equivalent (different vertex counts)")
        return EXIT_FAIL
    if not args.iso:
        if m1.underlying != m2.underlying:
            print("not equivalent (different labeled underlying graphs)")
            return EXIT_FAIL
        w = switching_equivalent(m1, m2)
        if w is None:
            print("not equivalent")
            return EXIT_FAIL
        print(f"equivalent: theta={w.theta}")
        return EXIT_OK
    if m1.n > MAX_AUTOMORPHISM_N:
        raise UsageError(f"--iso supports at most {MAX_AUTOMORPHISM_N} vertices")
    base = find_isomorphism(m1.underlying, m2.underlying)
    if base is None:
        print("not equivalent (underlying graphs are not isomorphic)")
        return EXIT_FAIL
    moved = m1.relabel(base)
    w = iso_switching_equivalent(moved, m2, automorphisms(m2.underlying))
    if w is None:
        print("not equivalent")
        return EXIT_FAIL
    perm = base if w.perm is None else tuple(w.perm[base[v]] for v in range(m1.n))
    print(f"equivalent: perm=[{','.join(map(str, perm))}] theta={w.theta}")
    return EXIT_OK


def cmd_hypercube(args) -> int:
    if args.action in ("gen", "verify"):
        if args.k is None:
            raise UsageError(f"hypercube {args.action} needs -k")
        if not 1 <= args.k <= EXACT_MAX_K:
            raise UsageError(f"-k must be between 1 and {EXACT_MAX_K}")
    if args.action == "gen":
        _write(emit_mixed_json(phi0(args.k).mixed, indent=2) + "\n", args.output)
        return EXIT_OK
    if args.action == "verify":
        try:
            report = verify_phi0(args.k)
        except VerificationError as exc:
            print(f"FAIL: {exc}")
            return EXIT_FAIL
        print("\n".join(report.lines()))
        return EXIT_OK
    if args.mixed is None:
        raise UsageError("hypercube reduce needs an oriented mixed-graph JSON file")
    m = _load_mixed(args.mixed)
    try:
        theta = reduce_to_phi0(m)
    except ValueError as exc:
        print(f"cannot reduce: {exc}")
        return EXIT_FAIL
    print(f"theta={theta}")
    return EXIT_OK


def cmd_census(args) -> int:
    g = _load_graph(args.graph)
    strategy = "pruned" if args.pruned else "full"
    if strategy == "full" and g.m > census.FULL_MAX_EDGES:
        raise UsageError(f"full enumeration is limited to {census.FULL_MAX_EDGES} edges; pass --pruned")
    if g.m > census.PRUNED_MAX_EDGES:
        raise UsageError(f"enumeration is limited to {census.PRUNED_MAX_EDGES} edges")
    res = census.run_census(g, args.mode, strategy, jobs=args.jobs)
    _write(res.report.to_json(meta=not args.no_meta), args.output)
    if args.hits:
        try:
            census.save_hits(args.hits, res.hits)
        except OSError as exc:
            raise InputError(f"cannot write {args.hits}: {exc.strerror or exc}") from None
    if args.output not in (None, "-"):
        print(f"{res.report.raw_hits} optimum assignments, {len(res.classes)} classes")
    return EXIT_OK


def _class_lines(res: census.CensusResult) -> list[str]:
    return [f"  class {i}: size={c.size} a={c.a} b={c.b}" for i, c in enumerate(res.classes)]


def cmd_reproduce(args) -> int:
    name = args.target
    try:
        if name == "k4-classes":
            res = census.reproduce_k4_classes("pruned" if args.pruned else "full")
            lines = [f"K4 mixed: {res.report.raw_hits} optimum assignments, {len(res.classes)} classes"]
            lines += _class_lines(res)
        elif name == "q3-classes":
            res = census.reproduce_q3_classes("full" if args.full else "pruned", args.jobs)
            lines = [f"Q3 mixed: {res.report.raw_hits} optimum assignments, {len(res.classes)} classes"]
            lines += _class_lines(res)
        elif name in ("q3-orientations", "q4-orientations"):
            k = int(name[1])
            res = census.reproduce_hypercube_orientations(k, args.jobs)
            lines = [
                f"Q{k} oriented: {res.report.raw_hits} optimum orientations, "
                f"all switching equivalent to phi0({k})"
            ]
        else:
            rows = census.cubic_underlying_scan(args.n_max)
            if args.output:
                _write(census.scan_to_csv(rows), args.output)
            lines = [
                f"n={r.n} {r.graph6:<12} {r.name or '-':<3} parity={'ok' if r.parity_ok else 'fail'}"
                f" hits={r.raw_hits}"
                for r in rows
            ]
    except VerificationError as exc:
        print(f"FAIL: {exc}")
        return EXIT_FAIL
    print("\n".join(lines))
    print("PASS")
    return EXIT_OK


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixedenergy", description="Hermitian energy of mixed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("energy", help="Hermitian energy, the bound n*sqrt(Delta) and the gap")
    s.add_argument("mixed")
    s.add_argument("--tol", type=float, default=1e-9, help="eigensolver tolerance")
    s.set_defaults(func=cmd_energy)

    s = sub.add_parser("check-optimum", help="exact H^2 = Delta*I test")
    s.add_argument("mixed")
    s.set_defaults(func=cmd_check_optimum)

    s = sub.add_parser("cycles", help="holonomy and type of every 4-cycle")
    s.add_argument("mixed")
    s.set_defaults(func=cmd_cycles)

    s = sub.add_parser("switch-equiv", help="find a switching carrying A onto B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--iso", action="store_true", help="also allow relabeling by a graph isomorphism")
    s.set_defaults(func=cmd_switch_equiv)

    s = sub.add_parser("hypercube", help="the recursive optimum orientation phi0 of Q_k")
    s.add_argument("action", choices=("gen", "verify", "reduce"))
    s.add_argument("mixed", nargs="?", help="oriented hypercube JSON (reduce only)")
    s.add_argument("-k", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_hypercube)

    s = sub.add_parser("census", help="enumerate optimum assignments and their classes")
    s.add_argument("graph", help="name (K4, Q3, Q4, K33, prism, ...), graph6 string, or graph6 file")
    s.add_argument("--mode", choices=census.MODES, default="mixed")
    s.add_argument("--pruned", action="store_true", help="backtracking search instead of full product")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output")
    s.add_argument("--no-meta", action="store_true", help="omit timing so reports are byte-identical")
    s.add_argument("--hits", help="write every optimum assignment as JSON lines")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("reproduce", help="classification and uniqueness checks")
    s.add_argument("target", choices=("k4-classes", "q3-classes", "q3-orientations", "q4-orientations", "cubic-scan"))
    s.add_argument("--pruned", action="store_true", help="k4-classes: backtracking search")
    s.add_argument("--full", action="store_true", help="q3-classes: test all 3^12 assignments")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--n-max", type=int, default=8, choices=(4, 6, 8, 10))
    s.add_argument("-o", "--output", help="cubic-scan: CSV path")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConvergenceError, SpectrumError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
