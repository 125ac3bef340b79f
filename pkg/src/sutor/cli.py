"""Command-line interface: compute, polytope, check, gen, batch, version.

Exit codes: 0 success/pass, 1 usage or I/O error, 2 blocking validation
diagnostics, 3 unsupported structure (torsion in H where a polytope is
needed).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from . import __version__, families
from . import engine as E
from . import groupring as GR
from . import polytope as P
from .abelian import INFINITE
from .groupring import GroupRingElement, UnsupportedTorsionError


def _color_enabled() -> bool:
    if os.environ.get("SUTOR_COLOR", "") == "0":
        return False
    return sys.stdout.isatty()


def _mark(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if _color_enabled():
        return f"\x1b[32m{word}\x1b[0m" if ok else f"\x1b[31m{word}\x1b[0m"
    return word


def free_var_names(result: E.TorsionResult) -> List[str]:
    H = result.H
    if H.rank == 1:
        return ["t"]
    if not result.input.relators and len(result.input.alphabet) == H.rank:
        return [g.name for g in result.input.alphabet]
    return [f"t{i + 1}" for i in range(H.rank)]


def format_element(p: GroupRingElement, names: Sequence[str]) -> str:
    if not p.terms:
        return "0"
    parts: List[str] = []
    for h, c in GR.sorted_terms(p):
        factors = []
        for name, e in zip(names, h.free):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        for i, e in enumerate(h.tor):
            if e == 1:
                factors.append(f"s{i + 1}")
            elif e != 0:
                factors.append(f"s{i + 1}^{e}")
        mono = " ".join(factors)
        coeff = abs(c)
        if not mono:
            body = str(coeff)
        elif coeff == 1:
            body = mono
        else:
            body = f"{coeff} {mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def _load_input(path: str) -> E.SuturedInput:
    if path == "-":
        return E.input_from_dict(json.load(sys.stdin))
    return E.load_input(path)


def _compute(path: str) -> E.TorsionResult:
    return E.torsion(_load_input(path))


def _run_report(path: str) -> dict:
    t0 = time.perf_counter()
    inp = _load_input(path)
    diags = E.validate(inp)
    result = E.torsion(inp)
    ev = E.evaluation_check(inp, result)
    au = E.augmentation_order_check(inp, result)
    return {
        "name": result.input.name or path,
        "H": {"rank": result.H.rank, "torsion": list(result.H.torsion)},
        "tau": GR.to_records(result.tau),
        "diagnostics": [
            {"code": d.code, "message": d.message, "blocking": d.blocking} for d in diags
        ],
        "checks": {
            "evaluation": ev.passed,
            "augmentation_order": au.passed,
        },
        "timing_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }


def cmd_compute(args) -> int:
    try:
        inp = _load_input(args.path)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    diags = E.validate(inp)
    blocking = [d for d in diags if d.blocking]
    for d in diags:
        if not d.blocking:
            print(f"warning: {d.code}: {d.message}", file=sys.stderr)
    if blocking:
        for d in blocking:
            print(f"{d.code}: {d.message}", file=sys.stderr)
        return 2
    result = E.torsion(inp)
    if args.json:
        print(json.dumps(_run_report_from(result), indent=2, sort_keys=True))
    else:
        print(f"input: {result.input.name or args.path}")
        print(f"H1(M): {result.H.describe()}")
        if not result.input.claimed_irreducible:
            print("note: irreducibility not asserted; det(A) reported as-is")
        print(f"tau ~ {format_element(result.tau, free_var_names(result))}")
    return 0


def _run_report_from(result: E.TorsionResult) -> dict:
    inp = result.input
    ev = E.evaluation_check(inp, result)
    au = E.augmentation_order_check(inp, result)
    return {
        "name": inp.name,
        "H": {"rank": result.H.rank, "torsion": list(result.H.torsion)},
        "tau": GR.to_records(result.tau),
        "checks": {"evaluation": ev.passed, "augmentation_order": au.passed},
    }


def cmd_polytope(args) -> int:
    try:
        result = _compute(args.path)
    except E.ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        S = P.support(result.tau)
    except UnsupportedTorsionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    names = free_var_names(result)
    verts = P.vertices(S)
    print(f"support: {len(S.points)} points in dimension {S.dim}")
    print("hull vertices: " + " ".join(str(v) for v in verts))
    for alpha in args.alpha or []:
        vec = tuple(int(x) for x in alpha.split(","))
        print(f"width[{alpha}] = {P.width(S, vec)}")
    sym = P.is_centrally_symmetric(S)
    print(f"centrally symmetric: {'yes' if sym else 'no'}")
    if args.diff:
        dverts = P.difference_polytope(S)
        print(f"difference polytope: {len(dverts)} vertices: "
              + " ".join(str(v) for v in dverts))
    if args.tsv:
        with open(args.tsv, "w", encoding="utf-8") as fh:
            fh.write(P.to_tsv(S))
        print(f"wrote {args.tsv}")
    if args.svg:
        try:
            svg = P.to_svg(S)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
        print(f"wrote {args.svg}")
    return 0


def _load_tau_or_input(path: str):
    """A path may hold a SuturedInput or a serialized group-ring element."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if "terms" in obj and "group" in obj:
        return GR.from_records(obj), None
    inp = E.input_from_dict(obj)
    result = E.torsion(inp)
    return result.raw_det, result


def cmd_check(args) -> int:
    try:
        tau, result = _load_tau_or_input(args.path)
    except E.ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    all_ok = True
    ran_any = False
    if args.eval:
        ran_any = True
        if result is None:
            print("error: --eval needs a presentation input", file=sys.stderr)
            return 1
        ev = E.evaluation_check(result.input, result)
        all_ok &= ev.passed
        print(f"{_mark(ev.passed)} eval: G = {ev.G.describe()}, "
              f"p_*(tau) {'=' if ev.passed else '!='} +-I_G")
    if args.aug:
        ran_any = True
        if result is None:
            print("error: --aug needs a presentation input", file=sys.stderr)
            return 1
        au = E.augmentation_order_check(result.input, result)
        all_ok &= au.passed
        print(f"{_mark(au.passed)} aug: |eps(tau)| = {au.aug}, |G| = {au.ord}")
    if args.disk is not None:
        ran_any = True
        try:
            report = P.disk_obstruction_report(GR.normalize(tau), args.disk)
        except (ValueError, UnsupportedTorsionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        verdict = "OBSTRUCTED" if report.obstructed else "NOT OBSTRUCTED"
        cap_note = (f"p capped at {report.effective_cap} by degree span"
                    if report.effective_cap < report.p_max
                    else f"p searched up to {report.effective_cap}")
        print(f"disk decomposition: {verdict} ({cap_note})")
        for c in report.candidates:
            if c.single_match is not None:
                print(f"  {c.label}: matches solid torus p = {c.single_match}")
            elif c.product_match is not None:
                print(f"  {c.label}: matches product p = {c.product_match}")
            else:
                print(f"  {c.label}: no solid-torus match")
    if not ran_any:
        print("error: no checks requested (use --eval/--aug/--disk)", file=sys.stderr)
        return 1
    return 0 if all_ok else 1


_FAMILIES = {
    "solid-torus": (1, lambda p: families.solid_torus(p)),
    "pretzel-odd": (3, lambda r, s, t: families.pretzel_odd(r, s, t)),
    "pretzel-even": (3, lambda r, s, t: families.pretzel_even(r, s, t)),
    "cantwell-conlon": (0, lambda: families.cantwell_conlon()),
    "trefoil": (0, lambda: families.wirtinger_knot(families.TREFOIL_PD)),
    "figure-eight": (0, lambda: families.wirtinger_knot(families.FIGURE_EIGHT_PD)),
    "unknot3": (0, lambda: families.wirtinger_knot(families.UNKNOT3_PD)),
}


def cmd_gen(args) -> int:
    if args.family not in _FAMILIES:
        print(f"error: unknown family {args.family!r}; known: "
              + ", ".join(sorted(_FAMILIES)), file=sys.stderr)
        return 1
    arity, fn = _FAMILIES[args.family]
    if len(args.params) != arity:
        print(f"error: family {args.family} takes {arity} parameter(s)", file=sys.stderr)
        return 1
    try:
        inp = fn(*[int(x) for x in args.params])
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(E.input_to_dict(inp), indent=2, sort_keys=True))
    return 0


def _batch_entry(base: str, entry) -> str:
    if isinstance(entry, str):
        entry = {"path": entry}
    path = entry["path"]
    if not os.path.isabs(path):
        path = os.path.join(base, path)
    label = entry.get("name") or entry["path"]
    try:
        result = _compute(path)
    except Exception as exc:  # per-entry failure must not kill the batch
        return f"FAIL {label}: {exc}"
    ev = E.evaluation_check(result.input, result)
    au = E.augmentation_order_check(result.input, result)
    ok = ev.passed and au.passed
    note = f"eval={'ok' if ev.passed else 'FAIL'} aug={'ok' if au.passed else 'FAIL'}"
    if "expected_tau" in entry:
        expected = GR.normalize(GR.from_records(entry["expected_tau"]))
        match = GR.equal(result.tau, expected)
        ok &= match
        note += f" expected={'ok' if match else 'MISMATCH'}"
    names = free_var_names(result)
    status = "PASS" if ok else "FAIL"
    return f"{status} {label}: tau ~ {format_element(result.tau, names)} [{note}]"


def cmd_batch(args) -> int:
    try:
        with open(args.manifest, "r", encoding="utf-8") as fh:
            manifest = json.load(fh)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    entries = manifest["entries"] if isinstance(manifest, dict) else manifest
    base = os.path.dirname(os.path.abspath(args.manifest))
    if args.parallel > 1:
        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            lines = list(pool.map(lambda e: _batch_entry(base, e), entries))
    else:
        lines = [_batch_entry(base, e) for e in entries]
    failed = 0
    for line in lines:
        print(line)
        if line.startswith("FAIL"):
            failed += 1
    print(f"{len(entries) - failed}/{len(entries)} passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sutor", description=__doc__)
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("compute", help="compute the torsion of an input file")
    p.add_argument("path", help="SuturedInput JSON file, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("polytope", help="support polytope analysis")
    p.add_argument("path")
    p.add_argument("--alpha", action="append",
                   help="comma-separated covector, e.g. 1,0,0 (repeatable)")
    p.add_argument("--diff", action="store_true", help="print the difference polytope")
    p.add_argument("--svg", help="write an SVG plot (dim <= 2)")
    p.add_argument("--tsv", help="write the support as TSV")
    p.set_defaults(fn=cmd_polytope)

    p = sub.add_parser("check", help="run torsion identity checks")
    p.add_argument("path", help="input file or serialized tau")
    p.add_argument("--eval", action="store_true", help="evaluation identity")
    p.add_argument("--aug", action="store_true", help="augmentation vs group order")
    p.add_argument("--disk", type=int, metavar="P_MAX",
                   help="disk-decomposability obstruction up to P_MAX")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("gen", help="emit a builtin fixture")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("batch", help="run a manifest of inputs")
    p.add_argument("manifest")
    p.add_argument("--parallel", type=int, default=1)
    p.set_defaults(fn=cmd_batch)

    p = sub.add_parser("version", help="print the version")
    p.set_defaults(fn=lambda args: (print(f"sutor {__version__}"), 0)[1])
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if not getattr(args, "fn", None):
        ap.print_help()
        return 1
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
