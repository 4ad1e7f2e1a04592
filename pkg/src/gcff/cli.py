"""Command-line front end: construct, verify, bound, and solve cover-free
families on graphs, plus batch regeneration of the reference small-case
table and the figure matrices.

Exit codes: 0 success/verified, 1 property failure, 2 input error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import constructions, graycode
from .bounds import bounds_for
from .core import IncidenceMatrix, find_violation
from .errors import InvalidInputError, ResourceLimitError
from .graphs import Graph, cycle, make_family
from .sperner import optimal_1cff
from .solver import BACKEND, DEFAULT_BUDGET, exact_t

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_tag_args(tag: Optional[str]) -> Optional[tuple[str, list[int]]]:
    if not tag or "(" not in tag or not tag.endswith(")"):
        return None
    name, _, rest = tag.partition("(")
    try:
        return name, [int(x) for x in rest[:-1].split(",")]
    except ValueError:
        return None


def _construct(g: Graph, method: str) -> tuple[IncidenceMatrix, str]:
    """Build a CFF for g; returns (matrix, method actually used)."""
    parsed = _parse_tag_args(g.family)
    name = parsed[0] if parsed else None
    args = parsed[1] if parsed else []

    if method == "auto":
        if name in ("path", "cycle", "hamming"):
            method = "gray"
        elif name == "star" or (name == "windmill" and args[0] == 2):
            method = "star"
        elif name in ("windmill",):
            method = "windmill"
        elif name == "wheel" and g.n >= 5:
            method = "universal"
        elif name == "loops":
            return optimal_1cff(g.n), "optimal-1cff"
        else:
            method = "coloring"

    if method == "gray":
        if name == "path" or name == "cycle":
            return graycode.path_cycle_cff(g.n), "gray"
        if name == "hamming":
            # transversal blocks in the graph's lexicographic vertex order
            from itertools import product as iproduct

            from .core import SetSystem, matrix_from_sets

            radices = tuple(args)
            blocks = tuple(
                graycode.word_to_subset(radices, w)
                for w in iproduct(*(range(m) for m in radices))
            )
            return matrix_from_sets(SetSystem(sum(radices), blocks)), "gray"
        raise InvalidInputError("gray construction applies to path:, cycle:, hamming:")
    if method == "star":
        if name == "star":
            return constructions.star_cff(g.n), "star"
        if name == "windmill" and args[0] == 2:
            return constructions.star_cff(g.n), "star"
        raise InvalidInputError("star construction applies to star: graphs")
    if method == "windmill":
        if name == "windmill" and args[0] >= 3:
            m = constructions.windmill_cff(args[0], args[1])
            if not constructions.inner_identity_optimal(args[0]):
                print(
                    f"note: identity inner block may be suboptimal for k={args[0]}",
                    file=sys.stderr,
                )
            return m, "windmill"
        raise InvalidInputError("windmill construction applies to windmill:k,n with k >= 3")
    if method == "universal":
        if name == "wheel" and g.n >= 5:
            rim = g.n - 1
            base = graycode.path_cycle_cff(rim)
            return constructions.add_universal(base, cycle(rim)), "universal"
        raise InvalidInputError("universal construction applies to wheel:n with n >= 5")
    if method == "double":
        if name in ("path", "cycle") and g.n % 2 == 0 and g.n >= 6:
            half, _ = _construct(make_family(f"{name}:{g.n // 2}"), "auto")
            doubler = constructions.double_cycle if name == "cycle" else constructions.double_path
            return doubler(half), "double"
        raise InvalidInputError("double construction applies to path:/cycle: with even n >= 6")
    if method == "catalog":
        if name == "matching" and g.n == 8:
            return constructions.catalog("E8")[1], "catalog"
        if name == "path" and g.n == 10:
            return constructions.catalog("P10")[1], "catalog"
        raise InvalidInputError("catalog has entries for matching:8 and path:10")
    if method == "coloring":
        return constructions.from_coloring(g), "coloring"
    raise InvalidInputError(f"unknown method {method!r}")


def cmd_construct(args) -> int:
    g = make_family(args.graph)
    m, used = _construct(g, args.method)
    bad = find_violation(m, g, "cff")
    if bad is not None:
        print(f"internal error: construction failed verification: {bad}", file=sys.stderr)
        return EXIT_PROPERTY
    _emit(m.to_text(), args.output)
    print(f"{used}: {m.t}x{m.n} matrix for {g.family or args.graph}, verified", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = make_family(args.graph)
    m = IncidenceMatrix.from_text(Path(args.matrix).read_text())
    bad = find_violation(m, g, args.property)
    if args.format == "json-lines":
        rec = {"graph": args.graph, "property": args.property, "holds": bad is None}
        if bad is not None:
            rec["violation"] = {"kind": bad.kind, "edge": list(bad.edge), "column": bad.column}
        print(json.dumps(rec))
    elif bad is None:
        print(f"{args.property} holds for {args.graph} ({m.t}x{m.n})")
    else:
        print(f"{args.property} fails for {args.graph}: {bad}")
    return EXIT_OK if bad is None else EXIT_PROPERTY


def cmd_bounds(args) -> int:
    g = make_family(args.graph)
    rep = bounds_for(g)
    if args.format == "json-lines":
        for b in rep.bounds:
            print(json.dumps({
                "quantity": b.quantity, "kind": b.kind, "value": b.value,
                "source": b.source, "exact": b.exact,
            }))
        return EXIT_OK
    print(f"bounds for {rep.graph_id}:")
    for b in rep.bounds:
        star = " (exact)" if b.exact else ""
        print(f"  {b.quantity:3s} {b.kind:5s} {b.value:3d}  {b.source}{star}")
    for q in ("t", "t_e", "t_s"):
        lo, up = rep.lower(q), rep.upper(q)
        if lo is None and up is None:
            continue
        if lo is not None and lo == up:
            print(f"  => {q} = {lo}")
        else:
            print(f"  => {q} in [{lo}, {up}]")
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.threads < 1:
        raise InvalidInputError("--threads must be >= 1")
    if args.threads > 1:
        print("note: search runs single-threaded; --threads > 1 has no effect", file=sys.stderr)
    g = make_family(args.graph)
    res = exact_t(g, args.property, t_max=args.tmax, budget=args.budget)
    if args.format == "json-lines":
        print(json.dumps({
            "graph": args.graph, "property": args.property, "status": res.status,
            "t_min": res.t_min, "nodes": res.nodes_explored,
            "wall_time": round(res.wall_time, 6),
            "searched_exhaustively": list(res.searched_exhaustively),
            "floor": res.floor, "floor_source": res.floor_source,
        }))
    else:
        if res.status == "found":
            print(f"t = {res.t_min} for {args.graph} ({args.property}); "
                  f"nodes={res.nodes_explored}, floor {res.floor} from {res.floor_source}, "
                  f"search-exhausted {list(res.searched_exhaustively)}")
        elif res.status == "exhausted":
            print(f"no matrix up to t_max for {args.graph} ({args.property}); "
                  f"exhausted {list(res.searched_exhaustively)}")
        else:
            print(f"budget exceeded after {res.nodes_explored} nodes "
                  f"(exhausted {list(res.searched_exhaustively)})")
    if res.witness is not None and args.output:
        Path(args.output).write_text(res.witness.to_text())
    elif res.witness is not None and not args.format == "json-lines":
        sys.stdout.write(res.witness.to_text())
    return EXIT_OK if res.status in ("found", "exhausted") else EXIT_BUDGET


def cmd_gray(args) -> int:
    radices = [int(x) for x in args.radices.split(",")]
    if args.kind == "modular":
        if len(set(radices)) != 1:
            raise InvalidInputError("modular codes need equal radices q,q,...,q")
        code = graycode.modular(radices[0], len(radices))
    else:
        code = graycode.reflected(radices)
    lines = []
    for w in code.words:
        row = ",".join(map(str, w))
        if args.map:
            subset = sorted(graycode.word_to_subset(code.radices, w))
            row += "\t" + " ".join(map(str, subset))
        lines.append(row)
    _emit("\n".join(lines) + "\n", args.output)
    cyc = "cyclic" if graycode.is_cyclic(code) else "not cyclic"
    print(f"{len(code.words)} words, {cyc}", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# reproduce
# ---------------------------------------------------------------------------

_FIGURES = [
    ("fig1_c12.mat", "cycle", 12),
    ("fig6_c8.mat", "cycle", 8),
    ("fig7a_c36.mat", "cycle", 36),
    ("fig7b_c27.mat", "cycle", 27),
    ("fig7c_c54.mat", "cycle", 54),
    ("fig8_c19.mat", "cycle", 19),
]


def _reproduce_figures(outdir: Path) -> list[str]:
    lines = []
    for fname, fam, n in _FIGURES:
        g = make_family(f"{fam}:{n}")
        m = graycode.path_cycle_cff(n)
        if find_violation(m, g, "cff") is not None:
            raise RuntimeError(f"{fname}: construction failed verification")
        (outdir / fname).write_text(m.to_text())
        lines.append(f"{fname}: {m.t}x{m.n} cycle-CFF, verified")
    return lines


_TABLE4 = {
    "path": {3: (3, True), 4: (4, True), 5: (5, True), 6: (5, True), 7: (6, True),
             8: (6, True), 9: (6, True), 10: (6, True), 11: (7, False), 12: (7, False)},
    "cycle": {3: (3, True), 4: (4, True), 5: (5, True), 6: (5, True), 7: (6, True),
              8: (6, True), 9: (6, True), 10: (7, False), 11: (7, False), 12: (7, False)},
    "wheel": {3: (3, True), 4: (4, True), 5: (5, True), 6: (6, True), 7: (6, True),
              8: (7, True), 9: (7, True), 10: (7, True), 11: (8, False), 12: (8, False)},
    "complete": {n: (v, True) for n, v in
                 zip(range(3, 13), [3, 4, 5, 6, 7, 8, 9, 9, 9, 9])},
}

#: Families and sizes the batch report re-solves by exhaustive search.
#: Complete graphs stop at 9: the witness search for ten columns on nine
#: rows alone takes about a minute.  The pure-Python kernel gets a smaller
#: scope so the batch stays interactive without the compiled kernel.
_SOLVE_SCOPE = (
    {"path": 12, "cycle": 12, "wheel": 12, "complete": 9}
    if BACKEND == "cython"
    else {"path": 10, "cycle": 10, "wheel": 10, "complete": 8}
)


def _reproduce_table4(outdir: Path, budget: int) -> list[str]:
    lines = ["family n printed exact-printed bounds solver t(solver)"]
    records = []
    for fam, cells in _TABLE4.items():
        for n in sorted(cells):
            printed, bold = cells[n]
            g = make_family(f"{fam}:{n}")
            rep = bounds_for(g)
            lo, up = rep.lower("t"), rep.upper("t")
            brange = f"[{lo},{up}]"
            status, tmin = "skipped", None
            if n <= _SOLVE_SCOPE[fam]:
                res = exact_t(g, "cff", budget=budget, start=1, use_bounds=False)
                status, tmin = res.status, res.t_min
            lines.append(f"{fam} {n} {printed} {bold} {brange} {status} {tmin}")
            records.append({
                "family": fam, "n": n, "printed": printed, "printed_exact": bold,
                "bounds_lower": lo, "bounds_upper": up,
                "solver_status": status, "solver_t": tmin,
            })
    (outdir / "table4.json").write_text(json.dumps(records, indent=1))
    return lines


def cmd_reproduce(args) -> int:
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    begin = time.time()
    if args.what == "figures":
        lines = _reproduce_figures(outdir)
    else:
        lines = _reproduce_table4(outdir, args.budget)
    report = "\n".join(lines) + f"\nelapsed {time.time() - begin:.1f}s (backend: {BACKEND})\n"
    (outdir / f"{args.what}.txt").write_text(report)
    sys.stdout.write(report)
    if args.what == "table4" and "budget-exceeded" in report:
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gcff",
        description="Construct, verify, bound, and exactly solve cover-free families on graphs.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", help="build a verified CFF matrix for a graph")
    c.add_argument("graph", help="graph spec, e.g. cycle:12, star:9, windmill:3,4")
    c.add_argument("--method", default="auto",
                   choices=["auto", "coloring", "star", "windmill", "universal",
                            "double", "gray", "catalog"])
    c.add_argument("--output", help="write the matrix here instead of stdout")
    c.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="check a matrix file against a graph")
    v.add_argument("graph")
    v.add_argument("matrix")
    v.add_argument("--property", default="cff", choices=["cff", "ecff", "sperner"])
    v.add_argument("--format", default="text", choices=["text", "json-lines"])
    v.set_defaults(fn=cmd_verify)

    b = sub.add_parser("bounds", help="theorem bounds for a graph")
    b.add_argument("graph")
    b.add_argument("--format", default="text", choices=["text", "json-lines"])
    b.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("solve", help="exact minimum ground size by exhaustive search")
    s.add_argument("graph")
    s.add_argument("--property", default="cff", choices=["cff", "ecff", "sperner"])
    s.add_argument("--tmax", type=int, default=None)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; search is single-threaded")
    s.add_argument("--output", help="write the witness matrix here")
    s.add_argument("--format", default="text", choices=["text", "json-lines"])
    s.set_defaults(fn=cmd_solve)

    gr = sub.add_parser("gray", help="emit a mixed-radix Gray code")
    gr.add_argument("radices", help="comma-separated, e.g. 2,2,3")
    gr.add_argument("--kind", default="reflected", choices=["reflected", "modular"])
    gr.add_argument("--map", action="store_true", help="also emit the transversal subsets")
    gr.add_argument("--output")
    gr.set_defaults(fn=cmd_gray)

    r = sub.add_parser("reproduce", help="regenerate the reference table and figure matrices")
    r.add_argument("what", choices=["table4", "figures"])
    r.add_argument("--outdir", default="reproduction")
    r.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    r.set_defaults(fn=cmd_reproduce)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidInputError, ResourceLimitError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
