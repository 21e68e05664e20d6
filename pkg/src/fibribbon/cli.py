"""Command-line entry point: ``fibribbon <subcommand> ...``.

Permutations are read as text (``2^3 7^1 1^1``) from the positional argument
or stdin; tableaux as the compact JSON serialization.  Exit status is 2 for
bad input, 1 when ``verify`` finds a failure and 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import evacuation, growth, insertion, shadow, stats, tableau, verify
from .errors import FibError
from .fibword import elements_of_rank, format_word, parse_word
from .permutation import ColoredPermutation, color, format_permutation, parse_permutation
from .tableau import Tableau


class UsageError(FibError):
    pass


def _read(arg: str | None) -> str:
    text = arg if arg is not None else sys.stdin.read()
    if not text.strip():
        raise UsageError("no input given (pass it as an argument or on stdin)")
    return text.strip()


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError("--k is required here")
    return args.k


def _permutation(args) -> ColoredPermutation:
    return parse_permutation(_read(args.input), _need_k(args))


def _tableau(args) -> Tableau:
    t = tableau.loads(_read(args.input))
    if args.k is not None and args.k != t.k:
        raise UsageError(f"--k {args.k} disagrees with the tableau's k={t.k}")
    return t


def _show(t: Tableau, as_json: bool) -> str:
    if as_json:
        return tableau.dumps(t)
    pic = tableau.render_ascii(t)
    shape = f"shape: {format_word(tableau.shape_word(t))}"
    return f"{pic}\n{shape}" if pic else shape


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# -- subcommands ---------------------------------------------------------


def cmd_insert(args) -> int:
    P, Q = insertion.insert(_permutation(args))
    if args.json:
        print(_json({"P": tableau.to_dict(P), "Q": tableau.to_dict(Q)}))
    else:
        print("P:")
        print(_show(P, False))
        print("Q:")
        print(_show(Q, False))
    return 0


def _pair(text: str) -> tuple[Tableau, Tableau]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc.msg}") from None
    if not isinstance(data, dict) or set(data) != {"P", "Q"}:
        raise UsageError('expected a JSON object {"P": ..., "Q": ...}')
    return tableau.from_dict(data["P"]), tableau.from_dict(data["Q"])


def cmd_uninsert(args) -> int:
    P, Q = _pair(_read(args.input))
    print(format_permutation(insertion.uninsert(P, Q)))
    return 0


def cmd_grow(args) -> int:
    g = growth.build(_permutation(args))
    p_hat, q_hat = growth.extract_p_hat(g), growth.extract_q_hat(g)
    if args.json:
        rows = [[format_word(g.corner(c, r)) for c in range(g.n + 1)] for r in range(g.n, -1, -1)]
        print(_json({"grid": rows, "P_hat": tableau.to_dict(p_hat), "Q_hat": tableau.to_dict(q_hat)}))
        return 0
    print(growth.format_grid(g))
    print(f"top-right: {format_word(g.top_right)}")
    print("P-hat:")
    print(_show(p_hat, False))
    print("Q-hat:")
    print(_show(q_hat, False))
    return 0


def cmd_evacuate(args) -> int:
    print(_show(evacuation.evacuate(_tableau(args)), args.json))
    return 0


def cmd_unevacuate(args) -> int:
    print(_show(evacuation.unevacuate(_tableau(args)), args.json))
    return 0


def cmd_shadow(args) -> int:
    p = _permutation(args)
    lines = shadow.shadow_lines(p)
    P = shadow.p_from_shadow(p)
    if args.json:
        out = [{"high": list(s.high), "right": list(s.right)} for s in lines]
        print(_json({"lines": out, "P": tableau.to_dict(P)}))
        return 0
    for i, s in enumerate(lines, 1):
        marks = [s.high] if s.single else [s.high, s.right]
        text = ", ".join(f"({c},{r})^{col}" for c, r, col in marks)
        print(f"line {i}: {text}")
    print(_show(P, False))
    return 0


def cmd_class(args) -> int:
    p = _permutation(args)
    if args.fiber:
        if args.fixed_colors:
            members = shadow.fixed_color_fiber(p, args.max_states)
        else:
            members = shadow.p_fiber_bruteforce(p, args.max_states)
    else:
        members = shadow.positional_class(p)
    for s in sorted(members, key=lambda s: s.entries):
        print(format_permutation(s))
    print(f"# {len(members)} permutations", file=sys.stderr)
    return 0


def cmd_stats(args) -> int:
    p = _permutation(args)
    P, Q = insertion.insert(p)
    values = {
        "vert": stats.vert_pair(P, Q),
        "split_P": stats.split(P),
        "split_Q": stats.split(Q),
        "spin": stats.spin(P, Q),
        "color": color(p),
    }
    if args.json:
        print(_json(values))
    else:
        for name, v in values.items():
            print(f"{name}: {v}")
    return 0


def cmd_enumerate(args) -> int:
    k = _need_k(args)
    if args.what == "words":
        if args.rank is None:
            raise UsageError("enumerate words needs --rank")
        items = [format_word(w) for w in elements_of_rank(k, args.rank)]
    else:
        if args.shape is None:
            raise UsageError(f"enumerate {args.what} needs --shape")
        w = parse_word(args.shape, k)
        found = tableau.enumerate_standard(w) if args.what == "standard" else tableau.enumerate_path(w)
        items = [tableau.dumps(t) for t in found]
    if args.count:
        print(len(items))
    else:
        for item in items:
            print(item)
    return 0


def cmd_verify(args) -> int:
    checks = verify.run_all(args.n, args.k, include_worked=not args.skip_worked, full_fiber=args.full_fiber)
    for c in checks:
        print(c.line())
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def cmd_render(args) -> int:
    if args.shape is not None:
        grid = tableau.shape_cells(parse_word(args.shape, _need_k(args)))
        print(f"{grid.width}x{grid.height}, {len(grid.cells)} cells")
        return 0
    print(tableau.render_ascii(_tableau(args)))
    return 0


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibribbon", description="ribbon insertion and evacuation over Z(k)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, input_help=None, json_flag=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--k", type=int, help="number of colors")
        if input_help:
            p.add_argument("input", nargs="?", help=input_help)
        if json_flag:
            p.add_argument("--json", action="store_true", help="print the JSON serialization")
        p.set_defaults(func=func)
        return p

    perm = "colored permutation, e.g. '2^1 1^2' (default: stdin)"
    tab = "tableau JSON (default: stdin)"
    add("insert", cmd_insert, "insert a permutation into (P, Q)", perm)
    add("uninsert", cmd_uninsert, 'recover the permutation from {"P":...,"Q":...}', "pair JSON (default: stdin)",
        json_flag=False)
    add("grow", cmd_grow, "growth diagram of a permutation", perm)
    add("evacuate", cmd_evacuate, "standard tableau -> path tableau", tab)
    add("unevacuate", cmd_unevacuate, "path tableau -> standard tableau", tab)
    add("shadow", cmd_shadow, "shadow lines and the P they give", perm)

    p = add("class", cmd_class, "permutations sharing P with the input", perm, json_flag=False)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--positional", action="store_true", help="positional class (default)")
    mode.add_argument("--fiber", action="store_true", help="brute-force fiber of insert(p).P")
    p.add_argument("--fixed-colors", action="store_true", help="with --fiber, keep each value's color")
    p.add_argument("--max-states", type=int, default=shadow.DEFAULT_MAX_STATES)

    add("stats", cmd_stats, "vert, split, spin and color", perm)

    p = add("enumerate", cmd_enumerate, "list words of a rank or tableaux of a shape", json_flag=False)
    p.add_argument("what", choices=["words", "standard", "path"])
    p.add_argument("--shape", help="shape word (for standard/path)")
    p.add_argument("--rank", type=int)
    p.add_argument("--count", action="store_true", help="print only the number found")

    p = sub.add_parser("verify", help="run the exhaustive checks for n <= N, k <= K")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--skip-worked", action="store_true", help="skip the fixed k=5 examples")
    p.add_argument("--full-fiber", action="store_true", help="enumerate the whole k=5 fiber (slow)")
    p.set_defaults(func=cmd_verify)

    p = add("render", cmd_render, "ASCII picture of a tableau", tab, json_flag=False)
    p.add_argument("--shape", help="only report the cell grid of a bare shape word")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and (args.n < 0 or args.k < 1):
        parser.error("verify needs --n >= 0 and --k >= 1")
    try:
        return args.func(args)
    except FibError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
