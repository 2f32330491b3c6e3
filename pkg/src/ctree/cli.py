"""Command-line front end.

Exit status: 0 all verdicts equal, 1 some verification failed,
2 usage error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from .errors import CTreeError
from .evaluate import CSV_HEADER, TruncReport, tree_oracle, verify_p_shuffle, verify_p_shuffle_cyclotomic
from .evaluate import _params, _Timer, tree_oracle_table, word_series_table
from .fuzz import FuzzConfig, fuzz
from .shuffle import parse_color
from .symbolic import AlphaParam, verify_rs_s_congruence, verify_t_shuffle
from .treeio import dump_tree, parse_tree
from .trees import DCH, BoundaryColors, harvest, tree_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _assignment(text: str) -> dict[str, int]:
    out = {}
    for item in filter(None, text.split(",")):
        name, sep, val = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"expected NAME=INT, got {item!r}")
        out[name.strip()] = int(val)
    return out


def _read_pair(path: str):
    return parse_tree(Path(path).read_text() if path != "-" else sys.stdin.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report_csv(reports: list[TruncReport], timing: bool) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow(r.csv_row(timing))
    return buf.getvalue()


def _finish(reports: list[TruncReport], args) -> int:
    _emit(_report_csv(reports, getattr(args, "timing", False)), getattr(args, "out", None))
    return EXIT_OK if all(r.equal for r in reports) else EXIT_FAIL


# ------------------------------------------------------------- commands


def cmd_harvest(args) -> int:
    b = BoundaryColors(start=parse_color(args.start)) if args.start is not None else DCH
    _emit(dump_tree(harvest(_read_pair(args.input), b)), args.out)
    return EXIT_OK


def cmd_word(args) -> int:
    print(tree_word(harvest(_read_pair(args.input))))
    return EXIT_OK


def cmd_eval(args) -> int:
    print(tree_oracle(_read_pair(args.input), args.M))
    return EXIT_OK


def cmd_p_shuffle(args) -> int:
    if args.N is not None:
        alpha = args.alpha if args.alpha is not None else args.p
        return _finish([verify_p_shuffle_cyclotomic(args.k, args.l, args.N, alpha, args.p, args.T, _default_assign(args))], args)
    return _finish([verify_p_shuffle(args.k, args.l, args.p, args.T)], args)


def _default_assign(args) -> dict[str, int]:
    """Without --assign every variable goes to the root of unity exp(2 pi i/N)."""
    assign = {f"x{i + 1}": 1 for i in range(len(args.k))}
    assign.update({f"y{i + 1}": 1 for i in range(len(args.l))})
    assign.update(getattr(args, "assign", None) or {})
    return assign


def cmd_p_shuffle_cyclo(args) -> int:
    return _finish([verify_p_shuffle_cyclotomic(args.k, args.l, args.N, args.alpha, args.p, args.T, _default_assign(args))], args)


def cmd_t_shuffle(args) -> int:
    return _finish([verify_t_shuffle(args.k, args.l, AlphaParam.of(args.alpha, args.N), args.T)], args)


def cmd_rs_s(args) -> int:
    p = _read_pair(args.input)
    return _finish([verify_rs_s_congruence(p, AlphaParam.of(args.alpha, args.N), args.T)], args)


def cmd_root_change(args) -> int:
    from .evaluate import root_change_mod_p

    return _finish([root_change_mod_p(_read_pair(args.input), args.new_root, args.p)], args)


def cmd_tree_word(args) -> int:
    p = _read_pair(args.input)
    with _Timer() as tm:
        lhs = tree_oracle_table(p, args.M)
        rhs = None
        for word, c in tree_word(harvest(p)).items():
            col = [v * c for v in word_series_table(word, args.M)]
            rhs = col if rhs is None else [a + b for a, b in zip(rhs, col)]
    shown = ["[" + ", ".join(map(str, t)) + "]" for t in (lhs, rhs)]
    report = TruncReport("tree-word", _params(M=args.M), shown[0], shown[1], lhs == rhs, tm.millis)
    return _finish([report], args)


def cmd_fuzz(args) -> int:
    cfg = FuzzConfig(seed=args.seed, cases=args.cases, max_vertices=args.max_vertices)
    return _finish(fuzz(cfg), args)


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ctree", description="Colored rooted trees, shuffle words and truncated polylogarithms.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("harvest", help="rewrite a tree into harvestable form")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--start", default=None, help="color of the path start (default 0)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_harvest)

    sp = sub.add_parser("word", help="print the shuffle word of a tree")
    sp.add_argument("--in", dest="input", required=True)
    sp.set_defaults(func=cmd_word)

    sp = sub.add_parser("eval", help="truncated tree sum at M")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--M", type=int, required=True)
    sp.set_defaults(func=cmd_eval)

    verify = sub.add_parser("verify", help="check one identity and print a CSV report")
    vsub = verify.add_subparsers(dest="claim", required=True)

    def common(p):
        p.add_argument("--out")
        p.add_argument("--timing", action="store_true", help="record wall time in the millis column")
        return p

    sp = common(vsub.add_parser("p-shuffle"))
    sp.add_argument("--k", type=_int_list, required=True)
    sp.add_argument("--l", type=_int_list, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--T", type=int, required=True)
    sp.add_argument("--N", type=int)
    sp.add_argument("--alpha", type=int)
    sp.set_defaults(func=cmd_p_shuffle)

    sp = common(vsub.add_parser("p-shuffle-cyclo"))
    sp.add_argument("--k", type=_int_list, required=True)
    sp.add_argument("--l", type=_int_list, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--T", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--assign", type=_assignment, required=True)
    sp.set_defaults(func=cmd_p_shuffle_cyclo)

    sp = common(vsub.add_parser("t-shuffle"))
    sp.add_argument("--k", type=_int_list, required=True)
    sp.add_argument("--l", type=_int_list, required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--T", type=int, required=True)
    sp.set_defaults(func=cmd_t_shuffle)

    sp = common(vsub.add_parser("rs-s"))
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--T", type=int, required=True)
    sp.set_defaults(func=cmd_rs_s)

    sp = common(vsub.add_parser("root-change"))
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--new-root", dest="new_root", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_root_change)

    sp = common(vsub.add_parser("tree-word"))
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--M", type=int, required=True)
    sp.set_defaults(func=cmd_tree_word)

    sp = common(sub.add_parser("fuzz", help="seeded random invariant checks"))
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--cases", type=int, required=True)
    sp.add_argument("--max-vertices", dest="max_vertices", type=int, default=6)
    sp.set_defaults(func=cmd_fuzz)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CTreeError, ValueError, OSError) as exc:
        print(f"ctree: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
