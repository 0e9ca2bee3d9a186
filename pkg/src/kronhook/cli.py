"""Command-line front end: compute, table, enumerate, convert, words, verify."""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .conversion import ConversionError, convert_trace
from .kronecker import (
    OracleError,
    hook_witnesses,
    kron_hook,
    oracle_hook,
    verify_sweep,
)
from .orders import ALIASES, OrderError, TotalOrder, adjacent_switch_path, parse_order, random_switch_path
from .shapes import ShapeError, format_partition, parse_partition, partitions_of
from .tableaux import (
    TableauError,
    content_profile,
    enumerate_tableaux,
    format_tableau,
    parse_tableau,
    tableau_from_json,
    tableau_to_json,
)
from .words import barred_word, format_word, is_alpha_ballot, is_ballot, total_word, unbarred_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
MODULE_ERRORS = (ShapeError, OrderError, TableauError, ConversionError, OracleError)


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order_arg(text: str, n: int) -> TotalOrder:
    # aliases take the alphabet size from context; explicit lists carry their own
    return parse_order(text, n) if text.strip() in ALIASES else parse_order(text)


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def _order_json(order: TotalOrder) -> list[str]:
    return [str(x) for x in order]


def cmd_compute(args) -> tuple[int, str]:
    lam, nu, d = args.lam, args.nu, args.d
    g = kron_hook(lam, d, nu)
    status = EXIT_OK
    data = {"lambda": list(lam), "d": d, "nu": list(nu), "g": g}
    lines = [str(g)]
    if args.oracle:
        expected = oracle_hook(lam, d, nu)
        data["oracle"] = expected
        lines.append(f"oracle {expected}")
        if expected != g:
            status = EXIT_MISMATCH
            lines.append(f"MISMATCH lambda={format_partition(lam)} d={d} nu={format_partition(nu)}")
    if args.witnesses is not None:
        found = hook_witnesses(lam, d, nu, cap=args.witnesses)
        data["witnesses"] = [tableau_to_json(t) for t in found]
        lines.extend("\n" + format_tableau(t) for t in found)
    if args.format == "json":
        return status, _dump(data)
    return status, "\n".join(lines)


def cmd_table(args) -> tuple[int, str]:
    rows = []
    d_values = args.d if args.d else range(args.n)
    for lam in partitions_of(args.n):
        for d in d_values:
            if not 0 <= d < args.n:
                raise ShapeError(f"d must lie in [0, {args.n - 1}], got {d}")
            for nu in partitions_of(args.n):
                rows.append((lam, d, nu, kron_hook(lam, d, nu)))
    if args.format == "json":
        return EXIT_OK, _dump([
            {"lambda": list(lam), "d": d, "nu": list(nu), "g": g} for lam, d, nu, g in rows
        ])
    lines = ["lambda\td\tnu\tg"]
    lines.extend(f"{format_partition(lam)}\t{d}\t{format_partition(nu)}\t{g}" for lam, d, nu, g in rows)
    return EXIT_OK, "\n".join(lines)


def cmd_enumerate(args) -> tuple[int, str]:
    order = _order_arg(args.order, max(len(args.content), 1))
    found = list(enumerate_tableaux(args.shape, args.content, args.color, order, ballot=args.ballot))
    if args.json:
        return EXIT_OK, _dump([tableau_to_json(t) for t in found])
    return EXIT_OK, "\n\n".join(format_tableau(t) for t in found)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_tableau(args):
    text = _read_input(args.input)
    if text.lstrip().startswith("{"):
        return tableau_from_json(json.loads(text))
    n = args.n
    if n is None:
        values = [int(tok.rstrip("'")) for tok in text.split() if tok != "-"]
        n = max(values, default=1)
    return parse_tableau(text, _order_arg(args.source, n))


def cmd_convert(args) -> tuple[int, str]:
    t = _load_tableau(args)
    target = _order_arg(args.to, t.order.n)
    if args.seed is not None:
        path = random_switch_path(t.order, target, random.Random(args.seed))
    else:
        path = adjacent_switch_path(t.order, target)
    trace = convert_trace(t, target, path)
    shown = trace if args.trace else trace[-1:]
    if args.json:
        return EXIT_OK, _dump([tableau_to_json(x) for x in shown] if args.trace else tableau_to_json(shown[0]))
    if not args.trace:
        return EXIT_OK, format_tableau(shown[0])
    blocks = [f"order: {x.order}\n{format_tableau(x)}" for x in shown]
    return EXIT_OK, "\n\n".join(blocks)


def cmd_words(args) -> tuple[int, str]:
    t = _load_tableau(args)
    u, v, w = unbarred_word(t), barred_word(t), total_word(t)
    alpha = content_profile(t).unbarred
    data = {
        "u": format_word(u),
        "v": format_word(v),
        "w": format_word(w),
        "u_ballot": is_ballot(u),
        "v_alpha_ballot": is_alpha_ballot(v, alpha),
        "w_ballot": is_ballot(w),
    }
    if args.json:
        return EXIT_OK, _dump(data)
    return EXIT_OK, "\n".join(f"{k} {str(val).lower() if isinstance(val, bool) else val}" for k, val in data.items())


def cmd_verify(args) -> tuple[int, str]:
    reports = verify_sweep(args.n, args.d or None, workers=args.threads, max_n=args.max_n)
    bad = [r for r in reports if not r.ok]
    if args.format == "json":
        return (EXIT_MISMATCH if bad else EXIT_OK), _dump([r.to_json() for r in reports])
    lines = [
        f"MISMATCH lambda={format_partition(r.lam)} d={r.d} nu={format_partition(r.nu)}: "
        + "; ".join(r.mismatches)
        for r in bad
    ]
    lines.append(f"n={args.n}: {len(reports)} triples checked, {len(bad)} mismatches")
    return (EXIT_MISMATCH if bad else EXIT_OK), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kronhook", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one coefficient g(lambda, (n-d,1^d), nu)")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--witnesses", type=int, nargs="?", const=20, default=None, metavar="CAP",
                   help="also print up to CAP counted tableaux (default 20)")
    p.add_argument("--oracle", action="store_true", help="compare against the character oracle")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="all hook coefficients for one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, action="append", help="restrict to these d (repeatable)")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list colored tableaux")
    p.add_argument("--shape", type=_partition_arg, required=True)
    p.add_argument("--content", type=_partition_arg, required=True, help="total content")
    p.add_argument("--color", type=int, default=None, help="number of barred entries")
    p.add_argument("--order", default="natural")
    p.add_argument("--ballot", action="store_true", help="only tableaux with ballot total word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    for name, func, help_text in (
        ("convert", cmd_convert, "convert a tableau to another order"),
        ("words", cmd_words, "reading words and ballot flags of a tableau"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="tableau file, or - for stdin")
        p.add_argument("--from", dest="source", default="natural",
                       help="order of a text-format input (default natural)")
        p.add_argument("--n", type=int, default=None, help="alphabet size for order aliases")
        p.add_argument("--json", action="store_true")
        if name == "convert":
            p.add_argument("--to", required=True)
            p.add_argument("--trace", action="store_true", help="print every intermediate tableau")
            p.add_argument("--seed", type=int, default=None,
                           help="follow a random shortest switch path drawn with this seed")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="check every coefficient of size n against the oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, action="append")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $KRONHOOK_THREADS or 1)")
    p.add_argument("--max-n", type=int, default=8, help="size guard (default 8)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, output = args.func(args)
    except MODULE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if output:
        print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
