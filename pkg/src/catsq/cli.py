"""Command-line front end: table generation, structure inspection, conversion
between serialized cat2-groups and crossed squares, and axiom checking."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import catalog
from .cache import GroupData, resolve_cache_dir
from .cat1 import Cat1Group, _kernels_commute, _pre_cat1_witness, cat1_group
from .cat2 import Cat2Group, cat2_group, commutation_witness
from .groups import GroupError, Homomorphism, image_of, kernel_of
from .serialize import (
    FormatError,
    _ints,
    _open,
    detect_kind,
    emit_cat1,
    emit_cat2,
    emit_xsq,
    parse_cat2,
    parse_group,
    parse_xsq,
)
from .tables import build_table, check_rows, format_table, group_data
from .xsq import cat2_of_crossed_square, crossed_square_of_cat2, is_crossed_square


def _cat1_from_maps(order_gid, maps) -> Cat1Group:
    G = catalog.small_group(*order_gid)
    t, h = maps
    return cat1_group(Homomorphism(G, G, t), Homomorphism(G, G, h))


def _cat2_from_data(order_gid, data: GroupData, pair) -> Cat2Group:
    i, j = pair
    return cat2_group(_cat1_from_maps(order_gid, data.cat1_maps[i]),
                      _cat1_from_maps(order_gid, data.cat1_maps[j]))


def cmd_table(args) -> int:
    cache_dir = resolve_cache_dir(args.cache_dir)
    rows = build_table(args.max_order, heavy=args.heavy, cache_dir=cache_dir)
    sys.stdout.write(format_table(rows, args.format))
    if args.check:
        problems = check_rows(rows)
        for p in problems:
            print("check: " + p, file=sys.stderr)
        if problems:
            return 1
        print(f"check: all {sum(1 for _, r in rows if r is not None)} computed rows match",
              file=sys.stderr)
    return 0


def cmd_inspect(args) -> int:
    try:
        catalog.catalog_entry(args.order, args.gid)
    except catalog.CatalogKeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    key = (args.order, args.gid)
    data = group_data(args.order, args.gid, resolve_cache_dir(args.cache_dir))
    families = data.cat1_families if args.kind == "cat1" else data.cat2_families
    count = len(families)

    def rep(k: int):
        pos = families[k][0]
        if args.kind == "cat1":
            return _cat1_from_maps(key, data.cat1_maps[pos])
        return _cat2_from_data(key, data, data.cat2_pairs[pos])

    if args.selector == "count":
        print(count)
        return 0
    if args.selector == "families":
        print(f"families {count}")
        for fam in families:
            print(" ".join(str(p + 1) for p in fam))
        return 0
    if args.selector == "classes":
        for k in range(count):
            _print_rep(args.kind, rep(k), key)
        return 0
    try:
        index = int(args.selector)
    except ValueError:
        print(f"error: selector must be an index, 'count', 'classes' or 'families'",
              file=sys.stderr)
        return 2
    if not 1 <= index <= count:
        print(f"error: index {index} out of range; there are {count} classes "
              f"for ({args.order},{args.gid})", file=sys.stderr)
        return 2
    _print_rep(args.kind, rep(index - 1), key)
    return 0


def _print_rep(kind: str, structure, key) -> None:
    if kind == "cat1":
        sys.stdout.write(emit_cat1(structure, key))
    elif kind == "cat2":
        print("size " + " ".join(str(v) for v in structure.size))
        sys.stdout.write(emit_cat2(structure, key))
    else:
        sys.stdout.write(emit_xsq(crossed_square_of_cat2(structure)))


def cmd_convert(args) -> int:
    text = Path(args.file).read_text()
    try:
        kind = detect_kind(text)
        if kind == "cat2":
            out = emit_xsq(crossed_square_of_cat2(parse_cat2(text)))
        elif kind == "xsq":
            converted = cat2_of_crossed_square(parse_xsq(text))
            if converted.group.realization != "dense":
                print("error: the converted group is too large to serialize",
                      file=sys.stderr)
                return 2
            out = emit_cat2(converted)
        else:
            print(f"error: cannot convert files of kind {kind!r}", file=sys.stderr)
            return 2
    except (FormatError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def _report_cat1_text(text: str) -> list[tuple[str, bool, object]]:
    r = _open(text, "cat1")
    G = parse_group(r)
    t = Homomorphism(G, G, _ints(r.expect("t")))
    h = Homomorphism(G, G, _ints(r.expect("h")))
    r.expect("end")
    checks = []
    bad = _pre_cat1_witness(t.mapping, h.mapping)
    checks.append(("t o h = h and h o t = t", bad is None, bad))
    same = image_of(t).members == image_of(h).members
    checks.append(("images coincide", same, None))
    w = _kernels_commute(G, kernel_of(t).members, kernel_of(h).members)
    checks.append(("[ker t, ker h] = 1", w is None, w))
    return checks


def _report_cat2_text(text: str) -> list[tuple[str, bool, object]]:
    r = _open(text, "cat2")
    G = parse_group(r)
    maps = [Homomorphism(G, G, _ints(r.expect(k))) for k in ("t1", "h1", "t2", "h2")]
    r.expect("end")
    checks = []
    pres = []
    for label, (t, h) in (("structure 1", maps[:2]), ("structure 2", maps[2:])):
        bad = _pre_cat1_witness(t.mapping, h.mapping)
        checks.append((f"{label}: pre-cat1 identities", bad is None, bad))
        w = _kernels_commute(G, kernel_of(t).members, kernel_of(h).members)
        checks.append((f"{label}: [ker t, ker h] = 1", w is None, w))
        if bad is None and w is None:
            pres.append(cat1_group(t, h))
    if len(pres) == 2:
        w = commutation_witness(pres[0], pres[1])
        checks.append(("commutation identities", w is None, w))
    return checks


def cmd_check(args) -> int:
    text = Path(args.file).read_text()
    try:
        kind = detect_kind(text)
        if kind == "cat1":
            checks = _report_cat1_text(text)
        elif kind == "cat2":
            checks = _report_cat2_text(text)
        elif kind == "xsq":
            X = parse_xsq(text, validate=False)
            checks = [(c.name, c.ok, c.witness) for c in is_crossed_square(X).checks]
        else:
            print(f"error: cannot check files of kind {kind!r}", file=sys.stderr)
            return 2
    except (FormatError, GroupError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 2
    ok = True
    for name, passed, witness in checks:
        if passed:
            print(f"{name}: pass")
        else:
            ok = False
            print(f"{name}: FAIL witness {witness}")
    return 0 if ok else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="catsq",
        description="cat1/cat2-group and crossed square computations over "
                    "the groups of order at most 30",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit the classification table")
    p.add_argument("--max-order", type=int, default=30)
    p.add_argument("--heavy", action="store_true",
                   help="also compute the expensive rows (16/14 and 27/5)")
    p.add_argument("--format", choices=("csv", "tsv"), default="csv")
    p.add_argument("--check", action="store_true",
                   help="compare against the embedded reference table")
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("inspect", help="list structures for a catalog group")
    p.add_argument("kind", choices=("cat1", "cat2", "xsq"))
    p.add_argument("order", type=int)
    p.add_argument("gid", type=int)
    p.add_argument("selector",
                   help="1-based class index, or 'count', 'classes', 'families'")
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("convert", help="convert serialized cat2 <-> crossed square")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="axiom report for a serialized structure")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    args = parser.parse_args(argv)
    if args.command == "table" and args.max_order > 30:
        print("error: the catalog stops at order 30", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
