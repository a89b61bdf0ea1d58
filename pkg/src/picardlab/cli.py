"""
Command-line front end.

Every subcommand prints plain ASCII text by default and JSON-lines with
``--json``.  Exit status is 0 on success, 1 on domain errors (bad class,
type, generator) and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from . import catalog
from .cones import (
    WeightAssignment,
    build_candidate_class,
    candidate_invariants,
    classify_ray,
    conjecture_screen,
    orbit_k_invariance_check,
    search_candidate_degrees,
)
from .cremona import cremona_reduce, enumerate_neg1, orbit_ball
from .errors import DimensionError, InvalidInputError, ParseError, PicardLabError
from .io import class_to_json, dumps, emit_word, parse_class, parse_type
from .lattice import DivisorClass, LatticeContext, adjunction_genus, k_degree, self_int
from .resolution import normalize_type, resolution_chain


def _context_for(classes: Sequence[DivisorClass], n: int | None) -> tuple[LatticeContext, list[DivisorClass]]:
    if not classes:
        raise InvalidInputError("no classes given")
    if n is None:
        n = classes[0].n
    ctx = LatticeContext(n)
    out = []
    for x in classes:
        if x.n > n:
            raise DimensionError(f"class {x} has {x.n} entries, more than --n {n}")
        out.append(ctx.make(x.d, x.m))
    return ctx, out


def _read_classes(args) -> tuple[LatticeContext, list[DivisorClass]]:
    return _context_for([parse_class(t) for t in args.classes], args.n)


@contextmanager
def _writer(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            yield fh


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def cmd_classify(args, out: TextIO) -> None:
    ctx, xs = _read_classes(args)
    for x in xs:
        rep = classify_ray(ctx, x)
        if args.json:
            print(dumps(rep.to_json()), file=out)
        else:
            print(
                f"{x} self_int={rep.self_int} k_deg={rep.k_deg} support={rep.support} "
                f"q={rep.q_region.value} k={rep.k_region.value} genus={rep.genus} primitive={rep.primitive_gen}",
                file=out,
            )


def cmd_screen(args, out: TextIO) -> None:
    ctx, xs = _read_classes(args)
    for x in xs:
        verdict = conjecture_screen(ctx, x)
        if args.json:
            print(dumps({"class": str(x), "verdict": verdict.value}), file=out)
        else:
            print(f"{x} {verdict.value}", file=out)


def cmd_reduce(args, out: TextIO) -> None:
    ctx, xs = _read_classes(args)
    for x in xs:
        canon, word = cremona_reduce(ctx, x)
        if args.json:
            print(dumps({"input": str(x), "canonical": str(canon), "witness": word.tokens()}), file=out)
        else:
            print(f"{x} canonical={canon} witness={emit_word(word)}", file=out)


def _load_cache(path: str) -> dict[tuple, dict]:
    entries: dict[tuple, dict] = {}
    if not os.path.exists(path):
        return entries
    with open(path, encoding="ascii") as fh:
        for line in fh:
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"corrupt cache line in {path}: {exc.msg}") from None
            key = (rec["seed"], rec["n"], rec["max_size"], rec["max_depth"])
            entries.setdefault(key, rec)
    return entries


def cmd_orbit(args, out: TextIO) -> None:
    ctx, xs = _read_classes(args)
    if args.budget is None and args.depth is None:
        raise InvalidInputError("orbit needs --budget and/or --depth")
    cache = _load_cache(args.cache) if args.cache else {}
    for x in xs:
        key = (str(x), ctx.n, args.budget, args.depth)
        rec = cache.get(key)
        if rec is None:
            ball = orbit_ball(ctx, x, max_size=args.budget, max_depth=args.depth)
            rec = {
                "seed": str(x), "n": ctx.n, "max_size": args.budget, "max_depth": args.depth,
                "truncated": ball.truncated, "depth": ball.depth,
                "classes": [str(y) for y in ball.classes],
            }
            if args.cache:
                with open(args.cache, "a", encoding="ascii", newline="\n") as fh:
                    fh.write(dumps(rec) + "\n")
                cache[key] = rec
        classes = [parse_class(t) for t in rec["classes"]]
        if args.json:
            for y in classes:
                print(dumps(class_to_json(y)), file=out)
        else:
            for y in classes:
                print(str(y), file=out)
            print(f"# size={len(classes)} depth={rec['depth']} truncated={'yes' if rec['truncated'] else 'no'}", file=out)


def cmd_neg1(args, out: TextIO) -> None:
    if args.n is None:
        raise InvalidInputError("neg1 needs --n")
    found = enumerate_neg1(LatticeContext(args.n), args.bound)
    for x in found:
        print(dumps(class_to_json(x)) if args.json else str(x), file=out)
    if not args.json:
        print(f"# count={len(found)}", file=out)


def cmd_families(args, out: TextIO) -> None:
    rows = [["d", "inventory", "l(B^d)", "closed-form", "match"]]
    for d in range(2, args.max_degree + 1):
        inv = catalog.inventory(d)
        size, closed = catalog.config_size(d), catalog.closed_form_size(d)
        if args.json:
            print(dumps({"d": d, "inventory": inv.to_json(), "size": size,
                         "closed_form": closed, "match": size == closed}), file=out)
        else:
            desc = " + ".join(f"{c}x{t}" for c, t in inv.entries)
            rows.append([str(d), desc, str(size), str(closed), "yes" if size == closed else "no"])
    if not args.json:
        for line in _table(rows):
            print(line, file=out)


def cmd_resolve(args, out: TextIO) -> None:
    for text in args.types:
        t = parse_type(text)
        rho, delta, g, _ = normalize_type(t)
        chain = resolution_chain(rho, delta)
        if args.json:
            print(dumps({"type": str(t), "rho": rho, "delta": delta, "gcd": g, **chain.to_json()}), file=out)
        else:
            mults = ",".join(map(str, chain.mults))
            extra = f" gcd={g}" if g > 1 else ""
            print(f"mults=[{mults}] length={len(chain)}{extra}", file=out)


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise InvalidInputError(f"weights must be comma-separated integers, got {text!r}") from None


def cmd_build_class(args, out: TextIO) -> None:
    w = WeightAssignment(args.family, args.m, _parse_weights(args.weights))
    n = args.n if args.n is not None else catalog.config_size(args.family)
    ctx = LatticeContext(n)
    x = build_candidate_class(ctx, w)
    sq, kd = candidate_invariants(w)
    rec = {"class": str(x), "self_int": self_int(ctx, x), "k_deg": k_degree(ctx, x),
           "genus": str(adjunction_genus(ctx, x)), "formula_match": (sq, kd) == (self_int(ctx, x), k_degree(ctx, x))}
    if args.json:
        print(dumps(rec), file=out)
    else:
        print(" ".join(f"{k}={v}" for k, v in rec.items()), file=out)


def cmd_search_classes(args, out: TextIO) -> None:
    found = search_candidate_degrees(args.family, args.bound, args.weight_bound, args.elliptic)
    ctx = LatticeContext(catalog.config_size(args.family))
    for w in found:
        x = build_candidate_class(ctx, w)
        if args.json:
            print(dumps({**w.to_json(), "class": str(x)}), file=out)
        else:
            print(f"m={w.m} weights={','.join(map(str, w.weights))} class={x}", file=out)
    if not args.json:
        print(f"# count={len(found)}", file=out)


def cmd_orbit_check(args, out: TextIO) -> None:
    ctx, xs = _read_classes(args)
    rep = orbit_k_invariance_check(ctx, xs, args.budget)
    if args.json:
        print(dumps(rep.to_json()), file=out)
    else:
        for x, size, kd, kc, pc in zip(xs, rep.ball_sizes, rep.k_degrees, rep.k_constant, rep.primitive_k_constant):
            print(f"{x} ball={size} k_deg={kd} k_constant={'yes' if kc else 'no'} "
                  f"primitive_k_constant={'yes' if pc else 'no'}", file=out)
        print(f"# cells={len(rep.cells)} " + " ".join(str(c) for c in rep.canonical), file=out)


def cmd_thresholds(args, out: TextIO) -> None:
    first, second = catalog.thresholds()
    if args.json:
        print(dumps({"all_degrees": first, "degree_at_least_5": second}), file=out)
    else:
        print(f"{first} {second}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picardlab", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, classes=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON-lines")
        p.add_argument("--out", help="write output to this file instead of stdout")
        if classes:
            p.add_argument("classes", nargs="+", help="classes as d;m1,...,mn or JSON")
            p.add_argument("--n", type=int, help="lattice rank (classes are zero-padded)")
        return p

    add("classify", cmd_classify, "intersection numbers and regions of classes", classes=True)
    add("screen", cmd_screen, "numerical conjecture screen", classes=True)
    add("reduce", cmd_reduce, "Cremona reduction with witness word", classes=True)
    p = add("orbit", cmd_orbit, "breadth-first orbit ball", classes=True)
    p.add_argument("--budget", type=int, help="maximum number of classes")
    p.add_argument("--depth", type=int, help="maximum word length")
    p.add_argument("--cache", help="JSON-lines orbit cache (append-only)")
    p = add("neg1", cmd_neg1, "enumerate (-1)-classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="degree bound")
    p = add("families", cmd_families, "family inventories and configuration sizes")
    p.add_argument("--max-degree", type=int, default=20)
    p = add("resolve", cmd_resolve, "base-point chain of local types a/b")
    p.add_argument("types", nargs="+")
    p = add("build-class", cmd_build_class, "candidate class from weights")
    p.add_argument("--family", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="pencil degree")
    p.add_argument("--weights", required=True, help="comma-separated, one per dicritical point")
    p.add_argument("--n", type=int)
    p = add("search-classes", cmd_search_classes, "search weight assignments with x^2 = 0")
    p.add_argument("--family", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="bound on the pencil degree m")
    p.add_argument("--weight-bound", type=int, default=3)
    p.add_argument("--elliptic", action="store_true", help="also require K.x = 0")
    p = add("orbit-check", cmd_orbit_check, "K-invariance over orbit balls", classes=True)
    p.add_argument("--budget", type=int, default=500)
    add("thresholds", cmd_thresholds, "smallest configuration sizes (all degrees, degrees >= 5)")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 after --help
        return int(exc.code or 0)
    try:
        with _writer(args.out) as out:
            args.func(args, out)
    except PicardLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

