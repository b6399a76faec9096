"""Command-line front end: ``startrack <subcommand> ...``.

Exit codes: 0 on success, 1 on a domain error (the error class name is
printed to stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import farey, pruning, rotation, starorbit, traintrack
from .height import STAR, decoration_qw, parse_code, prefix_word, star_decoration
from .height import height as height_of
from .errors import DomainError
from .starorbit import StarData


def _rational(text: str) -> Fraction:
    try:
        return farey.parse_rational(text)
    except (ValueError, ZeroDivisionError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _word(text: str) -> str:
    if not text or set(text) - {"0", "1"}:
        raise argparse.ArgumentTypeError(f"not a binary word: {text!r}")
    return text


def _load(path: str) -> StarData:
    return StarData.from_json(Path(path).read_text(encoding="utf-8"))


class _Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list = []

    def emit(self, plain: str, value=None):
        """Print plain text, or the JSON value when --format json is chosen."""
        if self.fmt == "json":
            self.lines.append(json.dumps(value if value is not None else plain, sort_keys=True))
        else:
            self.lines.append(plain)


def _fractions_text(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _emit_data(out: _Output, d: StarData):
    out.emit(d.plain(), d.to_json())


# subcommand handlers --------------------------------------------------------


def cmd_height(args, out):
    value = height_of(args.code)
    out.emit(str(value), str(value))


def cmd_parse(args, out):
    parsed = parse_code(args.code)
    deco = parsed.decoration or "(empty)"
    value = {
        "height": str(parsed.height),
        "prefix": parsed.prefix,
        "decoration": parsed.decoration,
        "joints": list(parsed.joints),
    }
    out.emit(f"height {parsed.height}, prefix {parsed.prefix}, decoration {deco}, joints {' '.join(parsed.joints)}", value)


def cmd_cq(args, out):
    out.emit(prefix_word(args.q))


def cmd_wq(args, out):
    w = star_decoration(args.q)
    out.emit(w or "(empty)", w)


def cmd_qw(args, out):
    word = args.word
    if word != STAR:
        word = "" if word == "(empty)" else _word(word)
    value = decoration_qw(word)
    out.emit(str(value), str(value))


def cmd_farey(args, out):
    if args.what == "parents":
        values = farey.farey_parents(args.q)
        out.emit(_fractions_text(values), [str(v) for v in values])
    elif args.what == "lfs":
        values = farey.left_farey_sequence(args.q)
        out.emit(_fractions_text(values), [str(v) for v in values])
    else:
        values = farey.admissible_set(args.q)
        out.emit("{" + ",".join(map(str, values)) + "}", values)


def cmd_xi(args, out):
    value = farey.xi_map(args.left, args.right, args.t)
    out.emit(str(value), str(value))


def cmd_rotint(args, out):
    if args.kind == "code":
        interval = rotation.rotation_interval_of_code(_word(args.target))
    else:
        interval = rotation.markov_rotation_interval(_load(args.target))
    out.emit(str(interval), [str(interval.lo), str(interval.hi)])


def cmd_enumerate(args, out):
    found = starorbit.enumerate_orbits(args.q, args.max_period, jobs=args.jobs, tt_only=args.tt_only)
    for d in found:
        note = _annotation(d)
        if out.fmt == "json":
            out.emit("", {"data": d.to_json(), **note})
        else:
            parts = [f"{k} {v}" for k, v in note.items()]
            out.emit(f"{d.plain()}    [{', '.join(parts)}]")


def _annotation(d: StarData) -> dict:
    """Height, decoration and code of an orbit, when they are defined."""
    try:
        code = starorbit.orbit_code(d)
    except DomainError:
        return {"code": "(none)"}
    try:
        parsed = parse_code(code)
    except DomainError:
        return {"code": code}
    return {"height": str(parsed.height), "decoration": parsed.decoration or "(empty)", "code": code}


def cmd_build_b(args, out):
    _emit_data(out, starorbit.build_tt_orbit_B(args.q, args.i, args.pq))


def cmd_build_a(args, out):
    _emit_data(out, starorbit.build_tt_orbit_A(args.q, args.i))


def cmd_phi(args, out):
    _emit_data(out, starorbit.renormalize_phi(_load(args.file), args.q))


def cmd_psi(args, out):
    _emit_data(out, starorbit.renormalize_psi(_load(args.file)))


def cmd_hscode(args, out):
    out.emit(starorbit.orbit_code(_load(args.file)))


def cmd_track(args, out):
    d = _load(args.file)
    g = traintrack.build_bh_graph(d)
    if args.dot:
        out.lines.append(traintrack.to_dot(g).rstrip("\n"))
        return
    eff = traintrack.check_efficient(g) if traintrack.check_absorbed(g) else None
    value = {
        "absorbed": traintrack.check_absorbed(g),
        "efficient": bool(eff),
        "images": {f"e{r}.{s}": traintrack.word_str(w) for (r, s), w in sorted(g.main_images.items())},
    }
    lines = [f"e{r}.{s} -> {traintrack.word_str(w)}" for (r, s), w in sorted(g.main_images.items())]
    lines.append(f"absorbed {'yes' if value['absorbed'] else 'no'}, efficient {'yes' if value['efficient'] else 'no'}")
    if args.growth:
        growth = traintrack.growth_rate(g)
        value["growth"] = growth.radius
        value["irreducible"] = growth.irreducible
        lines.append(f"growth {growth.radius:.12f}, irreducible {'yes' if growth.irreducible else 'no'}")
    out.emit("\n".join(lines), value)


def cmd_prune(args, out):
    endo, trace = pruning.construct_from_horseshoe(args.q)
    lines = []
    if args.trace:
        lines.append("moves: " + ", ".join(trace.summary))
        lines += trace.lines()
    lines.append(endo.listing())
    value = {
        "moves": trace.summary,
        "steps": trace.lines() if args.trace else [],
        "images": {f"e_{e}": pruning.word_text(endo.images[e]) for e in endo.cyclic_order},
    }
    out.emit("\n".join(lines), value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="startrack", description="Star orbits, heights and train tracks.")
    parser.add_argument("--format", choices=("plain", "json"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("height", help="height of a sequence, e.g. 10011011001011010 or 10(011)")
    p.add_argument("code")
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("parse", help="split a maximal code into prefix and decoration")
    p.add_argument("code", type=_word)
    p.set_defaults(func=cmd_parse)

    for name, func, text in (("cq", cmd_cq, "the prefix word c_q"), ("wq", cmd_wq, "the star decoration w_q")):
        p = sub.add_parser(name, help=text)
        p.add_argument("q", type=_rational)
        p.set_defaults(func=func)

    p = sub.add_parser("qw", help="q_w of a decoration (use * for the 1/2 decoration)")
    p.add_argument("word")
    p.set_defaults(func=cmd_qw)

    p = sub.add_parser("farey", help="Farey parents, left Farey sequence or admissible set")
    p.add_argument("what", choices=("parents", "lfs", "admissible"))
    p.add_argument("q", type=_rational)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("xi", help="xi map between Farey neighbours")
    p.add_argument("left", type=_rational)
    p.add_argument("right", type=_rational)
    p.add_argument("t", type=_rational)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("rotint", help="rotation interval of a code or of data in a JSON file")
    p.add_argument("kind", choices=("code", "data"))
    p.add_argument("target")
    p.set_defaults(func=cmd_rotint)

    p = sub.add_parser("enumerate", help="all legal data up to a period bound")
    p.add_argument("q", type=_rational)
    p.add_argument("max_period", type=int)
    p.add_argument("--tt-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build-b", help="explicit TT orbit of type B")
    p.add_argument("q", type=_rational)
    p.add_argument("i", type=int)
    p.add_argument("pq", help="p/q as written; an unreduced p/q is a domain error")
    p.set_defaults(func=cmd_build_b)

    p = sub.add_parser("build-a", help="explicit TT orbit of type A")
    p.add_argument("q", type=_rational)
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_build_a)

    p = sub.add_parser("phi", help="renormalize slope-1/2 data to slope q")
    p.add_argument("file")
    p.add_argument("q", type=_rational)
    p.set_defaults(func=cmd_phi)

    for name, func, text in (
        ("psi", cmd_psi, "renormalize data back to slope 1/2"),
        ("hscode", cmd_hscode, "horseshoe code of data"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("track", help="star graph images, efficiency and growth")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--growth", action="store_true")
    p.set_defaults(func=cmd_track)

    p = sub.add_parser("prune", help="build f_q from the horseshoe by gluing and pulling tight")
    p.add_argument("q", type=_rational)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_prune)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(args.format)
    try:
        args.func(args, out)
    except DomainError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    for line in out.lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
