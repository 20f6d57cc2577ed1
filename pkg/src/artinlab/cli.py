"""Command-line entry point.

Every verb builds one payload dict. ``--json`` prints it as JSON; the default
text form prints the same data flattened to ``path: value`` lines.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable

from . import arrangement as arr
from . import coxeter as cox
from .garside import braid_equal, garside_nf
from .labels import ArtinLabError, GroupLabel, parse_label
from .ltheory import k_vanishing_report, l_groups
from .orbifold import (
    embed,
    fadell_neuwirth_tower,
    orbifold_presentation,
    source_alphabet,
    target_alphabet,
    verify_embedding_relators,
)
from .words import artin_alphabet, braid_alphabet, format_word, parse_word, torsion_reduce

# --------------------------------------------------------------------------
# text rendering
# --------------------------------------------------------------------------


def scalar_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    return str(value)


def _is_scalar(v: Any) -> bool:
    return not isinstance(v, (dict, list, tuple))


def flatten(payload: Any, prefix: str = "") -> list[tuple[str, str]]:
    """Flatten nested dicts/lists to ``(path, text)`` pairs; scalar lists join with spaces."""
    out: list[tuple[str, str]] = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            out += flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(payload, (list, tuple)):
        if all(_is_scalar(v) for v in payload):
            out.append((prefix, " ".join(scalar_text(v) for v in payload)))
        else:
            for i, v in enumerate(payload):
                out += flatten(v, f"{prefix}.{i}")
    else:
        out.append((prefix, scalar_text(payload)))
    return out


def render_text(payload: dict) -> str:
    return "".join(f"{path}: {text}\n" for path, text in flatten(payload))


def parse_text(text: str) -> dict[str, str]:
    """Inverse of :func:`render_text` up to scalar typing."""
    out = {}
    for line in text.splitlines():
        path, _, value = line.partition(":")
        out[path] = value[1:] if value.startswith(" ") else value
    return out


# --------------------------------------------------------------------------
# verbs
# --------------------------------------------------------------------------


def _label(text: str) -> GroupLabel:
    return parse_label(text)


def _presentation_payload(label: GroupLabel, artin: bool) -> dict:
    m = cox.coxeter_matrix(label)
    pres = cox.artin_presentation(m) if artin else cox.coxeter_presentation(m)
    return {"label": str(label), "matrix": m.to_list(), **pres.to_dict(), "text": pres.to_text()}


def cmd_coxeter(args) -> dict:
    return _presentation_payload(_label(args.label), artin=False)


def cmd_artin(args) -> dict:
    label = _label(args.label)
    if args.action == "present":
        return _presentation_payload(label, artin=True)
    if args.word is None:
        raise ArtinLabError(f"'artin {args.action}' needs a word")
    w = parse_word(args.word, artin_alphabet(cox.rank(label)))
    if args.action == "image":
        return {"label": str(label), "word": format_word(w), "image": list(cox.coxeter_image(w, label))}
    return {"label": str(label), "word": format_word(w), "pure": cox.is_pure(w, label)}


def cmd_group(args) -> dict:
    label = _label(args.label)
    g = cox.enumerate_group(label)
    return {"label": str(label), "order": g.order, "closed_form": cox.group_order(label)}


def cmd_reflections(args) -> dict:
    label = _label(args.label)
    count, _ = cox.reflections(label)
    return {"label": str(label), "count": count, "closed_form": cox.reflection_count(label)}


def _load_arrangement(source: str) -> arr.Arrangement:
    if os.path.isfile(source):
        with open(source) as fh:
            return arr.parse_arrangement(fh.read(), name=os.path.basename(source))
    return arr.reflection_arrangement(_label(source))


def cmd_arrangement(args) -> dict:
    a = _load_arrangement(args.source)
    head = {"name": a.name, "dim": a.ambient_dim, "N": a.size}
    if args.action == "list":
        if a.is_combinatorial:
            return {**head, "rank2_lines": a.rank2_lines}
        return {**head, "hyperplanes": [list(h.normal) for h in a.hyperplanes]}
    if args.action == "chi":
        chi = arr.characteristic_polynomial(a, args.bound)
        out = {**head, "coefficients": list(chi.coefficients), "polynomial": str(chi)}
        if a.is_combinatorial or a.size <= 20:
            out["whitney_agrees"] = arr.whitney_polynomial(a) == chi
        return out
    if args.action == "poincare":
        pi = arr.poincare_polynomial(a, args.bound)
        return {**head, "coefficients": list(pi.coefficients), "polynomial": str(pi)}
    if args.action == "fiber-type":
        return {**head, "fiber_type": arr.is_fiber_type(a, args.bound)}
    rep = arr.suspension_check(a, args.bound)
    return {**head, "b1": rep.b1, "pass": rep.passed}


def cmd_fibration(args) -> dict:
    point = [p for p in args.point.replace(",", " ").split() if p]
    ev = arr.fibration_map_eval(_label(args.label), point)
    return {
        "label": str(ev.label),
        "point": [str(x) for x in ev.point],
        "in_complement": ev.in_complement,
        "image": [str(x) for x in ev.image],
        "image_in_z": ev.image_in_z,
    }


def cmd_braid(args) -> dict:
    n = args.n
    alpha = braid_alphabet(max(n, 1))
    if args.action == "nf":
        nf = garside_nf(parse_word(args.words[0], alpha), n)
        return {**nf.to_dict(), "text": str(nf)}
    if len(args.words) != 2:
        raise ArtinLabError("'braid eq' needs two words")
    u, v = (parse_word(t, alpha) for t in args.words)
    return {"n": n, "u": format_word(u), "v": format_word(v), "equal": braid_equal(u, v, n)}


def cmd_orb(args) -> dict:
    pres = orbifold_presentation(args.kind, args.n, args.q)
    out = pres.to_dict()
    if args.word is not None:
        w = parse_word(args.word, pres.alphabet)
        out = {"kind": args.kind, "n": args.n, "q": args.q, "word": format_word(w),
               "reduced": format_word(torsion_reduce(w))}
    return out


def cmd_embed(args) -> dict:
    if args.action == "verify":
        return verify_embedding_relators(args.n, args.arg).to_dict()
    if args.arg is None:
        raise ArtinLabError("'embed map' needs n and a word")
    w = parse_word(args.arg, source_alphabet(args.n, args.q))
    image = embed(w, args.n)
    assert image.alphabet == target_alphabet(args.n + 1, args.q)
    return {"n": args.n, "q": args.q, "word": format_word(w), "image": format_word(image),
            "signed": image.signed()}


def cmd_ltheory(args) -> dict:
    return l_groups(_label(args.label)).to_dict()


def cmd_kvanish(args) -> dict:
    return k_vanishing_report(_label(args.label)).to_dict()


def cmd_tower(args) -> dict:
    return {"n": args.n, "surface": args.surface,
            "levels": [lvl.to_dict() for lvl in fadell_neuwirth_tower(args.n, args.surface)]}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artinlab", description="Artin groups, arrangements and L-groups.")
    p.add_argument("--json", action="store_true", help="print structured JSON")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = verb("coxeter", cmd_coxeter, "Coxeter matrix and presentation")
    sp.add_argument("action", choices=["present"])
    sp.add_argument("label")

    sp = verb("artin", cmd_artin, "Artin presentation, Coxeter image, purity")
    sp.add_argument("action", choices=["present", "image", "pure"])
    sp.add_argument("label")
    sp.add_argument("word", nargs="?")

    sp = verb("group", cmd_group, "enumerate a finite Coxeter group")
    sp.add_argument("action", choices=["order"])
    sp.add_argument("label")

    sp = verb("reflections", cmd_reflections, "count reflections")
    sp.add_argument("label")

    sp = verb("arrangement", cmd_arrangement, "reflection arrangements and their polynomials")
    sp.add_argument("action", choices=["list", "chi", "poincare", "suspension-check", "fiber-type"])
    sp.add_argument("source", help="group label or arrangement file")
    sp.add_argument("--bound", type=int, default=arr.DEFAULT_BOUND)

    sp = verb("fibration", cmd_fibration, "evaluate the D_n / F4 projection maps")
    sp.add_argument("action", choices=["eval"])
    sp.add_argument("label")
    sp.add_argument("point", help="comma separated rationals, e.g. 1,2,5/3")

    sp = verb("braid", cmd_braid, "Garside normal form and braid equality")
    sp.add_argument("action", choices=["nf", "eq"])
    sp.add_argument("n", type=int)
    sp.add_argument("words", nargs="+")

    sp = verb("orb", cmd_orb, "orbifold braid group presentations")
    sp.add_argument("action", choices=["present", "reduce"])
    sp.add_argument("kind", choices=["source", "target"])
    sp.add_argument("n", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("word", nargs="?")

    sp = verb("embed", cmd_embed, "the puncture-to-strand embedding")
    sp.add_argument("action", choices=["map", "verify"])
    sp.add_argument("n", type=int)
    sp.add_argument("arg", nargs="?", help="q for verify, a word for map")
    sp.add_argument("--q", type=int, default=2, help="cone order for 'map'")

    sp = verb("ltheory", cmd_ltheory, "surgery L-groups of a pure Artin group")
    sp.add_argument("label")

    sp = verb("kvanish", cmd_kvanish, "lower K-theory vanishing")
    sp.add_argument("label")

    sp = verb("tower", cmd_tower, "fibration tower of pure configuration spaces")
    sp.add_argument("n", type=int)
    sp.add_argument("surface", nargs="?", default="C")
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verb == "embed" and args.action == "verify":
        if args.arg is None or not args.arg.isdigit():
            print("error: 'embed verify' needs integers n and q", file=stderr)
            return 2
        args.arg = int(args.arg)
    if args.verb == "orb":
        if args.action == "reduce" and args.word is None:
            print("error: 'orb reduce' needs a word", file=stderr)
            return 2
        if args.action == "present":
            args.word = None
    try:
        payload = args.func(args)
    except ArtinLabError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if as_json:
        stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        stdout.write(render_text(payload))
    failed = payload.get("passed") is False or payload.get("pass") is False
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
