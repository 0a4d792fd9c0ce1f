"""Command-line interface: shadow | count | orientation | gallery | verify | render.

Exit codes: 0 on success, 2 on input errors (bad grammar, violated
preconditions), 1 on internal invariant failures or failed verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys as _sys

from .chimney import Chimney, orientation
from .cosets import (
    ParahoricFace,
    count_intersection,
    count_parahoric,
    count_vertex,
)
from .coxeter import CoxeterSystem, build_system, element_to_str, parse_element
from .errors import InputError, InvariantError
from .galleries import Shadow, enumerate_folded, gallery_type, shadow_alcove, shadow_vertex
from .render import render_svg
from .verify import VerifyConfig, verify_suite


def parse_J(sys: CoxeterSystem, text: str) -> frozenset[int]:
    t = text.strip()
    if not t:
        return frozenset()
    if t.lower() == "all":
        return frozenset(range(1, sys.rank + 1))
    try:
        indices = [int(p) for p in t.split(",")]
    except ValueError:
        raise InputError(
            f"bad J value {text!r}: expected comma-separated indices, '' or 'all'"
        ) from None
    for j in indices:
        if not 1 <= j <= sys.rank:
            raise InputError(f"J index {j} out of range 1..{sys.rank}")
    return frozenset(indices)


def _parse_vertex(sys: CoxeterSystem, text: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"bad coroot vector {text!r}: expected comma-separated integers") from None
    if len(coords) != sys.rank:
        raise InputError(f"coroot vector {text!r} must have {sys.rank} coordinates")
    return coords


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _q_values(sys: CoxeterSystem, args) -> list[int] | None:
    if getattr(args, "q", None) is not None:
        if args.q < 2:
            raise InputError("q must be at least 2")
        return [args.q] * (sys.rank + 1)
    per = getattr(args, "per_type_q", None)
    if per:
        vals = _parse_vertex_like(per, sys.rank + 1)
        if any(v < 2 for v in vals):
            raise InputError("every panel parameter must be at least 2")
        return vals
    return None


def _parse_vertex_like(text: str, want: int) -> list[int]:
    try:
        vals = [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad integer list {text!r}") from None
    if len(vals) != want:
        raise InputError(f"expected {want} comma-separated integers, got {len(vals)}")
    return vals


def _chimney(sys: CoxeterSystem, args) -> Chimney:
    return Chimney(sys, parse_J(sys, args.J), parse_element(sys, args.y))


def _shadow_json(sys: CoxeterSystem, sh: Shadow) -> dict:
    if sh.kind == "alcove":
        elems = [element_to_str(sys, a) for a in sorted(sh.elements, key=sys.sort_key)]
    else:
        elems = [list(v) for v in sorted(sh.elements)]
    return {"kind": sh.kind, "elements": elems}


def _cmd_shadow(args) -> int:
    sys = build_system(args.type)
    ch = _chimney(sys, args)
    if (args.x is None) == (args.lam is None):
        raise InputError("shadow needs exactly one of --x (alcove) or --lambda (vertex)")
    if args.x is not None:
        sh = shadow_alcove(ch, parse_element(sys, args.x))
    else:
        sh = shadow_vertex(ch, _parse_vertex(sys, args.lam))
    obj = _shadow_json(sys, sh)
    if args.format == "json":
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = [f"{sh.kind} shadow, {len(obj['elements'])} elements:"]
        for e in obj["elements"]:
            lines.append("  " + (str(e) if e else "<id>"))
        _emit(args, "\n".join(lines))
    return 0


def _cmd_count(args) -> int:
    sys = build_system(args.type)
    ch = _chimney(sys, args)
    have_xz = args.x is not None and args.z is not None
    have_lm = args.lam is not None and args.mu is not None
    if have_xz == have_lm:
        raise InputError("count needs either --x and --z, or --lambda and --mu")
    if have_xz:
        x = parse_element(sys, args.x)
        z = parse_element(sys, args.z)
        if args.sigma is not None or args.tau is not None:
            sigma = ParahoricFace(parse_J(sys, args.sigma or ""))
            tau = ParahoricFace(parse_J(sys, args.tau or ""))
            poly = count_parahoric(ch, sigma, tau, x, z)
        else:
            poly = count_intersection(ch, x, z)
    else:
        poly = count_vertex(ch, _parse_vertex(sys, args.lam), _parse_vertex(sys, args.mu))
    qs = _q_values(sys, args)
    if qs is not None:
        value = poly.evaluate(qs)
        _emit(args, json.dumps({"value": value}) if args.format == "json" else str(value))
    else:
        _emit(args, json.dumps(poly.to_json_obj(), indent=2) if args.format == "json" else str(poly))
    return 0


def _cmd_orientation(args) -> int:
    sys = build_system(args.type)
    ch = _chimney(sys, args)
    x = parse_element(sys, args.x or "")
    signs = {
        str(i): ("+" if orientation(ch, x, i) > 0 else "-")
        for i in range(sys.rank + 1)
    }
    if args.format == "json":
        _emit(args, json.dumps({"alcove": element_to_str(sys, x), "signs": signs}, indent=2))
    else:
        body = "  ".join(f"panel {i}: {s}" for i, s in signs.items())
        _emit(args, f"alcove {element_to_str(sys, x) or '<id>'}:  {body}")
    return 0


def _cmd_gallery(args) -> int:
    sys = build_system(args.type)
    ch = _chimney(sys, args)
    x = parse_element(sys, args.x or "")
    gt = gallery_type(sys, x)
    leaves = enumerate_folded(ch, gt)
    qs = _q_values(sys, args)
    galleries = []
    for fg, weight in leaves:
        entry = {
            "steps": [
                {"panel_type": i, "kind": kind.value}
                for i, kind in zip(gt.word, fg.steps)
            ],
            "end": element_to_str(sys, fg.end),
            "weight": weight.evaluate(qs) if qs is not None else weight.to_json_obj(),
        }
        galleries.append(entry)
    obj = {"type_word": list(gt.word), "galleries": galleries}
    if args.format == "json":
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = [f"type word {list(gt.word)}, {len(galleries)} folded galleries:"]
        for g in galleries:
            kinds = " ".join(s["kind"] for s in g["steps"])
            w = g["weight"] if qs is not None else str(
                _weight_from_json(sys, g["weight"])
            )
            lines.append(f"  end={g['end'] or '<id>'}  weight={w}  [{kinds}]")
        _emit(args, "\n".join(lines))
    return 0


def _weight_from_json(sys: CoxeterSystem, obj: dict):
    from .polynomials import CountPolynomial

    poly = CountPolynomial(sys.rank + 1, {
        tuple(m["exps"]): m["coeff"] for m in obj["monomials"]
    })
    return poly


def _cmd_verify(args) -> int:
    base = VerifyConfig()
    cfg = VerifyConfig(
        types=tuple(args.types.split(",")) if args.types else base.types,
        max_length=args.max_length if args.max_length is not None else base.max_length,
        q_values=tuple(_parse_q_list(args.q_values)) if args.q_values else base.q_values,
        max_y_length=args.max_y_length if args.max_y_length is not None else base.max_y_length,
        word_check_length=args.word_check_length
        if args.word_check_length is not None
        else base.word_check_length,
        singleton_length=args.singleton_length
        if args.singleton_length is not None
        else base.singleton_length,
        unfold_length=args.unfold_length if args.unfold_length is not None else base.unfold_length,
        reseed_seeds=(args.seed, args.seed + 1) if args.seed is not None else base.reseed_seeds,
        corrupt_orientation=args.corrupt_orientation,
    )
    report = verify_suite(cfg)
    if args.format == "json":
        _emit(args, json.dumps(report.to_json_obj(), indent=2))
    else:
        color = _sys.stdout.isatty() and not os.environ.get("CHIMNEY_NO_COLOR")
        _emit(args, report.format_text(color=color))
    return 0 if report.all_passed else 1


def _parse_q_list(text: str) -> list[int]:
    try:
        vals = [int(p) for p in text.split(",")]
    except ValueError:
        raise InputError(f"bad q list {text!r}") from None
    if any(v < 2 for v in vals):
        raise InputError("q values must be at least 2")
    return vals


def _cmd_render(args) -> int:
    sys = build_system(args.type)
    ch = _chimney(sys, args)
    if args.x is not None:
        x = parse_element(sys, args.x)
        sh = shadow_alcove(ch, x)
        target = x
    elif args.lam is not None:
        sh = shadow_vertex(ch, _parse_vertex(sys, args.lam))
        target = None
    else:
        raise InputError("render needs --x (alcove shadow) or --lambda (vertex shadow)")
    svg = render_svg(sys, sh, ch, target=target)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        print(svg, end="")
    return 0


def _add_common(p: argparse.ArgumentParser, *, chimney: bool = True) -> None:
    p.add_argument("--type", required=True, help="affine type label, e.g. A2, C~2, G2")
    if chimney:
        p.add_argument("--J", default="", help="chimney node subset: '1,2', '' or 'all'")
        p.add_argument("--y", default="", help="chimney base element, element grammar")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="alcoves",
        description="Chimney orientations, folded galleries, shadows and "
        "point counts in irreducible affine Coxeter systems.  Elements are "
        'written as words "s0 s1 s2" or as "t[a,b,...]*s1 s2".',
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shadow", help="alcove or vertex shadow of an element")
    _add_common(p)
    p.add_argument("--x", default=None, help="alcove target, element grammar")
    p.add_argument("--lambda", dest="lam", default=None, help="vertex target, e.g. '1,1'")
    p.set_defaults(func=_cmd_shadow)

    p = sub.add_parser("count", help="point-count polynomial of a double coset intersection")
    _add_common(p)
    p.add_argument("--x", default=None)
    p.add_argument("--z", default=None)
    p.add_argument("--lambda", dest="lam", default=None)
    p.add_argument("--mu", default=None)
    p.add_argument("--sigma", default=None, help="left parahoric face, J-set syntax")
    p.add_argument("--tau", default=None, help="right parahoric face, J-set syntax")
    p.add_argument("--q", type=int, default=None, help="specialize every q_i to one value")
    p.add_argument("--per-type-q", dest="per_type_q", default=None,
                   help="comma-separated q_0..q_n")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("orientation", help="chimney orientation signs at an alcove")
    _add_common(p)
    p.add_argument("--x", default="", help="alcove, element grammar")
    p.set_defaults(func=_cmd_orientation)

    p = sub.add_parser("gallery", help="enumerate positively folded galleries")
    _add_common(p)
    p.add_argument("--x", default="", help="type-defining element, element grammar")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--per-type-q", dest="per_type_q", default=None)
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser("verify", help="run the exhaustive verification suite")
    p.add_argument("--types", default=None, help="comma-separated type labels")
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--q-values", default=None, help="comma-separated panel parameters")
    p.add_argument("--max-y-length", type=int, default=None)
    p.add_argument("--word-check-length", type=int, default=None)
    p.add_argument("--singleton-length", type=int, default=None)
    p.add_argument("--unfold-length", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="base seed for relabeling checks")
    p.add_argument("--corrupt-orientation", action="store_true",
                   help="mutation hook: corrupt fold signs and expect a failure")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="render a rank-2 shadow as SVG")
    _add_common(p)
    p.add_argument("--x", default=None)
    p.add_argument("--lambda", dest="lam", default=None)
    p.set_defaults(func=_cmd_render)

    return ap


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=_sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"internal invariant failure: {exc}", file=_sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
