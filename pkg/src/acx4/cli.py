"""Command-line interface over the document formats.

Exit codes: 0 success, 1 validation or domain error (diagnostic on
stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import plumbing_description, recognize_four, recognize_three
from .errors import DomainError
from .generate import gen_random_family
from .invariants import chi_y_report
from .multifan import ROTATIONS, ROTATIONS_AND_REVERSAL, canonical_form
from .reduction import normalize_complex, reduce_to_minimal, replay
from .render import render_fan_svg, render_graph_dot, render_graph_tikz
from .serialize import (
    FORMAT_FAMILY,
    FORMAT_GRAPH,
    FORMAT_LOG,
    _enc_vec,
    _log_obj,
    document_for,
    emit_document,
    parse_document,
)
from .torusgraph import family_to_graph, graph_to_family

_MODE_FLAGS = {"rotations": ROTATIONS, "full": ROTATIONS_AND_REVERSAL}


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_document(path):
    return parse_document(_read(path))


def _load_family(path):
    doc = _load_document(path)
    if doc.format == FORMAT_FAMILY:
        return doc.payload
    if doc.format == FORMAT_GRAPH:
        return graph_to_family(doc.payload)
    raise DomainError(f"{path}: expected a family or graph document, got {doc.format}")


def _load_family_only(path):
    doc = _load_document(path)
    if doc.format != FORMAT_FAMILY:
        raise DomainError(
            f"{path}: this command needs a family document (convert graphs first)")
    return doc.payload


def _load_graph(path):
    doc = _load_document(path)
    if doc.format == FORMAT_GRAPH:
        return doc.payload
    if doc.format == FORMAT_FAMILY:
        return family_to_graph(doc.payload)
    raise DomainError(f"{path}: expected a family or graph document, got {doc.format}")


def _emit(payload):
    sys.stdout.write(emit_document(document_for(payload)))


def _cmd_validate(args):
    doc = _load_document(args.file)
    print(f"ok: {doc.format}")
    return 0


def _cmd_convert(args):
    if args.to == "fan":
        _emit(_load_family(args.file))
    else:
        _emit(_load_graph(args.file))
    return 0


def _cmd_invariants(args):
    _emit(chi_y_report(_load_family(args.file)))
    return 0


def _cmd_blowup(args):
    from .multifan import blow_up_in_family

    _emit(blow_up_in_family(_load_family_only(args.file), args.fan, args.pos))
    return 0


def _cmd_blowdown(args):
    from .multifan import blow_down_in_family

    _emit(blow_down_in_family(_load_family_only(args.file), args.fan, args.pos))
    return 0


def _cmd_minimize(args):
    final, log = reduce_to_minimal(_load_family(args.file))
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(emit_document(document_for(log)))
    _emit(final)
    return 0


def _cmd_normalize_complex(args):
    fam = _load_family(args.file)
    if len(fam.fans) != 1:
        raise DomainError("normalize-complex needs a single-fan family")
    log, model = normalize_complex(fam.fans[0])
    obj = {
        "model": {"name": model.name, "a": model.a, "rotation": model.rotation},
        "log": _log_obj(log),
    }
    print(json.dumps(obj, indent=2))
    return 0


def _cmd_classify(args):
    fam = _load_family(args.file)
    fans = []
    for fan in fam.fans:
        k = len(fan.vectors)
        if k == 3:
            v1, v2 = recognize_three(fan)
            form = {"kind": "three", "v1": _enc_vec(v1), "v2": _enc_vec(v2)}
        elif k == 4:
            four = recognize_four(fan)
            form = {
                "kind": "four",
                "v1": _enc_vec(four.v1),
                "v2": _enc_vec(four.v2),
                "a": four.a,
                "rotation": four.rotation,
            }
        else:
            form = {"kind": "large"}
        fans.append({
            "length": k,
            "normal_form": form,
            "plumbing": [
                {
                    "euler_number": piece.euler_number,
                    "sphere_weights": [_enc_vec(w) for w in piece.sphere_weights],
                }
                for piece in plumbing_description(fan)
            ],
        })
    print(json.dumps({"fans": fans}, indent=2))
    return 0


def _cmd_equiv(args):
    mode = _MODE_FLAGS[args.mode]

    def key(fam):
        return sorted(canonical_form(f, mode).vectors for f in fam.fans)

    same = key(_load_family(args.a)) == key(_load_family(args.b))
    print("true" if same else "false")
    return 0 if same else 1


def _cmd_render(args):
    if args.format == "svg":
        sys.stdout.write(render_fan_svg(_load_family(args.file)))
    elif args.format == "dot":
        sys.stdout.write(render_graph_dot(_load_graph(args.file)))
    else:
        sys.stdout.write(render_graph_tikz(_load_graph(args.file)))
    return 0


def _cmd_generate(args):
    signs = None
    if args.signs:
        try:
            signs = [int(s) for s in args.signs.split(",")]
        except ValueError:
            raise DomainError(f"--signs must be a comma list of +1/-1, "
                              f"got {args.signs!r}") from None
    _emit(gen_random_family(args.seed, args.components, args.blowups, signs))
    return 0


def _cmd_replay(args):
    doc = _load_document(args.log)
    if doc.format != FORMAT_LOG:
        raise DomainError(f"{args.log}: expected a move-log document, got {doc.format}")
    _emit(replay(_load_family(args.file), doc.payload.moves))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acx4",
        description="Validate, rewrite, reduce, and measure fan families "
                    "and their labeled graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate any document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("convert", help="convert between fan and graph documents")
    p.add_argument("--to", choices=("fan", "graph"), required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("invariants", help="emit the invariant report of a family")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("blowup", help="insert the sum of an adjacent vector pair")
    p.add_argument("--fan", type=int, required=True)
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("blowdown", help="delete a vector equal to its neighbor sum")
    p.add_argument("--fan", type=int, required=True)
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_blowdown)

    p = sub.add_parser("minimize", help="reduce a family to unit vectors")
    p.add_argument("--log", help="also write the replayable move log here")
    p.add_argument("file")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("normalize-complex",
                       help="reduce a winding-one fan to the unit 4-fan")
    p.add_argument("file")
    p.set_defaults(func=_cmd_normalize_complex)

    p = sub.add_parser("classify",
                       help="normal forms and plumbing data of each fan")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("equiv", help="compare two families up to rotation")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", choices=tuple(_MODE_FLAGS), default="rotations")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("render", help="draw a document as svg, dot, or tikz")
    p.add_argument("--format", choices=("svg", "dot", "tikz"), required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("generate", help="seeded random family from unit fans")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--components", type=int, default=1)
    p.add_argument("--blowups", type=int, default=0)
    p.add_argument("--signs", help="comma list of +1/-1, one per component")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("replay", help="apply a move log to a family")
    p.add_argument("--log", required=True)
    p.add_argument("file")
    p.set_defaults(func=_cmd_replay)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    raise SystemExit(cli_main(sys.argv[1:]))
