"""Batch command-line front end.

One command per invocation; composition happens through files.  Exit
codes: 0 success, 1 mathematical verification failure (a validation
violation, a failed AR axiom, a map that is not null-homotopic, a Serre
length mismatch), 2 input error (unreadable file, parse error, input
outside an operation's domain).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .artheory import (
    ar_triangle,
    build_quiver,
    quiver_dot,
    serre_length_check,
    verify_left_ar,
    verify_right_ar,
)
from .classify import decompose, k_complex
from .complexes import (
    cohomology,
    cone,
    direct_sum,
    dual,
    hom_module,
    homc,
    is_null_homotopic,
    shift,
    tensor2,
    validate_complex,
)
from .errors import (
    NotFiniteLengthError,
    ParseError,
    PeriodicaError,
    ValidationError,
)
from .fields import FieldSpec
from .minimal import reduce
from .selftest import run_selftest
from .smith import SubquotientModule
from .strictify import strictify, window_chain_map

OK, VERIFY_FAILED, INPUT_ERROR = 0, 1, 2


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def _emit(doc, fmt: str, text_renderer=None) -> None:
    if fmt == "json" or text_renderer is None:
        print(json.dumps(doc, indent=2))
    else:
        print(text_renderer(doc))


def _field(args) -> FieldSpec:
    return FieldSpec.from_label(args.field)


def _load_complex(args, path: str):
    return serialize.parse_complex_doc(_load_json(path), _field(args))


def _load_map(args, path: str):
    base = Path(path).parent

    def loader(ref: str):
        return _load_json(str((base / ref)))

    return serialize.parse_chain_map_doc(_load_json(path), _field(args), loader)


def _subquotient_text(m: SubquotientModule) -> str:
    parts = [f"R/x^{a}" for a in m.factors] + ["R"] * m.free_rank
    return " + ".join(parts) if parts else "0"


# -- command handlers ---------------------------------------------------------


def cmd_validate(args) -> int:
    doc = _load_json(args.complex)
    try:
        x = serialize.parse_complex_doc(doc, _field(args))
    except ValidationError as exc:
        _emit({"valid": False, "violation": str(exc)}, args.format,
              lambda d: f"invalid: {d['violation']}")
        return VERIFY_FAILED
    _emit({"valid": True, "r0": x.r0, "r1": x.r1}, args.format,
          lambda d: f"valid complex, ranks ({d['r0']}, {d['r1']})")
    return OK


def cmd_reduce(args) -> int:
    x = _load_complex(args, args.complex)
    s = reduce(x)
    doc = serialize.split_to_doc(s)
    _emit(doc, args.format, lambda d: (
        f"minimal ranks ({s.minimal.r0}, {s.minimal.r1}), "
        f"trivials: type1={s.type1}, type2={s.type2}"))
    return OK


def cmd_cohomology(args) -> int:
    x = _load_complex(args, args.complex)
    h0, h1 = cohomology(x)
    doc = {"H0": serialize.subquotient_to_doc(h0),
           "H1": serialize.subquotient_to_doc(h1)}
    _emit(doc, args.format, lambda d: (
        f"H0 = {_subquotient_text(h0)}\nH1 = {_subquotient_text(h1)}"))
    return OK


def cmd_decompose(args) -> int:
    x = _load_complex(args, args.complex)
    try:
        dec = decompose(x)
    except NotFiniteLengthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    doc = {
        "multiset": serialize.multiset_to_list(dec.multiset),
        "minimal": serialize.complex_to_doc(dec.minimal),
        "to_blocks": {"f0": serialize.matrix_to_grid(dec.to_blocks.f0),
                      "f1": serialize.matrix_to_grid(dec.to_blocks.f1)},
        "from_blocks": {"f0": serialize.matrix_to_grid(dec.from_blocks.f0),
                        "f1": serialize.matrix_to_grid(dec.from_blocks.f1)},
    }
    _emit(doc, args.format, lambda d: str(dec.multiset))
    return OK


def cmd_unary(args) -> int:
    x = _load_complex(args, args.complex)
    y = shift(x) if args.op == "shift" else dual(x)
    _emit(serialize.complex_to_doc(y), args.format)
    return OK


def cmd_binary(args) -> int:
    x = _load_complex(args, args.lhs)
    y = _load_complex(args, args.rhs)
    out = {"sum": direct_sum, "tensor": tensor2, "homc": homc}[args.op](x, y)
    _emit(serialize.complex_to_doc(out), args.format)
    return OK


def cmd_hom(args) -> int:
    x = _load_complex(args, args.lhs)
    y = _load_complex(args, args.rhs)
    hm = hom_module(x, y)
    doc = serialize.hom_module_to_doc(hm)
    _emit(doc, args.format, lambda d: (
        f"Hom = {' + '.join(f'R/x^{a}' for a in hm.factors) or '0'}"
        + (f" + R^{hm.free_rank}" if hm.free_rank else "")))
    return OK


def cmd_cone(args) -> int:
    f = _load_map(args, args.map)
    c, u, v = cone(f)
    doc = {
        "cone": serialize.complex_to_doc(c),
        "u": {"f0": serialize.matrix_to_grid(u.f0),
              "f1": serialize.matrix_to_grid(u.f1)},
        "v": {"f0": serialize.matrix_to_grid(v.f0),
              "f1": serialize.matrix_to_grid(v.f1)},
    }
    _emit(doc, args.format)
    return OK


def cmd_homotopic(args) -> int:
    f = _load_map(args, args.map)
    h = is_null_homotopic(f)
    if h is None:
        _emit({"null_homotopic": False}, args.format,
              lambda d: "not null-homotopic")
        return VERIFY_FAILED
    doc = {"null_homotopic": True, "witness": serialize.homotopy_to_doc(h)}
    _emit(doc, args.format, lambda d: "null-homotopic (witness attached)")
    return OK


def cmd_strictify(args) -> int:
    q = serialize.parse_quasi_doc(_load_json(args.data), _field(args))
    x = strictify(q)
    doc = {"complex": serialize.complex_to_doc(x)}
    if args.window:
        fs = window_chain_map(q, radius=args.window)
        doc["window"] = {str(n): serialize.matrix_to_grid(m)
                         for n, m in sorted(fs.items())}
    _emit(doc, args.format)
    return OK


def cmd_ar_triangle(args) -> int:
    t = ar_triangle(args.i, _field(args))
    dec = decompose(t.e)
    doc = serialize.triangle_to_doc(t)
    doc["middle"] = serialize.multiset_to_list(dec.multiset)
    _emit(doc, args.format, lambda d: f"middle = {dec.multiset}")
    return OK


def cmd_ar_verify(args) -> int:
    t = ar_triangle(args.i, _field(args))
    right = verify_right_ar(t, args.bound)
    left = verify_left_ar(t, args.bound)
    doc = {"i": args.i, "bound": args.bound,
           "right": serialize.ar_report_to_doc(right),
           "left": serialize.lar_report_to_doc(left),
           "passed": right.passed and left.passed}
    _emit(doc, args.format, lambda d: (
        f"RAR1={right.rar1_ok} RAR2={right.rar2_ok} RAR3={right.rar3_ok} "
        f"LAR1={left.lar1_ok} LAR2={left.lar2_ok} LAR3={left.lar3_ok} "
        f"middle={right.middle}"))
    return OK if (right.passed and left.passed) else VERIFY_FAILED


def cmd_quiver(args) -> int:
    result = build_quiver(args.max, _field(args))
    if args.format == "dot":
        print(quiver_dot(result.graph), end="")
    else:
        doc = serialize.quiver_to_doc(result)
        if args.format == "json":
            print(json.dumps(doc, indent=2))
        else:
            for e in result.graph.edges:
                print(f"{e.src.name} -> {e.dst.name} (mult {e.mult})")
    if not result.verified:
        print("quiver verification FAILED", file=sys.stderr)
        return VERIFY_FAILED
    return OK


def cmd_serre_check(args) -> int:
    x = _load_complex(args, args.lhs)
    y = _load_complex(args, args.rhs)
    try:
        ok = serre_length_check(x, y)
    except NotFiniteLengthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    _emit({"equal_lengths": ok}, args.format,
          lambda d: "Serre lengths agree" if ok else "Serre length MISMATCH")
    return OK if ok else VERIFY_FAILED


def cmd_selftest(args) -> int:
    results = run_selftest(seed=args.seed, rounds=args.rounds)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        print(json.dumps([{"suite": r.name, "ok": r.ok, "detail": r.detail}
                          for r in results], indent=2))
    else:
        for r in results:
            line = f"{'PASS' if r.ok else 'FAIL'} {r.name}"
            if r.detail:
                line += f" ({r.detail})"
            print(line)
    return OK if not failed else VERIFY_FAILED


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodica",
        description="Exact computations with 2-periodic complexes over k[x] "
                    "localized at (x).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=("text", "json")):
        p.add_argument("--field", default="Q",
                       help="coefficient field: Q or Fp:<p> (default Q)")
        p.add_argument("--format", default="text", choices=fmt_choices,
                       help="output format")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized suites")

    p = sub.add_parser("validate", help="check a complex document")
    p.add_argument("complex")
    common(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("reduce", help="split off the trivial summands")
    p.add_argument("complex")
    common(p)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("cohomology", help="invariant factors of H0 and H1")
    p.add_argument("complex")
    common(p)
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("decompose",
                       help="indecomposable summands with certificates")
    p.add_argument("complex")
    common(p)
    p.set_defaults(fn=cmd_decompose)

    for name in ("shift", "dual"):
        p = sub.add_parser(name, help=f"{name} of a complex")
        p.add_argument("complex")
        common(p)
        p.set_defaults(fn=cmd_unary, op=name)

    for name, desc in (("sum", "direct sum"), ("tensor", "2-periodic tensor"),
                       ("homc", "2-periodic Hom complex")):
        p = sub.add_parser(name, help=desc)
        p.add_argument("lhs")
        p.add_argument("rhs")
        common(p)
        p.set_defaults(fn=cmd_binary, op=name)

    p = sub.add_parser("hom", help="Hom-module in the homotopy category")
    p.add_argument("lhs")
    p.add_argument("rhs")
    common(p)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("cone", help="mapping cone of a chain map")
    p.add_argument("map")
    common(p)
    p.set_defaults(fn=cmd_cone)

    p = sub.add_parser("homotopic", help="null-homotopy witness search")
    p.add_argument("map")
    common(p)
    p.set_defaults(fn=cmd_homotopic)

    p = sub.add_parser("strictify", help="strictify quasi-periodic data")
    p.add_argument("data")
    p.add_argument("--window", type=int, default=0,
                   help="also emit comparison maps for |n| <= window")
    common(p)
    p.set_defaults(fn=cmd_strictify)

    p = sub.add_parser("ar-triangle", help="AR-triangle ending at K(i)")
    p.add_argument("--i", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_ar_triangle)

    p = sub.add_parser("ar-verify", help="verify the AR axioms at K(i)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--bound", type=int, default=None,
                   help="test family bound (default i + 3)")
    common(p)
    p.set_defaults(fn=cmd_ar_verify)

    p = sub.add_parser("quiver", help="verified AR-quiver up to K(max)")
    p.add_argument("--max", type=int, default=4)
    common(p, fmt_choices=("text", "json", "dot"))
    p.set_defaults(fn=cmd_quiver)

    p = sub.add_parser("serre-check", help="Serre duality length check")
    p.add_argument("lhs")
    p.add_argument("rhs")
    common(p)
    p.set_defaults(fn=cmd_serre_check)

    p = sub.add_parser("selftest", help="run the randomized property suite")
    p.add_argument("--rounds", type=int, default=8)
    common(p)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "bound", "missing") is None:
        args.bound = args.i + 3
    try:
        return args.fn(args)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except NotFiniteLengthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except PeriodicaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
