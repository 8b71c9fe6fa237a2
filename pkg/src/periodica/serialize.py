"""JSON document formats.

Complex document:
    {"field": "Q" | "Fp:<p>", "r0": int, "r1": int,
     "d0": [[elem]], "d1": [[elem]]}
with d0 an r1 x r0 grid and d1 an r0 x r1 grid of ring-element strings
(row-major).  Chain-map document: {"src": <complex or path>, "dst": ...,
"f0": [[elem]], "f1": [[elem]]}.  Quasi-periodic document mirrors the
complex format with keys alpha0, alpha1, phi0, phi1.  Multisets are
lists [{"j": int, "shifted": bool, "mult": int}].

Emitted documents re-parse to identical values (canonical element
strings).
"""

from __future__ import annotations

from typing import Callable, Optional

from .classify import IndecompLabel, IndecompMultiset, label
from .complexes import (
    ChainMap2,
    ComplexViolation,
    HomModule,
    Homotopy2,
    Triangle,
    TwoPeriodicComplex,
    validate_complex,
)
from .errors import ParseError, PeriodicaError, ValidationError
from .fields import FieldSpec
from .localring import format_element, parse_element
from .matrix import RMatrix
from .minimal import SplitResult
from .smith import SubquotientModule


# -- matrices ---------------------------------------------------------------


def matrix_to_grid(m: RMatrix) -> list:
    return [[format_element(m.at(i, j)) for j in range(m.cols)]
            for i in range(m.rows)]


def parse_matrix(field: FieldSpec, doc, rows: int, cols: int,
                 path: str) -> RMatrix:
    if not isinstance(doc, list) or len(doc) != rows:
        raise ParseError(f"{path}: expected {rows} rows")
    ents = []
    for i, row in enumerate(doc):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{path}[{i}]: expected {cols} entries")
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise ParseError(f"{path}[{i}][{j}]: entry must be a string")
            try:
                ents.append(parse_element(field, cell))
            except PeriodicaError as exc:
                raise ParseError(f"{path}[{i}][{j}]: {exc}") from None
    return RMatrix(field, rows, cols, tuple(ents))


# -- complexes ----------------------------------------------------------------


def complex_to_doc(x: TwoPeriodicComplex) -> dict:
    return {
        "field": x.field.label,
        "r0": x.r0,
        "r1": x.r1,
        "d0": matrix_to_grid(x.d0),
        "d1": matrix_to_grid(x.d1),
    }


def _field_of(doc: dict, expect: Optional[FieldSpec]) -> FieldSpec:
    if "field" not in doc:
        raise ParseError("$.field: missing")
    field = FieldSpec.from_label(doc["field"])
    if expect is not None and field != expect:
        raise ParseError(
            f"$.field: document field {field.label} does not match {expect.label}")
    return field


def parse_complex_doc(doc, expect_field: Optional[FieldSpec] = None
                      ) -> TwoPeriodicComplex:
    if not isinstance(doc, dict):
        raise ParseError("complex document must be a JSON object")
    field = _field_of(doc, expect_field)
    try:
        r0, r1 = int(doc["r0"]), int(doc["r1"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("$.r0/$.r1: nonnegative integers required") from None
    if r0 < 0 or r1 < 0:
        raise ParseError("$.r0/$.r1: nonnegative integers required")
    d0 = parse_matrix(field, doc.get("d0"), r1, r0, "$.d0")
    d1 = parse_matrix(field, doc.get("d1"), r0, r1, "$.d1")
    x = TwoPeriodicComplex(field, r0, r1, d0, d1)
    v = validate_complex(x)
    if v is not None:
        raise ValidationError(str(v))
    return x


# -- chain maps ---------------------------------------------------------------


def chain_map_to_doc(f: ChainMap2) -> dict:
    return {
        "src": complex_to_doc(f.src),
        "dst": complex_to_doc(f.dst),
        "f0": matrix_to_grid(f.f0),
        "f1": matrix_to_grid(f.f1),
    }


def parse_chain_map_doc(doc, expect_field: Optional[FieldSpec] = None,
                        loader: Optional[Callable] = None) -> ChainMap2:
    """``loader`` resolves string entries of src/dst (file paths) to
    parsed documents; inline objects are parsed directly."""
    if not isinstance(doc, dict):
        raise ParseError("chain-map document must be a JSON object")

    def end(key: str) -> TwoPeriodicComplex:
        sub = doc.get(key)
        if isinstance(sub, str):
            if loader is None:
                raise ParseError(f"$.{key}: path reference not supported here")
            sub = loader(sub)
        return parse_complex_doc(sub, expect_field)

    src = end("src")
    dst = end("dst")
    f0 = parse_matrix(src.field, doc.get("f0"), dst.r0, src.r0, "$.f0")
    f1 = parse_matrix(src.field, doc.get("f1"), dst.r1, src.r1, "$.f1")
    try:
        return ChainMap2(src, dst, f0, f1)
    except PeriodicaError as exc:
        raise ValidationError(f"not a chain map: {exc}") from None


def homotopy_to_doc(h: Homotopy2) -> dict:
    return {"s0": matrix_to_grid(h.s0), "s1": matrix_to_grid(h.s1)}


# -- quasi-periodic data ------------------------------------------------------


def quasi_to_doc(q) -> dict:
    return {
        "field": q.field.label,
        "r0": q.r0,
        "r1": q.r1,
        "alpha0": matrix_to_grid(q.alpha0),
        "alpha1": matrix_to_grid(q.alpha1),
        "phi0": matrix_to_grid(q.phi0),
        "phi1": matrix_to_grid(q.phi1),
    }


def parse_quasi_doc(doc, expect_field: Optional[FieldSpec] = None):
    from .strictify import QuasiPeriodicData

    if not isinstance(doc, dict):
        raise ParseError("quasi-periodic document must be a JSON object")
    field = _field_of(doc, expect_field)
    try:
        r0, r1 = int(doc["r0"]), int(doc["r1"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("$.r0/$.r1: nonnegative integers required") from None
    return QuasiPeriodicData(
        field, r0, r1,
        alpha0=parse_matrix(field, doc.get("alpha0"), r1, r0, "$.alpha0"),
        alpha1=parse_matrix(field, doc.get("alpha1"), r0, r1, "$.alpha1"),
        phi0=parse_matrix(field, doc.get("phi0"), r0, r0, "$.phi0"),
        phi1=parse_matrix(field, doc.get("phi1"), r1, r1, "$.phi1"),
    )


# -- multisets and modules ----------------------------------------------------


def multiset_to_list(ms: IndecompMultiset) -> list:
    return [{"j": lab.j, "shifted": lab.shifted, "mult": mult}
            for lab, mult in ms.items]


def parse_multiset(doc) -> IndecompMultiset:
    if not isinstance(doc, list):
        raise ParseError("multiset must be a JSON list")
    labs = []
    for i, item in enumerate(doc):
        try:
            labs.extend([label(int(item["j"]), bool(item["shifted"]))]
                        * int(item.get("mult", 1)))
        except (KeyError, TypeError, ValueError):
            raise ParseError(f"$[{i}]: bad multiset entry") from None
    return IndecompMultiset.from_labels(labs)


def subquotient_to_doc(m: SubquotientModule) -> dict:
    return {"factors": list(m.factors), "free_rank": m.free_rank}


def hom_module_to_doc(hm: HomModule) -> dict:
    return {
        "factors": list(hm.factors),
        "free_rank": hm.free_rank,
        "generators": [
            {"f0": matrix_to_grid(g.f0), "f1": matrix_to_grid(g.f1)}
            for g in hm.generators
        ],
    }


def split_to_doc(s: SplitResult) -> dict:
    return {
        "minimal": complex_to_doc(s.minimal),
        "trivials": {"type1": s.type1, "type2": s.type2},
        "into": {"f0": matrix_to_grid(s.into.f0),
                 "f1": matrix_to_grid(s.into.f1)},
        "back": {"f0": matrix_to_grid(s.back.f0),
                 "f1": matrix_to_grid(s.back.f1)},
    }


def triangle_to_doc(t: Triangle) -> dict:
    return {
        "N": complex_to_doc(t.n),
        "E": complex_to_doc(t.e),
        "M": complex_to_doc(t.m),
        "f": {"f0": matrix_to_grid(t.f.f0), "f1": matrix_to_grid(t.f.f1)},
        "g": {"f0": matrix_to_grid(t.g.f0), "f1": matrix_to_grid(t.g.f1)},
        "h": {"f0": matrix_to_grid(t.h.f0), "f1": matrix_to_grid(t.h.f1)},
    }


def label_to_doc(lab: IndecompLabel) -> dict:
    return {"j": lab.j, "shifted": lab.shifted, "name": lab.name}


def ar_report_to_doc(rep) -> dict:
    doc = {
        "rar1": rep.rar1_ok,
        "rar2": rep.rar2_ok,
        "rar3": rep.rar3_ok,
        "passed": rep.passed,
        "middle": multiset_to_list(rep.middle),
        "tested_family": [label_to_doc(l) for l in rep.tested_family],
        "counterexample": None,
    }
    if rep.counterexample is not None:
        lab, idx = rep.counterexample
        doc["counterexample"] = {"label": label_to_doc(lab), "generator": idx}
    return doc


def lar_report_to_doc(rep) -> dict:
    doc = {
        "lar1": rep.lar1_ok,
        "lar2": rep.lar2_ok,
        "lar3": rep.lar3_ok,
        "passed": rep.passed,
        "middle": multiset_to_list(rep.middle),
        "tested_family": [label_to_doc(l) for l in rep.tested_family],
        "counterexample": None,
    }
    if rep.counterexample is not None:
        lab, idx = rep.counterexample
        doc["counterexample"] = {"label": label_to_doc(lab), "generator": idx}
    return doc


def quiver_to_doc(result) -> dict:
    return {
        "vertices": [label_to_doc(v) for v in result.graph.vertices],
        "edges": [
            {"src": label_to_doc(e.src), "dst": label_to_doc(e.dst),
             "mult": e.mult}
            for e in result.graph.edges
        ],
        "verified": result.verified,
    }
