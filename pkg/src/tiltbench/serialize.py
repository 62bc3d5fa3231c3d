"""JSON formats for algebras, modules, complexes, and reports.

All files carry a top-level ``"format": 1``.  Scalars serialize as decimal
strings ``"p/q"`` or ``"p"``.  An algebra reference is either an inline
algebra object or a string path relative to the referencing file.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .algebra import BasicAlgebra, build_path_algebra
from .complexes import ProjComplex
from .config import DEFAULT, WorkbenchConfig
from .errors import TiltbenchError
from .linalg import Matrix
from .quiver import Quiver, Relation, path_from_arrows, trivial_path
from .reps import Representation

FORMAT = 1


def scalar_to_str(c) -> str:
    return str(Fraction(c))


def scalar_from_str(s) -> Fraction:
    return Fraction(str(s))


# -- algebras -----------------------------------------------------------------


def quiver_to_dict(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in q.arrows],
    }


def quiver_from_dict(d) -> Quiver:
    return Quiver(
        d["vertices"], [(a["name"], a["from"], a["to"]) for a in d["arrows"]]
    )


def relation_to_terms(rel: Relation) -> list:
    return [{"coeff": scalar_to_str(c), "path": list(p.arrows)} for c, p in rel.terms]


def relation_from_terms(q: Quiver, terms) -> Relation:
    parsed = []
    for t in terms:
        c = scalar_from_str(t["coeff"])
        if c == 0:
            continue
        parsed.append((c, path_from_arrows(q, t["path"])))
    return Relation(q, parsed)


def algebra_to_dict(a: BasicAlgebra) -> dict:
    return {
        "format": FORMAT,
        "field": "rational",
        "quiver": quiver_to_dict(a.quiver),
        "relations": [relation_to_terms(r) for r in a.relations],
    }


def algebra_from_dict(d, config: WorkbenchConfig = DEFAULT) -> BasicAlgebra:
    if d.get("field", "rational") != "rational":
        raise TiltbenchError(f"unsupported field {d.get('field')!r}")
    q = quiver_from_dict(d["quiver"])
    rels = [relation_from_terms(q, terms) for terms in d.get("relations", [])]
    return build_path_algebra(q, rels, max_path_len=config.max_path_len)


def _resolve_algebra(ref, base_dir, config) -> BasicAlgebra:
    if isinstance(ref, str):
        path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
        return load_algebra(path, config)
    return algebra_from_dict(ref, config)


# -- elements and complexes ----------------------------------------------------


def element_to_terms(a: BasicAlgebra, x: dict) -> list:
    out = []
    for k in sorted(x):
        c = x[k]
        if c:
            out.append({"coeff": scalar_to_str(c), "path": list(a.basis[k].arrows)})
    return out


def element_from_terms(a: BasicAlgebra, terms, src_label: str, tgt_label: str) -> dict:
    """Entry of a hom between projectives: paths from tgt_label to src_label."""
    out = {}
    for t in terms:
        c = scalar_from_str(t["coeff"])
        if c == 0:
            continue
        word = list(t["path"])
        if word:
            p = path_from_arrows(a.quiver, word)
        else:
            if src_label != tgt_label:
                raise TiltbenchError("trivial path entry needs equal labels")
            p = trivial_path(tgt_label)
        if p.source != tgt_label or p.target(a.quiver) != src_label:
            raise TiltbenchError(
                f"entry path {word} does not run from {tgt_label} to {src_label}"
            )
        red = a._reduce_raw(p) if len(p) < a.nil_length else {}
        for k, cc in red.items():
            s = out.get(k, 0) + c * cc
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def complex_to_dict(c: ProjComplex, algebra_ref=None) -> dict:
    return {
        "format": FORMAT,
        "algebra": algebra_ref if algebra_ref is not None else algebra_to_dict(c.algebra),
        "terms": {str(d): list(c.term(d)) for d in c.degrees()},
        "diffs": {
            str(d): [
                [element_to_terms(c.algebra, x) for x in row] for row in c.diffs[d]
            ]
            for d in sorted(c.diffs)
        },
    }


def complex_from_dict(d, base_dir=".", config: WorkbenchConfig = DEFAULT, algebra=None) -> ProjComplex:
    a = algebra if algebra is not None else _resolve_algebra(d["algebra"], base_dir, config)
    terms = {int(k): [str(x) for x in v] for k, v in d.get("terms", {}).items()}
    diffs = {}
    for k, mat in d.get("diffs", {}).items():
        deg = int(k)
        src = terms.get(deg, [])
        tgt = terms.get(deg + 1, [])
        parsed = []
        for i, row in enumerate(mat):
            prow = []
            for j, entry in enumerate(row):
                prow.append(element_from_terms(a, entry, src[i], tgt[j]))
            parsed.append(prow)
        diffs[deg] = parsed
    return ProjComplex(a, terms, diffs)


# -- modules -------------------------------------------------------------------


def module_to_dict(m: Representation, algebra_ref=None) -> dict:
    return {
        "format": FORMAT,
        "algebra": algebra_ref if algebra_ref is not None else algebra_to_dict(m.algebra),
        "dims": {v: m.dims[v] for v in m.algebra.quiver.vertices if m.dims[v]},
        "arrows": {
            ar.name: [[scalar_to_str(x) for x in row] for row in m.mats[ar.name].data]
            for ar in m.algebra.quiver.arrows
            if m.dims[ar.source] and m.dims[ar.target]
        },
    }


def module_from_dict(d, base_dir=".", config: WorkbenchConfig = DEFAULT, algebra=None) -> Representation:
    a = algebra if algebra is not None else _resolve_algebra(d["algebra"], base_dir, config)
    dims = {str(k): int(v) for k, v in d.get("dims", {}).items()}
    mats = {}
    for name, rows in d.get("arrows", {}).items():
        ar = a.quiver.arrow_by_name.get(name)
        if ar is None:
            raise TiltbenchError(f"unknown arrow {name!r} in module file")
        mats[name] = Matrix(
            dims.get(ar.source, 0),
            dims.get(ar.target, 0),
            [[scalar_from_str(x) for x in row] for row in rows],
        )
    return Representation(a, dims, mats)


# -- file IO -------------------------------------------------------------------


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save(obj, path: str):
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def load_json_str(text: str):
    return json.loads(text)


def load_algebra(path: str, config: WorkbenchConfig = DEFAULT) -> BasicAlgebra:
    return algebra_from_dict(load_json(path), config)


def load_complex(path: str, config: WorkbenchConfig = DEFAULT, algebra=None) -> ProjComplex:
    return complex_from_dict(load_json(path), os.path.dirname(path) or ".", config, algebra)


def load_module(path: str, config: WorkbenchConfig = DEFAULT, algebra=None) -> Representation:
    return module_from_dict(load_json(path), os.path.dirname(path) or ".", config, algebra)
