"""Minimal right/left approximations by sums of labeled projectives.

The right approximation of X by add of the projectives with the given labels
is assembled from a minimal generating set of each Hom(P(v), X) as a module
over the category of projectives: generators are chosen modulo composites
through radical maps between the projectives.  Approximation surjectivity is
verified by an exact rank count before returning.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import BasicAlgebra
from .errors import TiltbenchError
from .linalg import Matrix, row_space_basis
from .reps import (
    ModuleMap,
    ProjSum,
    Representation,
    hom_space,
    projective,
)

ZERO = Fraction(0)


def _flatten(f: ModuleMap):
    out = []
    for v in f.source.algebra.quiver.vertices:
        for row in f.mats[v].data:
            out.extend(row)
    return out


def _prepend_map(a: BasicAlgebra, k: int):
    """Module map P(target of path k) -> P(source of path k): prepend path k."""
    src_lab = a.target[k]
    tgt_lab = a.source[k]
    ps = ProjSum(a, [src_lab])
    pt = ProjSum(a, [tgt_lab])
    from .reps import realize_entry_map

    return realize_entry_map(ps, pt, [[{k: Fraction(1)}]]), ps.rep, pt.rep


def minimal_right_approximation_labeled(a: BasicAlgebra, labels, x: Representation):
    """(multiset of labels, f: ProjSum(labels').rep -> x) minimal right
    approximation of x by add of the listed projectives."""
    distinct = []
    for lab in [str(t) for t in labels]:
        if lab not in distinct:
            distinct.append(lab)
    homs = {v: hom_space(projective(a, v), x) for v in distinct}
    chosen = {}
    for v in distinct:
        h_v = homs[v]
        if not h_v:
            chosen[v] = []
            continue
        width = len(_flatten(h_v[0]))
        rad_rows = []
        for w in distinct:
            for k in a.paths_between(w, v):
                # prepend path k: P(v) -> P(w); radical unless trivial
                if len(a.basis[k]) == 0 and w == v:
                    continue
                pre, _, _ = _prepend_map(a, k)
                for h in homs[w]:
                    rad_rows.append(_flatten(pre.then(h)))
        span = (
            row_space_basis(Matrix(len(rad_rows), width, rad_rows))
            if rad_rows
            else Matrix.zero(0, width)
        )
        picks = []
        cur = span
        for h in h_v:
            vec = Matrix(1, width, [_flatten(h)])
            cand = cur.vstack(vec)
            if cand.rank() > cur.rank():
                picks.append(h)
                cur = row_space_basis(cand)
        chosen[v] = picks
    out_labels = []
    for v in distinct:
        out_labels.extend([v] * len(chosen[v]))
    psum = ProjSum(a, out_labels)
    mats = {}
    for w in a.quiver.vertices:
        rows = []
        for v in distinct:
            for h in chosen[v]:
                rows.extend(list(h.mats[w].data))
        mats[w] = Matrix(len(rows), x.dims[w], rows)
    f = ModuleMap(psum.rep, x, mats, check=False)
    _verify_right_approximation(a, distinct, out_labels, f, x)
    return out_labels, f


def _verify_right_approximation(a, distinct, out_labels, f, x):
    psum_rep = f.source
    for v in distinct:
        target_dim = len(hom_space(projective(a, v), x))
        if target_dim == 0:
            continue
        comps = [g.then(f) for g in hom_space(projective(a, v), psum_rep)]
        if not comps:
            raise TiltbenchError("approximation property failed: no maps to lift")
        width = len(_flatten(comps[0]))
        rank = Matrix(len(comps), width, [_flatten(c) for c in comps]).rank()
        if rank != target_dim:
            raise TiltbenchError(f"right approximation not surjective on Hom(P({v}), -)")


def minimal_left_approximation_labeled(a: BasicAlgebra, labels, x: Representation):
    """(multiset of labels, g: x -> ProjSum(labels').rep) minimal left
    approximation of x by add of the listed projectives."""
    distinct = []
    for lab in [str(t) for t in labels]:
        if lab not in distinct:
            distinct.append(lab)
    homs = {v: hom_space(x, projective(a, v)) for v in distinct}
    chosen = {}
    for v in distinct:
        h_v = homs[v]
        if not h_v:
            chosen[v] = []
            continue
        width = len(_flatten(h_v[0]))
        rad_rows = []
        for w in distinct:
            for k in a.paths_between(v, w):
                # prepend path k: P(w) -> P(v); postcompose h: x -> P(w)
                if len(a.basis[k]) == 0 and w == v:
                    continue
                pre, _, _ = _prepend_map(a, k)
                for h in homs[w]:
                    rad_rows.append(_flatten(h.then(pre)))
        span = (
            row_space_basis(Matrix(len(rad_rows), width, rad_rows))
            if rad_rows
            else Matrix.zero(0, width)
        )
        picks = []
        cur = span
        for h in h_v:
            vec = Matrix(1, width, [_flatten(h)])
            cand = cur.vstack(vec)
            if cand.rank() > cur.rank():
                picks.append(h)
                cur = row_space_basis(cand)
        chosen[v] = picks
    out_labels = []
    for v in distinct:
        out_labels.extend([v] * len(chosen[v]))
    psum = ProjSum(a, out_labels)
    mats = {}
    for w in a.quiver.vertices:
        cols = None
        for v in distinct:
            for h in chosen[v]:
                cols = h.mats[w] if cols is None else cols.hstack(h.mats[w])
        mats[w] = cols if cols is not None else Matrix.zero(x.dims[w], 0)
    g = ModuleMap(x, psum.rep, mats, check=False)
    _verify_left_approximation(a, distinct, g, x)
    return out_labels, g


def _verify_left_approximation(a, distinct, g, x):
    psum_rep = g.target
    for v in distinct:
        target_dim = len(hom_space(x, projective(a, v)))
        if target_dim == 0:
            continue
        comps = [g.then(h) for h in hom_space(psum_rep, projective(a, v))]
        if not comps:
            raise TiltbenchError("approximation property failed: no maps to lift")
        width = len(_flatten(comps[0]))
        rank = Matrix(len(comps), width, [_flatten(c) for c in comps]).rank()
        if rank != target_dim:
            raise TiltbenchError(f"left approximation not surjective on Hom(-, P({v}))")


def minimal_right_approximation(p: Representation, x: Representation, config=None):
    """Right add(p)-approximation for projective p, via its labels."""
    labels = _labels_of_projective(p)
    labs, f = minimal_right_approximation_labeled(p.algebra, labels, x)
    return f


def minimal_left_approximation(q: Representation, x: Representation, config=None):
    labels = _labels_of_projective(q)
    labs, g = minimal_left_approximation_labeled(q.algebra, labels, x)
    return g


def _labels_of_projective(p: Representation):
    from .decompose import decompose, _iso_between_indecomposables
    from .errors import NotProjective

    if p.total_dim() == 0:
        return []
    summands, _, _ = decompose(p)
    labels = []
    for rep, mult in summands:
        lab = None
        for v in p.algebra.quiver.vertices:
            if _iso_between_indecomposables(rep, projective(p.algebra, v)) is not None:
                lab = v
                break
        if lab is None:
            raise NotProjective("module is not a direct sum of projectives")
        labels.extend([lab] * mult)
    return labels
