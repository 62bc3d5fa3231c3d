"""Splitting complexes of projectives into indecomposable summands.

Idempotent homotopy classes are strictified to exact chain-level idempotents
(Newton iteration; the error is null-homotopic, hence nilpotent on a radical
complex), and a strict idempotent is split degreewise: the generators of the
image of each component are read off its top, which recovers the labels of
the summand and the symbolic form of its differentials.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .config import DEFAULT, WorkbenchConfig
from .decompose import FiniteDimAlgebra, lift_idempotent, primitive_idempotents
from .errors import DecompositionError, NotIdempotent, TiltbenchError
from .linalg import Matrix, row_space_basis
from .complexes import (
    ChainMapC,
    HomotopySpace,
    ProjComplex,
    emat_zero,
    homotopy_hom,
    minimize,
)
from .reps import ProjSum, extract_entry_map

ZERO = Fraction(0)
ONE = Fraction(1)


class ChainEndData:
    """Chain-level and class-level endomorphism algebras of a complex."""

    def __init__(self, c: ProjComplex):
        self.complex = c
        self.space = HomotopySpace(c, c.shift(0))
        self.chain_dim = len(self.space.chain_vectors)
        self._chain_maps = [self.space.vector_to_chain_map(v) for v in self.space.chain_vectors]
        ident = ChainMapC.identity(c)
        self.one = self._coords(ident)
        self._table = None

    def _coords(self, cm: ChainMapC):
        vec = self.space.chain_map_to_vector(cm)
        basis = Matrix.from_rows([list(v) for v in self.space.chain_vectors])
        sol = basis.transpose().solve(Matrix(len(vec), 1, [[x] for x in vec]))
        if sol is None:
            raise TiltbenchError("endomorphism outside the chain-map space")
        return [sol.data[i][0] for i in range(self.chain_dim)]

    def element(self, coords) -> ChainMapC:
        acc = None
        for c, f in zip(coords, self._chain_maps):
            if c == 0:
                continue
            acc = f.scale(c) if acc is None else acc + f.scale(c)
        if acc is None:
            z = self.complex
            return ChainMapC.zero(z, z)
        return acc

    def mul(self, a, b):
        # product in "then" order: a then b as chain maps
        if self._table is None:
            self._table = [[None] * self.chain_dim for _ in range(self.chain_dim)]
        out = [ZERO] * self.chain_dim
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                if self._table[i][j] is None:
                    self._table[i][j] = self._coords(self._chain_maps[i].then(self._chain_maps[j]))
                for k, c in enumerate(self._table[i][j]):
                    out[k] += ca * cb * c
        return out

    def chain_algebra(self) -> FiniteDimAlgebra:
        return FiniteDimAlgebra(self.chain_dim, self.mul, self.one)


def strictify_idempotent(c: ProjComplex, e: ChainMapC) -> ChainMapC:
    """Exact chain-level idempotent homotopic to the given class idempotent.

    Requires a radical complex so that null-homotopic errors are nilpotent.
    """
    if not c.is_radical():
        raise TiltbenchError("strictification needs a radical complex")
    space = HomotopySpace(c, c.shift(0))
    diff = space.reduce(e.then(e) - e)
    if any(x != 0 for x in diff):
        raise NotIdempotent("class is not idempotent up to homotopy")
    data = ChainEndData(c)
    coords = data._coords(e)
    lifted = lift_idempotent(data.chain_algebra(), coords)
    strict = data.element(lifted)
    if not (strict.then(strict) - strict).is_zero():
        raise NotIdempotent("strictification failed")
    if any(x != 0 for x in space.reduce(strict - e)):
        raise NotIdempotent("strictified idempotent left its homotopy class")
    return strict


def _image_generators(alg, psum: ProjSum, rows_by_vertex):
    """Pick image vectors whose tops form a basis; return (labels, entries).

    ``entries[k]`` is the row of hom entries describing generator k as a map
    P(b_k) -> sum of the ambient labels.
    """
    labels = []
    gen_rows = []  # (vertex, coordinate row)
    for w in alg.quiver.vertices:
        rows = rows_by_vertex[w]
        if rows.rows == 0:
            continue
        # trivial-path coordinates at w detect the top
        triv_cols = [
            c
            for c, (i, k) in enumerate(psum.layout[w])
            if len(alg.basis[k]) == 0
        ]
        proj = rows.submatrix(range(rows.rows), triv_cols) if triv_cols else Matrix.zero(rows.rows, 0)
        chosen = []
        cur = Matrix.zero(0, proj.cols)
        for r in range(rows.rows):
            cand = cur.vstack(proj.submatrix([r], range(proj.cols)))
            if cand.rank() > cur.rank():
                chosen.append(r)
                cur = row_space_basis(cand)
        for r in chosen:
            labels.append(w)
            gen_rows.append((w, list(rows.row(r))))
    entries = []
    for w, row in gen_rows:
        entry_row = []
        for i, lab_a in enumerate(psum.labels):
            x = {}
            for c, (ii, k) in enumerate(psum.layout[w]):
                if ii == i and row[c] != 0:
                    x[k] = row[c]
            entry_row.append(x)
        entries.append(entry_row)
    return labels, entries


def split_strict_idempotent(c: ProjComplex, strict: ChainMapC):
    """(summand, include: summand->c, project: c->summand) for an exact
    chain idempotent; include then project is the identity on the summand and
    project then include equals the idempotent on the nose."""
    alg = c.algebra
    sums = {d: ProjSum(alg, c.term(d)) for d in c.terms}
    realized = strict.realize(sums, sums)
    labels = {}
    phi_entries = {}
    psi_entries = {}
    new_sums = {}
    for d in c.terms:
        e_d = realized.get(d)
        if e_d is None:
            continue
        rows_by_vertex = {v: row_space_basis(e_d.mats[v]) for v in alg.quiver.vertices}
        labs, entries = _image_generators(alg, sums[d], rows_by_vertex)
        if not labs:
            continue
        labels[d] = labs
        new_sums[d] = ProjSum(alg, labs)
        # phi: new -> c, entries indexed (new summand k, ambient summand i)
        phi_entries[d] = entries
        # psi: c -> new with psi * phi = e and phi * psi = id
        phi_map = None
        from .reps import realize_entry_map

        phi_map = realize_entry_map(new_sums[d], sums[d], entries)
        psi_mats = {}
        for v in alg.quiver.vertices:
            phi_v = phi_map.mats[v]
            e_v = e_d.mats[v]
            sol = phi_v.transpose().solve(e_v.transpose())
            if sol is None:
                raise DecompositionError("idempotent image rows escaped the generator span")
            psi_mats[v] = sol.transpose()
        from .reps import ModuleMap

        psi_map = ModuleMap(sums[d].rep, new_sums[d].rep, psi_mats, check=False)
        psi_entries[d] = extract_entry_map(sums[d], new_sums[d], psi_map)
    # differentials of the summand
    terms = {d: labels[d] for d in labels}
    diffs = {}
    from .complexes import emat_compose

    for d in labels:
        if d + 1 not in labels:
            continue
        inner = emat_compose(alg, phi_entries[d], c.diff(d))
        diffs[d] = emat_compose(alg, inner, psi_entries[d + 1])
    summand = ProjComplex(alg, terms, diffs)
    include = ChainMapC(summand, c, {d: phi_entries[d] for d in labels})
    project = ChainMapC(c, summand, {d: psi_entries[d] for d in labels})
    if not include.is_chain_map() or not project.is_chain_map():
        raise DecompositionError("split maps are not chain maps")
    if not include.then(project).is_identity_shape():
        raise DecompositionError("include then project is not the identity")
    return summand, include, project


def split_idempotent(c: ProjComplex, e: ChainMapC) -> ProjComplex:
    """Direct summand of c cut out by an idempotent homotopy class."""
    if not c.is_radical():
        m, eq = minimize(c)
        e_m = eq.i.then(e).then(eq.p)
        return split_idempotent(m, e_m)
    strict = strictify_idempotent(c, e)
    summand, _, _ = split_strict_idempotent(c, strict)
    return summand


def _support_components(c: ProjComplex):
    """Partition of the summand slots of c under nonzero differential
    coupling; returns a list of {degree: [slot indices]} dicts."""
    nodes = [(d, i) for d in c.degrees() for i in range(len(c.term(d)))]
    parent = {n: n for n in nodes}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for d, mat in c.diffs.items():
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if x:
                    union((d, i), (d + 1, j))
    groups = {}
    for n in nodes:
        groups.setdefault(find(n), []).append(n)
    out = []
    for nodes_in_group in groups.values():
        comp = {}
        for d, i in sorted(nodes_in_group):
            comp.setdefault(d, []).append(i)
        out.append(comp)
    out.sort(key=lambda comp: (min(comp), comp[min(comp)][0]))
    return out


def _component_complex(c: ProjComplex, comp):
    terms = {d: [c.term(d)[i] for i in comp[d]] for d in comp}
    diffs = {}
    for d in comp:
        if d + 1 in comp:
            diffs[d] = [[c.diff(d)[i][j] for j in comp[d + 1]] for i in comp[d]]
    sub = ProjComplex(c.algebra, terms, diffs)
    incl_mats = {}
    proj_mats = {}
    alg = c.algebra
    for d in comp:
        inc = emat_zero(len(comp[d]), len(c.term(d)))
        prj = emat_zero(len(c.term(d)), len(comp[d]))
        for pos, i in enumerate(comp[d]):
            ident = {alg.idempotent_index[c.term(d)[i]]: ONE}
            inc[pos][i] = ident
            prj[i][pos] = ident
        incl_mats[d] = inc
        proj_mats[d] = prj
    return sub, ChainMapC(sub, c, incl_mats), ChainMapC(c, sub, proj_mats)


def complexes_isomorphic(x: ProjComplex, y: ProjComplex, config: WorkbenchConfig = DEFAULT):
    """(f: x->y, g: y->x) mutually inverse chain isos, or None.

    Complete for radical complexes: degreewise label multisets must match,
    then an invertible chain map is searched; for indecomposables the
    radical-avoidance pairing decides nonexistence exactly.
    """
    if {d: sorted(x.term(d)) for d in x.degrees()} != {d: sorted(y.term(d)) for d in y.degrees()}:
        return None
    if x.is_zero():
        return ChainMapC.zero(x, y), ChainMapC.zero(y, x)
    sp_xy = homotopy_hom(x, y, 0)
    if not sp_xy.chain_vectors:
        return None
    rng = random.Random(config.seed)
    cands = [sp_xy.vector_to_chain_map(v) for v in sp_xy.chain_vectors]
    for attempt in range(len(cands) + 16):
        if attempt < len(cands):
            f = cands[attempt]
        else:
            bound = 2 + attempt - len(cands)
            f = None
            for cm in cands:
                co = Fraction(rng.randint(-bound, bound))
                if co:
                    f = cm.scale(co) if f is None else f + cm.scale(co)
            if f is None:
                continue
        pair = _upgrade_to_iso(x, y, f)
        if pair is not None:
            return pair
    # deterministic: pairing through End(y) classes
    sp_yx = homotopy_hom(y, x, 0)
    end_y = ChainEndData(y)
    rad_rows = end_y.chain_algebra().radical_rows()
    for fv in sp_xy.chain_vectors:
        f = sp_xy.vector_to_chain_map(fv)
        for gv in sp_yx.chain_vectors:
            g = sp_yx.vector_to_chain_map(gv)
            u = g.then(f)  # y -> y
            coords = end_y._coords(u)
            vec = Matrix(1, end_y.chain_dim, [coords])
            if rad_rows.rows and rad_rows.vstack(vec).rank() == rad_rows.rank():
                continue
            if all(c == 0 for c in coords):
                continue
            pair = _upgrade_to_iso(x, y, f)
            if pair is not None:
                return pair
    return None


def _upgrade_to_iso(x: ProjComplex, y: ProjComplex, f: ChainMapC):
    """If f realizes to vertexwise invertible maps, build its chain inverse."""
    sums_x = {d: ProjSum(x.algebra, x.term(d)) for d in x.terms}
    sums_y = {d: ProjSum(y.algebra, y.term(d)) for d in y.terms}
    realized = f.realize(sums_x, sums_y)
    inv_entries = {}
    for d in x.terms:
        m = realized.get(d)
        if m is None:
            return None
        mats = {}
        for v in x.algebra.quiver.vertices:
            mi = m.mats[v].inverse()
            if mi is None:
                return None
            mats[v] = mi
        from .reps import ModuleMap

        inv_map = ModuleMap(sums_y[d].rep, sums_x[d].rep, mats, check=False)
        inv_entries[d] = extract_entry_map(sums_y[d], sums_x[d], inv_map)
    g = ChainMapC(y, x, inv_entries)
    if not g.is_chain_map():
        return None
    if f.then(g).is_identity_shape() and g.then(f).is_identity_shape():
        return f, g
    return None


def decompose_complex(c: ProjComplex, config: WorkbenchConfig = DEFAULT):
    """Indecomposable radical summands with multiplicities and a certificate.

    Returns (summands, f, g, hom_witness_ok) where summands is a list of
    (ProjComplex, multiplicity), f : D -> c and g : c -> D are chain maps
    with g then f the identity of D on the nose and f then g homotopic to
    the identity of c.
    """
    m, eq = minimize(c)
    leaves = []  # (summand, include into m, project from m)
    for comp in _support_components(m):
        sub, incl, proj = _component_complex(m, comp)
        for piece, inc2, prj2 in _split_component(sub, config):
            leaves.append((piece, inc2.then(incl), proj.then(prj2)))
    # group leaves by isomorphism
    groups = []
    for leaf in leaves:
        placed = False
        for group in groups:
            rep = group[0][0][0]
            pair = complexes_isomorphic(rep, leaf[0], config)
            if pair is not None:
                group.append((leaf, pair))
                placed = True
                break
        if not placed:
            ident = ChainMapC.identity(leaf[0])
            groups.append([(leaf, (ident, ident))])
    summands = [(g[0][0][0], len(g)) for g in groups]
    # assemble certificate maps through the minimized complex
    d_complex = None
    pieces = []
    for group in groups:
        for (piece, incl, proj), (rep_to_piece, piece_to_rep) in group:
            pieces.append((incl, proj, rep_to_piece, piece_to_rep, group[0][0][0]))
    for rep, mult in summands:
        for _ in range(mult):
            d_complex = rep if d_complex is None else d_complex.direct_sum(rep)
    if d_complex is None:
        d_complex = ProjComplex(c.algebra, {}, {})
    # block maps D <-> m
    f_to_c = None
    g_from_c = None
    offset = 0
    alg = c.algebra
    f_mats = {}
    g_mats = {}
    for d in d_complex.terms:
        f_mats[d] = emat_zero(len(d_complex.term(d)), len(m.term(d)))
        g_mats[d] = emat_zero(len(m.term(d)), len(d_complex.term(d)))
    row_offset = {d: 0 for d in d_complex.terms}
    for incl, proj, rep_to_piece, piece_to_rep, rep in pieces:
        into_m = rep_to_piece.then(incl)  # rep -> m
        from_m = proj.then(piece_to_rep)  # m -> rep
        for d, mat in into_m.mats.items():
            base = row_offset.get(d, 0)
            for i, row in enumerate(mat):
                for j, x in enumerate(row):
                    if x:
                        f_mats[d][base + i][j] = x
        for d, mat in from_m.mats.items():
            base = row_offset.get(d, 0)
            for i, row in enumerate(mat):
                for j, x in enumerate(row):
                    if x:
                        g_mats[d][i][base + j] = x
        for d in rep.terms:
            row_offset[d] = row_offset.get(d, 0) + len(rep.term(d))
    f_dm = ChainMapC(d_complex, m, f_mats)
    g_md = ChainMapC(m, d_complex, g_mats)
    f = f_dm.then(eq.i)
    g = eq.p.then(g_md)
    if not f.is_chain_map() or not g.is_chain_map():
        raise DecompositionError("certificate maps are not chain maps")
    if not f.then(g).is_identity_shape():
        raise DecompositionError("summand certificate failed: f then g != id")
    back = g.then(f)
    ident = ChainMapC.identity(c)
    witness_ok = HomotopySpace(c, c.shift(0)).is_null(ident - back)
    if not witness_ok:
        raise DecompositionError("summand certificate failed up to homotopy")
    return summands, f, g


def _split_component(sub: ProjComplex, config: WorkbenchConfig):
    """Split one support component into indecomposables via chain idempotents."""
    if sub.is_zero():
        return []
    data = ChainEndData(sub)
    alg = data.chain_algebra()
    if alg.dim == 0:
        raise DecompositionError("empty endomorphism algebra on a nonzero complex")
    idems = primitive_idempotents(alg, config)
    if len(idems) == 1:
        ident = ChainMapC.identity(sub)
        return [(sub, ident, ident)]
    out = []
    for coords in idems:
        strict = data.element(coords)
        if not (strict.then(strict) - strict).is_zero():
            raise DecompositionError("primitive idempotent is not strict")
        piece, incl, proj = split_strict_idempotent(sub, strict)
        out.append((piece, incl, proj))
    return out
