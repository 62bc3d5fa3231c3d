"""Modules over a basic algebra as quiver representations.

Conventions (used consistently everywhere):

* a representation assigns to each vertex a row-vector space and to each
  arrow ``a: u -> w`` a ``dim(u) x dim(w)`` matrix acting on the right;
* a path acts by the product of its arrow matrices in word order;
* module maps are per-vertex matrices, composed left to right, so ``f.then(g)``
  is "apply f, then g";
* the projective P(v) has basis the normal-form paths starting at v, and
  Hom(P(a), P(b)) is identified with the span of paths from b to a acting by
  front concatenation.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import BasicAlgebra
from .errors import DimensionMismatch, TiltbenchError
from .linalg import Matrix, row_space_basis, row_space_contains

ZERO = Fraction(0)
ONE = Fraction(1)


class Representation:
    def __init__(self, algebra: BasicAlgebra, dims: dict, mats: dict, check: bool = True):
        self.algebra = algebra
        q = algebra.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in q.vertices}
        self.mats = {}
        for a in q.arrows:
            m = mats.get(a.name)
            if m is None:
                m = Matrix.zero(self.dims[a.source], self.dims[a.target])
            if m.rows != self.dims[a.source] or m.cols != self.dims[a.target]:
                raise DimensionMismatch(f"arrow {a.name}: matrix shape {m.rows}x{m.cols}")
            self.mats[a.name] = m
        if check:
            self._check_relations()

    def _check_relations(self):
        for r in self.algebra.relations:
            acc = Matrix.zero(self.dims[r.source], self.dims[r.target])
            for c, p in r.terms:
                acc = acc + self.path_matrix(p).scale(c)
            if not acc.is_zero():
                raise TiltbenchError(f"relation violated: {r}")

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    def path_matrix(self, path) -> Matrix:
        q = self.algebra.quiver
        m = Matrix.identity(self.dims[path.source])
        for name in path.arrows:
            m = m * self.mats[name]
        return m

    def element_action(self, x: dict) -> Matrix:
        """Action matrix of an element supported on one sandwich e_a A e_b."""
        alg = self.algebra
        pairs = {(alg.source[k], alg.target[k]) for k in x}
        if len(pairs) != 1:
            raise TiltbenchError("element is not supported on a single sandwich")
        (a, b) = pairs.pop()
        acc = Matrix.zero(self.dims[a], self.dims[b])
        for k, c in x.items():
            acc = acc + self.path_matrix(alg.basis[k]).scale(c)
        return acc

    def direct_sum(self, other: "Representation") -> "Representation":
        dims = {v: self.dims[v] + other.dims[v] for v in self.dims}
        mats = {}
        for a in self.algebra.quiver.arrows:
            m1, m2 = self.mats[a.name], other.mats[a.name]
            block = [
                list(m1.data[i]) + [ZERO] * m2.cols for i in range(m1.rows)
            ] + [[ZERO] * m1.cols + list(m2.data[i]) for i in range(m2.rows)]
            mats[a.name] = Matrix(dims[a.source], dims[a.target], block)
        return Representation(self.algebra, dims, mats, check=False)

    def __repr__(self):
        return f"Representation(dims={self.dims})"


def zero_rep(a: BasicAlgebra) -> Representation:
    return Representation(a, {}, {}, check=False)


class ModuleMap:
    def __init__(self, source: Representation, target: Representation, mats: dict, check: bool = True):
        self.source = source
        self.target = target
        self.mats = {}
        for v in source.algebra.quiver.vertices:
            m = mats.get(v)
            if m is None:
                m = Matrix.zero(source.dims[v], target.dims[v])
            if m.rows != source.dims[v] or m.cols != target.dims[v]:
                raise DimensionMismatch(f"vertex {v}: map shape {m.rows}x{m.cols}")
            self.mats[v] = m
        if check:
            self._check_intertwines()

    def _check_intertwines(self):
        for a in self.source.algebra.quiver.arrows:
            lhs = self.source.mats[a.name] * self.mats[a.target]
            rhs = self.mats[a.source] * self.target.mats[a.name]
            if not (lhs == rhs):
                raise TiltbenchError(f"map does not intertwine arrow {a.name}")

    @classmethod
    def identity(cls, m: Representation) -> "ModuleMap":
        return cls(m, m, {v: Matrix.identity(m.dims[v]) for v in m.dims}, check=False)

    @classmethod
    def zero(cls, source, target) -> "ModuleMap":
        return cls(source, target, {}, check=False)

    def then(self, other: "ModuleMap") -> "ModuleMap":
        if self.target is not other.source and self.target.dims != other.source.dims:
            raise DimensionMismatch("composition: middle objects differ")
        return ModuleMap(
            self.source,
            other.target,
            {v: self.mats[v] * other.mats[v] for v in self.mats},
            check=False,
        )

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(
            self.source, self.target, {v: self.mats[v] + other.mats[v] for v in self.mats}, check=False
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: self.mats[v].scale(c) for v in self.mats}, check=False)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats.values())

    def is_identity(self) -> bool:
        return self.source.dims == self.target.dims and all(
            self.mats[v] == Matrix.identity(self.source.dims[v]) for v in self.mats
        )

    def is_vertexwise_invertible(self) -> bool:
        return self.source.dims == self.target.dims and all(
            self.mats[v].inverse() is not None for v in self.mats
        )

    def inverse(self) -> "ModuleMap":
        inv = {}
        for v, m in self.mats.items():
            mi = m.inverse()
            if mi is None:
                raise TiltbenchError("map is not invertible")
            inv[v] = mi
        return ModuleMap(self.target, self.source, inv, check=False)


# -- hom spaces ------------------------------------------------------------


def hom_space(m: Representation, n: Representation) -> list:
    """Basis of the space of module maps m -> n."""
    if m.algebra is not n.algebra and m.algebra.basis != n.algebra.basis:
        raise TiltbenchError("modules over different algebras")
    q = m.algebra.quiver
    verts = list(q.vertices)
    offsets = {}
    total = 0
    for v in verts:
        offsets[v] = total
        total += m.dims[v] * n.dims[v]
    if total == 0:
        return []

    rows = []
    for a in q.arrows:
        u, w = a.source, a.target
        mu, nw = m.dims[u], n.dims[w]
        # unknowns F_v[(i, j)]; equation M_a * F_w - F_u * N_a = 0 entrywise
        for i in range(mu):
            for j in range(nw):
                row = [ZERO] * total
                for k in range(m.dims[w]):
                    row[offsets[w] + k * n.dims[w] + j] += m.mats[a.name].data[i][k]
                for k in range(n.dims[u]):
                    row[offsets[u] + i * n.dims[u] + k] -= n.mats[a.name].data[k][j]
                rows.append(row)
    sys = Matrix(len(rows), total, rows) if rows else Matrix.zero(0, total)
    ker = sys.kernel_basis()
    out = []
    for c in range(ker.cols):
        mats = {}
        for v in verts:
            if m.dims[v] and n.dims[v]:
                block = [
                    [ker.data[offsets[v] + i * n.dims[v] + j][c] for j in range(n.dims[v])]
                    for i in range(m.dims[v])
                ]
                mats[v] = Matrix(m.dims[v], n.dims[v], block)
        out.append(ModuleMap(m, n, mats, check=False))
    return out


def map_coordinates(f: ModuleMap, basis: list) -> list:
    """Coordinates of f in a hom-space basis (raises if not in the span)."""
    verts = list(f.source.algebra.quiver.vertices)

    def flatten(g):
        out = []
        for v in verts:
            for row in g.mats[v].data:
                out.extend(row)
        return out

    mat = Matrix.from_rows([flatten(b) for b in basis]) if basis else Matrix.zero(0, len(flatten(f)))
    target = Matrix.from_rows([flatten(f)])
    sol = mat.transpose().solve(target.transpose())
    if sol is None:
        raise TiltbenchError("map not in span of basis")
    return [sol.data[i][0] for i in range(sol.rows)]


# -- standard modules --------------------------------------------------------


def projective(a: BasicAlgebra, v) -> Representation:
    """Paths starting at v; arrows act by appending."""
    v = str(v)
    q = a.quiver
    layout = {w: a.paths_between(v, w) for w in q.vertices}
    dims = {w: len(layout[w]) for w in q.vertices}
    mats = {}
    for ar in q.arrows:
        rows = []
        src_idx = layout[ar.source]
        tgt_pos = {k: c for c, k in enumerate(layout[ar.target])}
        ar_el = {a.index[p]: ONE for p in [q_path(a, ar)]}
        for k in src_idx:
            prod = a.mul(a.basis_el(k), ar_el)
            row = [ZERO] * dims[ar.target]
            for kk, c in prod.items():
                row[tgt_pos[kk]] = c
            rows.append(row)
        mats[ar.name] = Matrix(dims[ar.source], dims[ar.target], rows)
    return Representation(a, dims, mats, check=False)


def q_path(a: BasicAlgebra, arrow):
    from .quiver import Path

    return Path(arrow.source, (arrow.name,))


def injective(a: BasicAlgebra, v) -> Representation:
    """Linear dual of the paths ending at v."""
    v = str(v)
    q = a.quiver
    layout = {w: a.paths_between(w, v) for w in q.vertices}
    dims = {w: len(layout[w]) for w in q.vertices}
    mats = {}
    for ar in q.arrows:
        src_idx = layout[ar.source]  # dual basis indexed by paths source -> v
        tgt_idx = layout[ar.target]
        ar_el = {a.index[q_path(a, ar)]: ONE}
        rows = []
        for p in src_idx:
            row = [ZERO] * dims[ar.target]
            for c_pos, r in enumerate(tgt_idx):
                prod = a.mul(ar_el, a.basis_el(r))  # arrow * (path target->v)
                row[c_pos] = prod.get(p, ZERO)
            rows.append(row)
        mats[ar.name] = Matrix(dims[ar.source], dims[ar.target], rows)
    return Representation(a, dims, mats, check=False)


def simple(a: BasicAlgebra, v) -> Representation:
    return Representation(a, {str(v): 1}, {}, check=False)


def regular_module(a: BasicAlgebra) -> Representation:
    out = zero_rep(a)
    for v in a.quiver.vertices:
        out = out.direct_sum(projective(a, v))
    return out


# -- submodules and quotients -------------------------------------------------


def coords_in_rows(vectors: Matrix, basis: Matrix) -> Matrix:
    """X with X * basis == vectors; raises if some vector is outside."""
    sol = basis.transpose().solve(vectors.transpose())
    if sol is None:
        raise TiltbenchError("vector not in row space")
    return sol.transpose()


def close_under_arrows(m: Representation, spaces: dict) -> dict:
    """Smallest arrow-stable row spaces containing the given ones."""
    cur = {v: row_space_basis(spaces.get(v, Matrix.zero(0, m.dims[v]))) for v in m.dims}
    changed = True
    while changed:
        changed = False
        for a in m.algebra.quiver.arrows:
            img = cur[a.source] * m.mats[a.name]
            for i in range(img.rows):
                if not row_space_contains(cur[a.target], img.row(i)):
                    cur[a.target] = row_space_basis(cur[a.target].vstack(img.submatrix([i], range(img.cols))))
                    changed = True
    return cur


def is_arrow_stable(m: Representation, spaces: dict) -> bool:
    for a in m.algebra.quiver.arrows:
        img = spaces[a.source] * m.mats[a.name]
        for i in range(img.rows):
            if not row_space_contains(spaces[a.target], img.row(i)):
                return False
    return True


def sub_representation(m: Representation, spaces: dict):
    """(submodule, inclusion) from arrow-stable row spaces."""
    bases = {v: row_space_basis(spaces.get(v, Matrix.zero(0, m.dims[v]))) for v in m.dims}
    if not is_arrow_stable(m, bases):
        raise TiltbenchError("spaces are not arrow-stable")
    dims = {v: bases[v].rows for v in m.dims}
    mats = {}
    for a in m.algebra.quiver.arrows:
        img = bases[a.source] * m.mats[a.name]
        mats[a.name] = coords_in_rows(img, bases[a.target]) if dims[a.target] else Matrix.zero(dims[a.source], 0)
    sub = Representation(m.algebra, dims, mats, check=False)
    incl = ModuleMap(sub, m, {v: bases[v] for v in m.dims}, check=False)
    return sub, incl


def quotient_representation(m: Representation, spaces: dict):
    """(quotient, projection) by arrow-stable row spaces."""
    bases = {v: row_space_basis(spaces.get(v, Matrix.zero(0, m.dims[v]))) for v in m.dims}
    if not is_arrow_stable(m, bases):
        raise TiltbenchError("spaces are not arrow-stable")
    red = {}
    free = {}
    for v in m.dims:
        r, piv = bases[v].rref()
        red[v] = (r, piv)
        free[v] = [j for j in range(m.dims[v]) if j not in piv]

    def project_vec(v, vec):
        r, piv = red[v]
        vec = list(vec)
        for i, p in enumerate(piv):
            c = vec[p]
            if c != 0:
                for j in range(m.dims[v]):
                    vec[j] -= c * r.data[i][j]
        return [vec[j] for j in free[v]]

    dims = {v: len(free[v]) for v in m.dims}
    proj_mats = {}
    for v in m.dims:
        rows = []
        for i in range(m.dims[v]):
            e = [ZERO] * m.dims[v]
            e[i] = ONE
            rows.append(project_vec(v, e))
        proj_mats[v] = Matrix(m.dims[v], dims[v], rows)
    mats = {}
    for a in m.algebra.quiver.arrows:
        rows = []
        for j in free[a.source]:
            e = [ZERO] * m.dims[a.source]
            e[j] = ONE
            img = Matrix(1, m.dims[a.source], [e]) * m.mats[a.name]
            rows.append(project_vec(a.target, img.row(0)))
        mats[a.name] = Matrix(dims[a.source], dims[a.target], rows)
    quot = Representation(m.algebra, dims, mats, check=False)
    proj = ModuleMap(m, quot, proj_mats, check=False)
    return quot, proj


def radical_spaces(m: Representation) -> dict:
    out = {v: Matrix.zero(0, m.dims[v]) for v in m.dims}
    for a in m.algebra.quiver.arrows:
        out[a.target] = row_space_basis(out[a.target].vstack(m.mats[a.name]))
    return out


def socle_spaces(m: Representation) -> dict:
    out = {}
    for v in m.dims:
        arrows = [a for a in m.algebra.quiver.arrows if a.source == v]
        if not arrows:
            out[v] = Matrix.identity(m.dims[v])
            continue
        stacked = None
        for a in arrows:
            stacked = m.mats[a.name] if stacked is None else stacked.hstack(m.mats[a.name])
        out[v] = stacked.left_kernel_basis()
    return out


def top(m: Representation):
    return quotient_representation(m, radical_spaces(m))


def socle(m: Representation):
    return sub_representation(m, socle_spaces(m))


def radical_submodule(m: Representation):
    return sub_representation(m, radical_spaces(m))


def radical_layers(m: Representation) -> list:
    """Loewy layers top-down, each as {vertex: multiplicity of its simple}."""
    layers = []
    cur = {v: Matrix.identity(m.dims[v]) for v in m.dims}
    while any(cur[v].rows for v in cur):
        nxt = {v: Matrix.zero(0, m.dims[v]) for v in m.dims}
        for a in m.algebra.quiver.arrows:
            img = cur[a.source] * m.mats[a.name]
            nxt[a.target] = row_space_basis(nxt[a.target].vstack(img))
        layer = {v: cur[v].rows - nxt[v].rows for v in cur}
        layers.append({v: d for v, d in layer.items() if d})
        cur = nxt
    return layers


def kernel_of(f: ModuleMap):
    spaces = {v: f.mats[v].left_kernel_basis() for v in f.source.dims}
    return sub_representation(f.source, spaces)


def image_of(f: ModuleMap):
    spaces = {v: row_space_basis(f.mats[v]) for v in f.source.dims}
    return sub_representation(f.target, spaces)


def cokernel_of(f: ModuleMap):
    spaces = {v: row_space_basis(f.mats[v]) for v in f.source.dims}
    return quotient_representation(f.target, spaces)


# -- labeled projective sums and the symbolic hom encoding -------------------


class ProjSum:
    """Direct sum of labeled projectives with explicit coordinate layout.

    Vertex space at w is spanned by pairs (summand i with label a_i, basis
    path a_i -> w), in summand-major order.
    """

    def __init__(self, algebra: BasicAlgebra, labels):
        self.algebra = algebra
        self.labels = [str(x) for x in labels]
        q = algebra.quiver
        self.layout = {w: [] for w in q.vertices}
        for i, lab in enumerate(self.labels):
            if lab not in q.vertex_index:
                raise TiltbenchError(f"unknown vertex label {lab!r}")
            for w in q.vertices:
                for k in algebra.paths_between(lab, w):
                    self.layout[w].append((i, k))
        self.pos = {w: {pair: c for c, pair in enumerate(self.layout[w])} for w in q.vertices}
        rep = None
        for lab in self.labels:
            p = projective(algebra, lab)
            rep = p if rep is None else rep.direct_sum(p)
        self.rep = rep if rep is not None else zero_rep(algebra)
        # direct_sum concatenates summand coordinates in order, matching layout

    def generator_position(self, i: int):
        lab = self.labels[i]
        k = self.algebra.idempotent_index[lab]
        return lab, self.pos[lab][(i, k)]


def realize_entry_map(src: ProjSum, tgt: ProjSum, entries) -> ModuleMap:
    """Module map from a matrix of hom entries.

    ``entries[i][j]`` is an element of the sandwich e_{b_j} A e_{a_i} (paths
    from the j-th target label to the i-th source label), acting on P(a_i)
    by front concatenation.
    """
    alg = src.algebra
    mats = {}
    for w in alg.quiver.vertices:
        rows = []
        for (i, k) in src.layout[w]:
            row = [ZERO] * len(tgt.layout[w])
            for j, lab_b in enumerate(tgt.labels):
                x = entries[i][j]
                if not x:
                    continue
                prod = alg.mul(x, alg.basis_el(k))  # paths b_j -> w
                for kk, c in prod.items():
                    row[tgt.pos[w][(j, kk)]] += c
            rows.append(row)
        mats[w] = Matrix(len(src.layout[w]), len(tgt.layout[w]), rows)
    return ModuleMap(src.rep, tgt.rep, mats, check=False)


def extract_entry_map(src: ProjSum, tgt: ProjSum, f: ModuleMap):
    """Inverse of realize_entry_map: read hom entries off generator images."""
    alg = src.algebra
    entries = []
    for i in range(len(src.labels)):
        lab_a, pos = src.generator_position(i)
        row_img = f.mats[lab_a].row(pos) if f.mats[lab_a].rows else ()
        row_entries = []
        for j in range(len(tgt.labels)):
            x = {}
            for c_pos, (jj, kk) in enumerate(tgt.layout[lab_a]):
                if jj == j and row_img[c_pos] != 0:
                    x[kk] = row_img[c_pos]
            row_entries.append(x)
        entries.append(row_entries)
    return entries


def nu_injective_sum(algebra: BasicAlgebra, labels):
    """Direct sum of injectives with the same layout discipline as ProjSum."""
    rep = None
    for lab in labels:
        i = injective(algebra, lab)
        rep = i if rep is None else rep.direct_sum(i)
    return rep if rep is not None else zero_rep(algebra)


def nu_entry_map(algebra: BasicAlgebra, src_labels, tgt_labels, entries) -> ModuleMap:
    """Nakayama image of a map between labeled projective sums.

    The entry x (paths b -> a) becomes the dual of right concatenation by x,
    an injective-module map I(a) -> I(b).
    """
    q = algebra.quiver
    src_labels = [str(x) for x in src_labels]
    tgt_labels = [str(x) for x in tgt_labels]
    src_layout = {w: [] for w in q.vertices}
    for i, lab in enumerate(src_labels):
        for w in q.vertices:
            for k in algebra.paths_between(w, lab):
                src_layout[w].append((i, k))
    tgt_layout = {w: [] for w in q.vertices}
    for j, lab in enumerate(tgt_labels):
        for w in q.vertices:
            for k in algebra.paths_between(w, lab):
                tgt_layout[w].append((j, k))
    tgt_pos = {w: {pair: c for c, pair in enumerate(tgt_layout[w])} for w in q.vertices}
    mats = {}
    for w in q.vertices:
        rows = []
        for (i, k) in src_layout[w]:  # dual basis of paths w -> a_i
            row = [ZERO] * len(tgt_layout[w])
            for j in range(len(tgt_labels)):
                x = entries[i][j]
                if not x:
                    continue
                # column (j, r) with r a path w -> b_j: coefficient of k in r*x
                for (jj, r) in tgt_layout[w]:
                    if jj != j:
                        continue
                    prod = algebra.mul(algebra.basis_el(r), x)
                    c = prod.get(k, ZERO)
                    if c:
                        row[tgt_pos[w][(jj, r)]] += c
            rows.append(row)
        mats[w] = Matrix(len(src_layout[w]), len(tgt_layout[w]), rows)
    src_rep = nu_injective_sum(algebra, src_labels)
    tgt_rep = nu_injective_sum(algebra, tgt_labels)
    return ModuleMap(src_rep, tgt_rep, mats, check=False)
