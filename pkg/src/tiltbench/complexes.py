"""Bounded complexes of projectives in label form.

A complex stores, per degree, an ordered list of vertex labels (the direct
sum of the corresponding projectives) and, per consecutive pair of degrees,
a matrix of hom entries.  The entry in row i (source summand P(a_i)) and
column j (target summand P(b_j)) is an algebra element supported on paths
b_j -> a_i, realized as a module map by front concatenation.

Shift convention: (X[n])^i = X^{n+i}, so P[1] lives in degree -1; shifted
differentials pick up the sign (-1)^n.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import BasicAlgebra, el_add, el_is_zero, el_scale, el_sub
from .errors import TiltbenchError
from .linalg import Matrix, row_space_basis
from .reps import (
    ModuleMap,
    ProjSum,
    coords_in_rows,
    kernel_of,
    quotient_representation,
    realize_entry_map,
)

ZERO = Fraction(0)
ONE = Fraction(1)


# -- entry matrices -----------------------------------------------------------


def emat_zero(r, c):
    return [[{} for _ in range(c)] for _ in range(r)]


def emat_identity(alg: BasicAlgebra, labels):
    n = len(labels)
    out = emat_zero(n, n)
    for i, lab in enumerate(labels):
        out[i][i] = {alg.idempotent_index[str(lab)]: ONE}
    return out


def emat_add(a, b):
    return [[el_add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def emat_sub(a, b):
    return [[el_sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def emat_scale(c, a):
    return [[el_scale(c, x) for x in row] for row in a]


def emat_compose(alg: BasicAlgebra, f, g):
    """Entry matrix of "f then g" (f: X->Y rows x cols, g: Y->Z)."""
    rows = len(f)
    mid = len(g)
    cols = len(g[0]) if mid else 0
    if rows and len(f[0]) != mid:
        raise TiltbenchError("entry matrices do not compose")
    out = emat_zero(rows, cols)
    for i in range(rows):
        for j in range(mid):
            fij = f[i][j]
            if not fij:
                continue
            for k in range(cols):
                gjk = g[j][k]
                if gjk:
                    out[i][k] = el_add(out[i][k], alg.mul(gjk, fij))
    return out


def emat_is_zero(a):
    return all(el_is_zero(x) for row in a for x in row)


# -- complexes ---------------------------------------------------------------


class ProjComplex:
    def __init__(self, algebra: BasicAlgebra, terms: dict, diffs: dict):
        self.algebra = algebra
        self.terms = {}
        for d, labels in terms.items():
            labels = [str(x) for x in labels]
            for lab in labels:
                if lab not in algebra.quiver.vertex_index:
                    raise TiltbenchError(f"unknown vertex label {lab!r}")
            if labels:
                self.terms[int(d)] = labels
        self.diffs = {}
        for d, mat in diffs.items():
            d = int(d)
            src = self.terms.get(d, [])
            tgt = self.terms.get(d + 1, [])
            if not src or not tgt:
                if mat and not emat_is_zero(mat):
                    raise TiltbenchError(f"differential at degree {d} has no terms to connect")
                continue
            if len(mat) != len(src) or any(len(row) != len(tgt) for row in mat):
                raise TiltbenchError(f"differential at degree {d} has wrong shape")
            clean = emat_zero(len(src), len(tgt))
            for i in range(len(src)):
                for j in range(len(tgt)):
                    x = {k: Fraction(v) for k, v in mat[i][j].items() if Fraction(v) != 0}
                    for k in x:
                        if (
                            algebra.source[k] != tgt[j]
                            or algebra.target[k] != src[i]
                        ):
                            raise TiltbenchError(
                                f"entry ({i},{j}) at degree {d} not supported on paths "
                                f"{tgt[j]} -> {src[i]}"
                            )
                    clean[i][j] = x
            if not emat_is_zero(clean):
                self.diffs[d] = clean

    @property
    def lo(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def hi(self) -> int:
        return max(self.terms) if self.terms else 0

    def term(self, d: int):
        return self.terms.get(d, [])

    def diff(self, d: int):
        if d in self.diffs:
            return self.diffs[d]
        return emat_zero(len(self.term(d)), len(self.term(d + 1)))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return sorted(self.terms)

    def d_squared_is_zero(self) -> bool:
        for d in self.degrees():
            if self.term(d + 1) and self.term(d + 2):
                if not emat_is_zero(emat_compose(self.algebra, self.diff(d), self.diff(d + 1))):
                    return False
        return True

    def is_radical(self) -> bool:
        for d, mat in self.diffs.items():
            for row in mat:
                for x in row:
                    for k in x:
                        if len(self.algebra.basis[k]) == 0:
                            return False
        return True

    def validate(self) -> dict:
        return {"d_squared_zero": self.d_squared_is_zero(), "is_radical": self.is_radical()}

    def shift(self, n: int) -> "ProjComplex":
        terms = {d - n: labels for d, labels in self.terms.items()}
        sign = ONE if n % 2 == 0 else -ONE
        diffs = {d - n: emat_scale(sign, mat) for d, mat in self.diffs.items()}
        return ProjComplex(self.algebra, terms, diffs)

    def direct_sum(self, other: "ProjComplex") -> "ProjComplex":
        terms = {}
        for d in set(self.terms) | set(other.terms):
            terms[d] = self.term(d) + other.term(d)
        diffs = {}
        for d in set(self.diffs) | set(other.diffs):
            s1, s2 = self.term(d), other.term(d)
            t1, t2 = self.term(d + 1), other.term(d + 1)
            mat = emat_zero(len(s1) + len(s2), len(t1) + len(t2))
            d1, d2 = self.diff(d), other.diff(d)
            for i in range(len(s1)):
                for j in range(len(t1)):
                    mat[i][j] = d1[i][j]
            for i in range(len(s2)):
                for j in range(len(t2)):
                    mat[len(s1) + i][len(t1) + j] = d2[i][j]
            diffs[d] = mat
        return ProjComplex(self.algebra, terms, diffs)

    def label_multiset(self, d: int) -> dict:
        out = {}
        for lab in self.term(d):
            out[lab] = out.get(lab, 0) + 1
        return out

    def realize(self):
        """(per-degree ProjSum, per-degree differential ModuleMap)."""
        sums = {d: ProjSum(self.algebra, self.term(d)) for d in self.terms}
        dmaps = {}
        for d in self.diffs:
            dmaps[d] = realize_entry_map(sums[d], sums[d + 1], self.diffs[d])
        return sums, dmaps

    def width(self) -> int:
        return self.hi - self.lo if self.terms else 0

    def __repr__(self):
        return f"ProjComplex({ {d: self.term(d) for d in self.degrees()} })"


def stalk_complex(algebra: BasicAlgebra, labels, degree: int = 0) -> ProjComplex:
    return ProjComplex(algebra, {degree: list(labels)}, {})


def regular_stalk(algebra: BasicAlgebra, degree: int = 0) -> ProjComplex:
    return stalk_complex(algebra, list(algebra.quiver.vertices), degree)


class ChainMapC:
    """Chain map between label-form complexes, stored degreewise as entry
    matrices (rows: source summands, cols: target summands)."""

    def __init__(self, source: ProjComplex, target: ProjComplex, mats: dict):
        self.source = source
        self.target = target
        self.mats = {}
        for d, mat in mats.items():
            d = int(d)
            src, tgt = source.term(d), target.term(d)
            if len(mat) != len(src) or (mat and any(len(r) != len(tgt) for r in mat)):
                raise TiltbenchError(f"chain map component at degree {d} has wrong shape")
            if not emat_is_zero(mat):
                self.mats[d] = mat

    def component(self, d: int):
        if d in self.mats:
            return self.mats[d]
        return emat_zero(len(self.source.term(d)), len(self.target.term(d)))

    @classmethod
    def identity(cls, c: ProjComplex) -> "ChainMapC":
        return cls(c, c, {d: emat_identity(c.algebra, c.term(d)) for d in c.terms})

    @classmethod
    def zero(cls, source, target) -> "ChainMapC":
        return cls(source, target, {})

    def then(self, other: "ChainMapC") -> "ChainMapC":
        alg = self.source.algebra
        mats = {}
        for d in set(self.mats) | set(other.mats):
            if self.source.term(d) and other.target.term(d) and self.target.term(d):
                mats[d] = emat_compose(alg, self.component(d), other.component(d))
        return ChainMapC(self.source, other.target, mats)

    def __add__(self, other):
        mats = {}
        for d in set(self.mats) | set(other.mats):
            mats[d] = emat_add(self.component(d), other.component(d))
        return ChainMapC(self.source, self.target, mats)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return ChainMapC(self.source, self.target, {d: emat_scale(c, m) for d, m in self.mats.items()})

    def is_zero(self) -> bool:
        return all(emat_is_zero(m) for m in self.mats.values())

    def is_chain_map(self) -> bool:
        alg = self.source.algebra
        for d in set(self.source.terms) | set(self.target.terms):
            lhs = emat_compose(alg, self.component(d), self.target.diff(d))
            rhs = emat_compose(alg, self.source.diff(d), self.component(d + 1))
            la = lhs if lhs else emat_zero(len(self.source.term(d)), len(self.target.term(d + 1)))
            if not emat_is_zero(emat_sub(la, rhs)):
                return False
        return True

    def is_identity_shape(self) -> bool:
        if self.source.terms.keys() != self.target.terms.keys():
            return False
        ident = ChainMapC.identity(self.source)
        for d in set(self.mats) | set(ident.mats):
            if self.source.term(d) != self.target.term(d):
                return False
            if not emat_is_zero(emat_sub(self.component(d), ident.component(d))):
                return False
        return True

    def realize(self, src_sums=None, tgt_sums=None):
        """Per-degree module maps (only degrees where both sides have terms)."""
        src_sums = src_sums or {d: ProjSum(self.source.algebra, self.source.term(d)) for d in self.source.terms}
        tgt_sums = tgt_sums or {d: ProjSum(self.target.algebra, self.target.term(d)) for d in self.target.terms}
        out = {}
        for d in self.source.terms:
            if d in self.target.terms:
                out[d] = realize_entry_map(src_sums[d], tgt_sums[d], self.component(d))
        return out


# -- homotopy hom spaces ------------------------------------------------------


class HomotopySpace:
    """Hom in the homotopy category between two complexes (at a fixed shift),
    with chain-level data retained.

    chain_basis: basis of honest chain maps X -> Y[n]
    null_rows:   coordinates (rows) of the null-homotopic subspace
    class_reps:  subset of chain basis descending to a basis of the quotient
    """

    def __init__(self, x: ProjComplex, y_shifted: ProjComplex):
        self.x = x
        self.y = y_shifted
        alg = x.algebra
        self.alg = alg
        self._coords = []  # (degree, i, j, basis path index)
        pos = {}
        for d in sorted(set(x.terms) & set(y_shifted.terms)):
            src, tgt = x.term(d), y_shifted.term(d)
            for i in range(len(src)):
                for j in range(len(tgt)):
                    for k in alg.paths_between(tgt[j], src[i]):
                        pos[(d, i, j, k)] = len(self._coords)
                        self._coords.append((d, i, j, k))
        n_unk = len(self._coords)

        rows = []
        for d in sorted(set(x.terms)):
            # chain square between degrees d and d+1
            src_d, src_d1 = x.term(d), x.term(d + 1)
            tgt_d, tgt_d1 = y_shifted.term(d), y_shifted.term(d + 1)
            if not src_d or not tgt_d1:
                continue
            dx = x.diff(d)
            dy = y_shifted.diff(d)
            # (u^d then dY) - (dX then u^{d+1}) = 0 at entry (i, m); one scalar
            # equation per basis path of the sandwich tgt_d1[m] -> src_d[i]
            for i in range(len(src_d)):
                for m in range(len(tgt_d1)):
                    acc = {}  # basis path -> {unknown position: coefficient}
                    for j in range(len(tgt_d)):
                        for k in alg.paths_between(tgt_d[j], src_d[i]):
                            p = pos[(d, i, j, k)]
                            for kk, c in alg.mul(dy[j][m], {k: ONE}).items():
                                row = acc.setdefault(kk, {})
                                row[p] = row.get(p, ZERO) + c
                    for jp in range(len(src_d1)):
                        for k in alg.paths_between(tgt_d1[m], src_d1[jp]):
                            p = pos[(d + 1, jp, m, k)]
                            for kk, c in alg.mul({k: ONE}, dx[i][jp]).items():
                                row = acc.setdefault(kk, {})
                                row[p] = row.get(p, ZERO) - c
                    for kk, terms in acc.items():
                        row = [ZERO] * n_unk
                        for cpos, c in terms.items():
                            row[cpos] += c
                        rows.append(row)
        sys = Matrix(len(rows), n_unk, rows) if rows else Matrix.zero(0, n_unk)
        ker = sys.kernel_basis()
        self.chain_vectors = [ker.column(c) for c in range(ker.cols)]

        # null-homotopic image: h has components X^d -> Y^{d-1}
        h_coords = []
        hpos = {}
        for d in sorted(set(x.terms)):
            if not y_shifted.term(d - 1):
                continue
            src, tgt = x.term(d), y_shifted.term(d - 1)
            for i in range(len(src)):
                for j in range(len(tgt)):
                    for k in alg.paths_between(tgt[j], src[i]):
                        hpos[(d, i, j, k)] = len(h_coords)
                        h_coords.append((d, i, j, k))
        null_rows = []
        for hc in range(len(h_coords)):
            d, i, j, k = h_coords[hc]
            # u = d_X h + h d_Y: this h coordinate contributes to degrees d-1 and d
            vec = [ZERO] * n_unk
            # term (h^d then dY^{d-1}): component at degree d, entries (i, m)
            dy = y_shifted.diff(d - 1)
            for m in range(len(y_shifted.term(d))):
                prod = alg.mul(dy[j][m], {k: ONE})
                for kk, c in prod.items():
                    p = pos.get((d, i, m, kk))
                    if p is not None:
                        vec[p] += c
            # term (dX^{d-1} then h^d): component at degree d-1, entries (ip, j)
            dx = x.diff(d - 1)
            for ip in range(len(x.term(d - 1))):
                prod = alg.mul({k: ONE}, dx[ip][i])
                for kk, c in prod.items():
                    p = pos.get((d - 1, ip, j, kk))
                    if p is not None:
                        vec[p] += c
            null_rows.append(vec)
        nm = Matrix(len(null_rows), n_unk, null_rows) if null_rows else Matrix.zero(0, n_unk)
        self.null_rows = row_space_basis(nm)
        self._pos = pos

        chain_m = (
            Matrix.from_rows([list(v) for v in self.chain_vectors])
            if self.chain_vectors
            else Matrix.zero(0, n_unk)
        )
        self.dim = chain_m.vstack(self.null_rows).rank() - self.null_rows.rank()
        # class representatives: greedy subset of chain basis independent mod null
        reps = []
        cur = self.null_rows
        for v in self.chain_vectors:
            cand = cur.vstack(Matrix(1, n_unk, [list(v)]))
            if cand.rank() > cur.rank():
                reps.append(v)
                cur = row_space_basis(cand)
        self.class_vectors = reps
        self._reduce_basis = None

    def vector_to_chain_map(self, vec) -> ChainMapC:
        mats = {}
        for p, (d, i, j, k) in enumerate(self._coords):
            c = vec[p]
            if c == 0:
                continue
            if d not in mats:
                mats[d] = emat_zero(len(self.x.term(d)), len(self.y.term(d)))
            mats[d][i][j] = el_add(mats[d][i][j], {k: c})
        return ChainMapC(self.x, self.y, mats)

    def chain_map_to_vector(self, cm: ChainMapC):
        vec = [ZERO] * len(self._coords)
        for d, mat in cm.mats.items():
            for i, row in enumerate(mat):
                for j, x in enumerate(row):
                    for k, c in x.items():
                        p = self._pos.get((d, i, j, k))
                        if p is None:
                            if c != 0:
                                raise TiltbenchError("chain map outside coordinate support")
                            continue
                        vec[p] += c
        return vec

    def class_reps(self):
        return [self.vector_to_chain_map(v) for v in self.class_vectors]

    def reduce(self, cm: ChainMapC):
        """Coordinates of the homotopy class of cm in the class basis."""
        vec = self.chain_map_to_vector(cm)
        n = len(self._coords)
        rows = [list(v) for v in self.class_vectors] + [list(self.null_rows.row(i)) for i in range(self.null_rows.rows)]
        mat = Matrix(len(rows), n, rows) if rows else Matrix.zero(0, n)
        sol = mat.transpose().solve(Matrix(n, 1, [[v] for v in vec]))
        if sol is None:
            raise TiltbenchError("chain map is not in the hom space")
        return [sol.data[i][0] for i in range(len(self.class_vectors))]

    def is_null(self, cm: ChainMapC) -> bool:
        return all(c == 0 for c in self.reduce(cm))


def homotopy_hom(x: ProjComplex, y: ProjComplex, n: int = 0) -> HomotopySpace:
    """Hom of homotopy classes x -> y[n]."""
    return HomotopySpace(x, y.shift(n))


# -- minimization -------------------------------------------------------------


def _find_unit_entry(c: ProjComplex):
    for d in sorted(c.diffs):
        mat = c.diffs[d]
        src, tgt = c.term(d), c.term(d + 1)
        for i in range(len(src)):
            for j in range(len(tgt)):
                if src[i] != tgt[j]:
                    continue
                x = mat[i][j]
                k0 = c.algebra.idempotent_index[src[i]]
                if x.get(k0, 0) != 0:
                    return d, i, j
    return None


def _cancel(c: ProjComplex, d: int, i: int, j: int):
    """One Gaussian cancellation step; returns (new complex, p, i_map)."""
    alg = c.algebra
    src, tgt = c.term(d), c.term(d + 1)
    a_lab = src[i]
    u = c.diff(d)[i][j]
    u_inv = alg.corner_inverse(u, a_lab)
    keep_src = [r for r in range(len(src)) if r != i]
    keep_tgt = [s for s in range(len(tgt)) if s != j]

    terms = {}
    for dd, labels in c.terms.items():
        if dd == d:
            labels = [src[r] for r in keep_src]
        elif dd == d + 1:
            labels = [tgt[s] for s in keep_tgt]
        if labels:
            terms[dd] = list(labels)
    diffs = {}
    for dd in c.diffs:
        mat = c.diffs[dd]
        if dd == d:
            new = emat_zero(len(keep_src), len(keep_tgt))
            for ri, r in enumerate(keep_src):
                b_r = mat[r][j]
                for si, s in enumerate(keep_tgt):
                    corr = alg.mul(mat[i][s], alg.mul(u_inv, b_r))
                    new[ri][si] = el_sub(mat[r][s], corr)
        elif dd == d - 1:
            new = [[mat[r][s] for s in keep_src] for r in range(len(c.term(dd)))]
        elif dd == d + 1:
            new = [[mat[s][t] for t in range(len(c.term(dd + 1)))] for s in keep_tgt]
        else:
            new = mat
        diffs[dd] = new
    nc = ProjComplex(alg, terms, diffs)

    # p: c -> nc is the projection, with a correction out of the cancelled
    # target summand; i: nc -> c is the inclusion corrected into the source.
    p_mats = {}
    i_mats = {}
    for dd, labels in c.terms.items():
        if dd == d:
            p_m = emat_zero(len(src), len(keep_src))
            for ri, r in enumerate(keep_src):
                p_m[r][ri] = {alg.idempotent_index[src[r]]: ONE}
            p_mats[dd] = p_m
            i_m = emat_zero(len(keep_src), len(src))
            for ri, r in enumerate(keep_src):
                i_m[ri][r] = {alg.idempotent_index[src[r]]: ONE}
                i_m[ri][i] = el_scale(-1, alg.mul(u_inv, c.diff(d)[r][j]))
            i_mats[dd] = i_m
        elif dd == d + 1:
            p_m = emat_zero(len(tgt), len(keep_tgt))
            for si, s in enumerate(keep_tgt):
                p_m[s][si] = {alg.idempotent_index[tgt[s]]: ONE}
                p_m[j][si] = el_scale(-1, alg.mul(c.diff(d)[i][s], u_inv))
            p_mats[dd] = p_m
            i_m = emat_zero(len(keep_tgt), len(tgt))
            for si, s in enumerate(keep_tgt):
                i_m[si][s] = {alg.idempotent_index[tgt[s]]: ONE}
            i_mats[dd] = i_m
        else:
            if dd in nc.terms:
                p_mats[dd] = emat_identity(alg, labels)
                i_mats[dd] = emat_identity(alg, labels)
    return nc, ChainMapC(c, nc, p_mats), ChainMapC(nc, c, i_mats)


class HomotopyEquivalence:
    """A verified pair c <-> m with p then i homotopic to the identity of c
    and i then p equal to the identity of m on the nose."""

    def __init__(self, c: ProjComplex, m: ProjComplex, p: ChainMapC, i: ChainMapC):
        self.source = c
        self.reduced = m
        self.p = p
        self.i = i

    def verify(self) -> bool:
        if not (self.p.is_chain_map() and self.i.is_chain_map()):
            return False
        if not self.i.then(self.p).is_identity_shape():
            return False
        back = self.p.then(self.i)
        ident = ChainMapC.identity(self.source)
        return HomotopySpace(self.source, self.source).is_null(ident - back)


def minimize(c: ProjComplex):
    """(radical complex, HomotopyEquivalence).  Deterministic elimination:
    scan degrees ascending, rows then columns, cancel, repeat."""
    cur = c
    p_total = ChainMapC.identity(c)
    i_total = ChainMapC.identity(c)
    first = True
    while True:
        found = _find_unit_entry(cur)
        if found is None:
            break
        d, i, j = found
        cur, p_step, i_step = _cancel(cur, d, i, j)
        if first:
            p_total, i_total, first = p_step, i_step, False
        else:
            p_total = p_total.then(p_step)
            i_total = i_step.then(i_total)
    if first:
        p_total = ChainMapC.identity(c)
        i_total = ChainMapC.identity(c)
    eq = HomotopyEquivalence(c, cur, p_total, i_total)
    return cur, eq


# -- homology ----------------------------------------------------------------


def homology(c: ProjComplex, i: int):
    """H^i as a Representation (kernel of d^i modulo image of d^{i-1})."""
    sums, dmaps = c.realize()
    if i not in sums:
        from .reps import zero_rep

        return zero_rep(c.algebra)
    term = sums[i].rep
    if i in dmaps:
        ker_rep, incl = kernel_of(dmaps[i])
    else:
        ker_rep, incl = kernel_of(ModuleMap.zero(term, term))
    if (i - 1) in dmaps:
        prev = dmaps[i - 1]
        img_rows = {v: row_space_basis(prev.mats[v]) for v in term.dims}
    else:
        img_rows = {v: Matrix.zero(0, term.dims[v]) for v in term.dims}
    # express the image inside kernel coordinates
    inside = {}
    for v in term.dims:
        if ker_rep.dims[v] == 0:
            inside[v] = Matrix.zero(0, 0)
            continue
        inside[v] = coords_in_rows(img_rows[v], incl.mats[v]) if img_rows[v].rows else Matrix.zero(0, ker_rep.dims[v])
    quot, _ = quotient_representation(ker_rep, inside)
    return quot
