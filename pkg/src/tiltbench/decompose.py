"""Splitting modules and finite-dimensional algebras into indecomposables.

The module-level entry points are ``decompose`` (full decomposition with a
verified certificate) and ``is_isomorphic`` (explicit inverse pair or None).
Both work over the rationals and assume the split situation in which every
simple endomorphism quotient is the ground field; anything else raises
``DecompositionError`` rather than guessing.

Splitting strategy for a module M:
  1. if End(M) is local, M is indecomposable;
  2. otherwise look for an endomorphism whose minimal polynomial factors
     into coprime pieces with at least one rational root; the kernels of the
     pieces split M (Fitting);
  3. otherwise spin submodules from seeded random vectors and try to split
     off a generated direct summand via an explicit retraction.

Abstract algebras (e.g. chain endomorphism rings) go through the same ideas
phrased with idempotents: central splitting in the semisimple quotient via a
probe with rational spectrum, Bezout spectral idempotents inside corners,
and Newton lifting of idempotents modulo the radical.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .config import DEFAULT, WorkbenchConfig
from .errors import DecompositionError, TiltbenchError
from .linalg import Matrix, row_space_basis
from .polys import (
    bezout,
    min_poly_of_matrix,
    pdivmod,
    peval_matrix,
    pmul,
    pnorm,
    rational_roots,
)
from .reps import (
    ModuleMap,
    Representation,
    hom_space,
    map_coordinates,
    sub_representation,
    close_under_arrows,
)

ZERO = Fraction(0)
ONE = Fraction(1)


# -- abstract finite-dimensional algebras -------------------------------------


class FiniteDimAlgebra:
    """An associative unital algebra given by a basis, a multiplication
    callback on coordinate vectors, and the coordinates of 1."""

    def __init__(self, dim: int, mul, one):
        self.dim = dim
        self.mul = mul
        self.one = tuple(Fraction(c) for c in one)

    def left_matrix(self, x) -> Matrix:
        rows = []
        for j in range(self.dim):
            e = [ZERO] * self.dim
            e[j] = ONE
            rows.append(list(self.mul(x, e)))
        # rows indexed by the right factor: entry (j, :) = x * e_j
        return Matrix(self.dim, self.dim, rows)

    def radical_rows(self) -> Matrix:
        lmats = [self.left_matrix([ONE if i == j else ZERO for i in range(self.dim)]) for j in range(self.dim)]
        t = [[ZERO] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for j in range(i, self.dim):
                e_i = [ONE if k == i else ZERO for k in range(self.dim)]
                e_j = [ONE if k == j else ZERO for k in range(self.dim)]
                prod = self.mul(e_i, e_j)
                tr = ZERO
                for k, c in enumerate(prod):
                    if c:
                        tr += c * sum(lmats[k].data[m][m] for m in range(self.dim))
                t[i][j] = tr
                t[j][i] = tr
        return row_space_basis(Matrix(self.dim, self.dim, t).left_kernel_basis())

    def semisimple_dim(self) -> int:
        return self.dim - self.radical_rows().rows

    def min_poly(self, x):
        # minimal polynomial via the span of powers (regular rep is faithful)
        flats = [list(self.one)]
        cur = list(self.one)
        while True:
            cur = list(self.mul(cur, x))
            flats.append(cur)
            ker = Matrix.from_rows(flats).left_kernel_basis()
            if ker.rows:
                row = list(ker.row(0))
                top = max(i for i, c in enumerate(row) if c != 0)
                return pnorm([c / row[top] for c in row[: top + 1]])

    def eval_poly(self, p, x):
        acc = [ZERO] * self.dim
        for c in reversed(p):
            acc = self.mul(acc, x)
            acc = [a + c * o for a, o in zip(acc, self.one)]
        return acc


def lift_idempotent(alg: FiniteDimAlgebra, x, max_iter: int = 64):
    """Newton iteration e <- 3e^2 - 2e^3 from an idempotent mod the radical."""
    e = list(x)
    for _ in range(max_iter):
        e2 = alg.mul(e, e)
        if list(e2) == list(e):
            return e
        e3 = alg.mul(e2, e)
        e = [3 * a - 2 * b for a, b in zip(e2, e3)]
    raise DecompositionError("idempotent lifting did not converge")


def _probe_elements(alg: FiniteDimAlgebra, rng: random.Random, rounds: int):
    """Deterministic-then-random stream of probe elements."""
    basis = []
    for i in range(alg.dim):
        e = [ZERO] * alg.dim
        e[i] = ONE
        basis.append(e)
    for b in basis:
        yield b
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            yield [a + b for a, b in zip(basis[i], basis[j])]
            yield [a - b for a, b in zip(basis[i], basis[j])]
    for r in range(rounds):
        bound = 3 + 2 * r
        yield [Fraction(rng.randint(-bound, bound)) for _ in range(alg.dim)]


def _split_corner_once(alg: FiniteDimAlgebra, unit, rng: random.Random, rounds: int = 40):
    """A nontrivial idempotent pair (e, unit - e) inside the corner with the
    given unit, or None if the corner resisted all probes."""
    for x in _probe_elements(alg, rng, rounds):
        # force the probe into the corner
        x = alg.mul(alg.mul(unit, x), unit)
        mu = _corner_min_poly(alg, x, unit)
        if len(mu) <= 2:
            continue
        roots = rational_roots(mu)
        if not roots:
            continue
        distinct = sorted(set(roots))
        # coprime split: (t - r)^mult for one root against the rest
        r = distinct[0]
        lin = [-r, ONE]
        m1 = [ONE]
        work = list(mu)
        while True:
            q, rem = pdivmod(work, lin)
            if rem:
                break
            m1 = pmul(m1, lin)
            work = q
        m2 = work
        if len(m2) <= 1:
            continue  # power of a single linear factor: no split
        u, v = bezout(m1, m2)
        e = alg.eval_poly(pmul(v, m2), x)  # congruent to 1 on ker m1, 0 on ker m2
        e = alg.mul(alg.mul(unit, e), unit)
        if _is_zero(e) or e == list(unit):
            continue
        if alg.mul(e, e) != list(e):
            raise DecompositionError("spectral idempotent failed exactness check")
        comp = [a - b for a, b in zip(unit, e)]
        return list(e), comp
    return None


def _corner_min_poly(alg: FiniteDimAlgebra, x, unit):
    """Minimal polynomial of x in the corner algebra unit*A*unit."""
    flats = [list(unit)]
    cur = list(unit)
    while True:
        cur = list(alg.mul(cur, x))
        flats.append(cur)
        ker = Matrix.from_rows(flats).left_kernel_basis()
        if ker.rows:
            row = list(ker.row(0))
            top = max(i for i, c in enumerate(row) if c != 0)
            return pnorm([c / row[top] for c in row[: top + 1]])


def _is_zero(x):
    return all(c == 0 for c in x)


def _corner_is_local(alg: FiniteDimAlgebra, unit) -> bool:
    """Whether unit*A*unit is local: semisimple quotient of dimension 1."""
    rows = []
    for i in range(alg.dim):
        e = [ZERO] * alg.dim
        e[i] = ONE
        rows.append(list(alg.mul(alg.mul(unit, e), unit)))
    basis = row_space_basis(Matrix.from_rows(rows))
    k = basis.rows
    if k == 0:
        raise DecompositionError("corner collapsed to zero")

    def corner_mul(a, b):
        xa = [sum(a[i] * basis.data[i][j] for i in range(k)) for j in range(alg.dim)]
        xb = [sum(b[i] * basis.data[i][j] for i in range(k)) for j in range(alg.dim)]
        prod = alg.mul(xa, xb)
        sol = basis.transpose().solve(Matrix(alg.dim, 1, [[c] for c in prod]))
        if sol is None:
            raise DecompositionError("corner not multiplicatively closed")
        return [sol.data[i][0] for i in range(k)]

    unit_coords = basis.transpose().solve(Matrix(alg.dim, 1, [[c] for c in unit]))
    if unit_coords is None:
        raise DecompositionError("corner unit not in corner span")
    corner = FiniteDimAlgebra(k, corner_mul, [unit_coords.data[i][0] for i in range(k)])
    return corner.semisimple_dim() == 1


def primitive_idempotents(alg: FiniteDimAlgebra, config: WorkbenchConfig = DEFAULT):
    """Complete list of orthogonal primitive idempotents summing to 1.

    Found by repeatedly splitting corners with spectral idempotents and
    certifying primitivity via local corners.  Raises DecompositionError if
    a corner resists splitting (non-split input).
    """
    rng = random.Random(config.seed)
    out = []
    stack = [list(alg.one)]
    while stack:
        unit = stack.pop()
        if _corner_is_local(alg, unit):
            out.append(unit)
            continue
        pair = _split_corner_once(alg, unit, rng)
        if pair is None:
            raise DecompositionError("corner resisted splitting; is the algebra split over Q?")
        e, comp = pair
        stack.append(e)
        stack.append(comp)
    total = [sum(e[i] for e in out) for i in range(alg.dim)]
    if total != list(alg.one):
        raise DecompositionError("primitive idempotents do not sum to 1")
    for i, e in enumerate(out):
        for f in out[i + 1 :]:
            if not _is_zero(alg.mul(e, f)) or not _is_zero(alg.mul(f, e)):
                raise DecompositionError("idempotents are not orthogonal")
    return out


# -- endomorphism algebras of modules ----------------------------------------


class EndAlgebra:
    """End(M) with its hom basis, composition table, and identity coords."""

    def __init__(self, m: Representation):
        self.module = m
        self.maps = hom_space(m, m)
        self.dim = len(self.maps)
        ident = ModuleMap.identity(m)
        self.one = map_coordinates(ident, self.maps) if self.dim else []
        self._table = None

    def _ensure_table(self):
        if self._table is not None:
            return
        self._table = []
        for f in self.maps:
            row = []
            for g in self.maps:
                row.append(map_coordinates(f.then(g), self.maps))
            self._table.append(row)

    def mul(self, a, b):
        # composition in "then" order: (a*b) = a then b
        self._ensure_table()
        out = [ZERO] * self.dim
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0:
                    continue
                for k, c in enumerate(self._table[i][j]):
                    out[k] += ca * cb * c
        return out

    def as_abstract(self) -> FiniteDimAlgebra:
        return FiniteDimAlgebra(self.dim, self.mul, self.one)

    def element(self, coords) -> ModuleMap:
        acc = None
        for c, f in zip(coords, self.maps):
            if c == 0:
                continue
            acc = f.scale(c) if acc is None else acc + f.scale(c)
        return acc if acc is not None else ModuleMap.zero(self.module, self.module)

    def is_local(self) -> bool:
        if self.dim == 1:
            return True
        return self.as_abstract().semisimple_dim() == 1


def module_min_poly(f: ModuleMap):
    """Minimal polynomial of a module endomorphism (lcm over vertices)."""
    from .polys import pgcd

    mu = [ONE]
    for v, m in f.mats.items():
        if m.rows == 0:
            continue
        mv = min_poly_of_matrix(m)
        g = pgcd(mu, mv)
        mu = pdivmod(pmul(mu, mv), g)[0]
    return pnorm(mu)


def _split_by_endo(m: Representation, f: ModuleMap):
    """Split m into kernels of coprime factors of min poly(f), or None."""
    mu = module_min_poly(f)
    if len(mu) <= 2:
        return None
    roots = rational_roots(mu)
    if not roots:
        return None
    r = sorted(set(roots))[0]
    lin = [-r, ONE]
    m1 = [ONE]
    work = list(mu)
    while True:
        q, rem = pdivmod(work, lin)
        if rem:
            break
        m1 = pmul(m1, lin)
        work = q
    m2 = work
    if len(m2) <= 1:
        return None
    pieces = []
    for factor in (m1, m2):
        spaces = {v: peval_matrix(factor, f.mats[v]).left_kernel_basis() for v in f.mats}
        sub, incl = sub_representation(m, spaces)
        pieces.append((sub, incl))
    if sum(p.total_dim() for p, _ in pieces) != m.total_dim():
        raise DecompositionError("coprime kernels do not fill the module")
    return pieces


def _projections_for(m: Representation, pieces):
    """Projections m -> piece inverting the combined inclusion."""
    verts = list(m.dims)
    combined = {}
    for v in verts:
        rows = []
        for _, incl in pieces:
            rows.extend(list(incl.mats[v].data))
        combined[v] = Matrix(len(rows), m.dims[v], rows)
    inv = {v: combined[v].inverse() for v in verts}
    if any(inv[v] is None for v in verts):
        raise DecompositionError("inclusions do not form a direct sum")
    projs = []
    offset = {v: 0 for v in verts}
    for sub, _ in pieces:
        mats = {}
        for v in verts:
            k = sub.dims[v]
            cols = range(offset[v], offset[v] + k)
            mats[v] = inv[v].submatrix(range(m.dims[v]), cols)
            offset[v] += k
        projs.append(ModuleMap(m, sub, mats, check=False))
    return projs


def _spin_split(m: Representation, rng: random.Random, attempts: int = 24):
    """Split off a direct summand generated by random vectors, or None."""
    verts = list(m.dims)
    for trial in range(attempts):
        n_vecs = 1 + trial // 8
        spaces = {v: Matrix.zero(0, m.dims[v]) for v in verts}
        for _ in range(n_vecs):
            v = rng.choice([w for w in verts if m.dims[w]])
            vec = [Fraction(rng.randint(-3, 3)) for _ in range(m.dims[v])]
            spaces[v] = spaces[v].vstack(Matrix(1, m.dims[v], [vec]))
        closed = close_under_arrows(m, spaces)
        sub, incl = sub_representation(m, closed)
        if sub.total_dim() in (0, m.total_dim()):
            continue
        # retraction: pi with incl then pi = identity on sub
        cands = hom_space(m, sub)
        if not cands:
            continue
        n = len(cands)
        ident = ModuleMap.identity(sub)
        comps = [incl.then(c) for c in cands]
        try:
            coords = map_coordinates(ident, comps)
        except TiltbenchError:
            continue
        pi = None
        for c, cand in zip(coords, cands):
            if c == 0:
                continue
            pi = cand.scale(c) if pi is None else pi + cand.scale(c)
        if pi is None:
            continue
        e = pi.then(incl)  # idempotent on m with image sub
        comp_spaces = {v: e.mats[v] - Matrix.identity(m.dims[v]) for v in verts}
        rows = {v: row_space_basis(comp_spaces[v]) for v in verts}
        other, other_incl = sub_representation(m, rows)
        if sub.total_dim() + other.total_dim() != m.total_dim():
            continue
        return [(sub, incl), (other, other_incl)]
    return None


def decompose(m: Representation, config: WorkbenchConfig = DEFAULT):
    """Full decomposition certificate: (summands, to_sum, from_sum).

    summands: list of (indecomposable Representation, multiplicity)
    to_sum:   iso m -> direct sum in listed order (copies grouped)
    from_sum: its exact two-sided inverse
    """
    rng = random.Random(config.seed)
    leaves = _decompose_rec(m, rng)
    groups = _group_by_iso(leaves, config)
    summands = [(g[0][0][0], len(g)) for g in groups]
    # assemble maps m -> D and D -> m from the leaf data and grouping isos
    incls = []  # copy -> m
    projs = []  # m -> copy
    for group in groups:
        for (piece, incl, proj), iso_pair in group:
            rep_to_piece, piece_to_rep = iso_pair
            incls.append(rep_to_piece.then(incl))
            projs.append(proj.then(piece_to_rep))
    d = None
    for rep, mult in summands:
        for _ in range(mult):
            d = rep if d is None else d.direct_sum(rep)
    if d is None:
        from .reps import zero_rep

        d = zero_rep(m.algebra)
    verts = list(m.dims)
    to_mats = {}
    from_mats = {}
    for v in verts:
        cols = []
        for proj in projs:
            cols.append(proj.mats[v])
        if cols:
            acc = cols[0]
            for c in cols[1:]:
                acc = acc.hstack(c)
        else:
            acc = Matrix.zero(m.dims[v], 0)
        to_mats[v] = acc
        rows = []
        for incl in incls:
            rows.extend(list(incl.mats[v].data))
        from_mats[v] = Matrix(len(rows), m.dims[v], rows)
    to_sum = ModuleMap(m, d, to_mats, check=False)
    from_sum = ModuleMap(d, m, from_mats, check=False)
    if not to_sum.then(from_sum).is_identity() or not from_sum.then(to_sum).is_identity():
        raise DecompositionError("decomposition certificate failed verification")
    return summands, to_sum, from_sum


def _decompose_rec(m: Representation, rng: random.Random):
    """List of (indecomposable piece, inclusion into m, projection from m)."""
    if m.total_dim() == 0:
        return []
    end = EndAlgebra(m)
    if end.is_local():
        ident = ModuleMap.identity(m)
        return [(m, ident, ident)]
    pieces = None
    for f in _endo_candidates(end, rng):
        pieces = _split_by_endo(m, f)
        if pieces:
            break
    if pieces is None:
        pieces = _spin_split(m, rng)
    if pieces is None:
        raise DecompositionError(
            "module resisted splitting although its endomorphism ring is not local"
        )
    projs = _projections_for(m, pieces)
    out = []
    for (sub, incl), proj in zip(pieces, projs):
        for piece, sub_incl, sub_proj in _decompose_rec(sub, rng):
            out.append((piece, sub_incl.then(incl), proj.then(sub_proj)))
    return out


def _endo_candidates(end: EndAlgebra, rng: random.Random, rounds: int = 30):
    ident = ModuleMap.identity(end.module)
    one = end.one
    for f in end.maps:
        yield f
    for i in range(end.dim):
        for j in range(i + 1, end.dim):
            yield end.maps[i] + end.maps[j]
    for r in range(rounds):
        bound = 2 + r
        coords = [Fraction(rng.randint(-bound, bound)) for _ in range(end.dim)]
        yield end.element(coords)


def _group_by_iso(leaves, config: WorkbenchConfig):
    """Group indecomposable leaves by isomorphism; attach alignment isos.

    Returns a list of groups; each entry of a group is
    ((piece, incl, proj), (rep_to_piece, piece_to_rep)) where the inner pair
    aligns the group representative with this copy.
    """
    groups = []
    for leaf in leaves:
        piece = leaf[0]
        placed = False
        for group in groups:
            rep = group[0][0][0]
            if rep.dim_vector() != piece.dim_vector():
                continue
            pair = _iso_between_indecomposables(rep, piece)
            if pair is not None:
                group.append((leaf, pair))
                placed = True
                break
        if not placed:
            ident = ModuleMap.identity(piece)
            groups.append([(leaf, (ident, ident))])
    return groups


def _iso_between_indecomposables(x: Representation, y: Representation):
    """Iso pair (f: x->y, g: y->x) or None, decided exactly.

    For indecomposables, x and y are isomorphic iff some composite
    y -> x -> y avoids the radical of End(y); locality then upgrades the
    composite to an isomorphism.
    """
    if x.dim_vector() != y.dim_vector():
        return None
    if x.total_dim() == 0:
        return ModuleMap.zero(x, y), ModuleMap.zero(y, x)
    hxy = hom_space(x, y)
    hyx = hom_space(y, x)
    if not hxy or not hyx:
        return None
    end_y = EndAlgebra(y)
    rad_rows = end_y.as_abstract().radical_rows()
    for b in hxy:
        for a in hyx:
            u = a.then(b)  # y -> y, invertible iff it avoids rad End(y)
            coords = map_coordinates(u, end_y.maps)
            vec = Matrix(1, end_y.dim, [coords])
            if rad_rows.rows and rad_rows.vstack(vec).rank() == rad_rows.rank():
                continue  # composite lies in the radical
            if all(c == 0 for c in coords):
                continue
            u_inv_mats = {v: u.mats[v].inverse() for v in u.mats}
            if any(mm is None for mm in u_inv_mats.values()):
                continue  # should not happen for a local End, but stay exact
            u_inv = ModuleMap(y, y, u_inv_mats, check=False)
            g = u_inv.then(a)  # y -> x, a left inverse of b up to order
            if g.then(b).is_identity() and b.then(g).is_identity():
                return b, g
    return None


def is_isomorphic(m: Representation, n: Representation, config: WorkbenchConfig = DEFAULT):
    """Mutually inverse pair (f: m->n, g: n->m), or None.

    Randomized fast path over the hom space, then a deterministic fallback
    through full decompositions.
    """
    if m.dim_vector() != n.dim_vector():
        return None
    if m.total_dim() == 0:
        z = ModuleMap.zero(m, n)
        return z, ModuleMap.zero(n, m)
    h = hom_space(m, n)
    if not h:
        return None
    rng = random.Random(config.seed)
    for attempt in range(8):
        if attempt == 0 and len(h) == 1:
            f = h[0]
        else:
            bound = 2 + attempt
            f = None
            for g in h:
                c = Fraction(rng.randint(-bound, bound))
                if c:
                    f = g.scale(c) if f is None else f + g.scale(c)
            if f is None:
                continue
        if not f.is_vertexwise_invertible():
            continue
        g = f.inverse()
        if f.then(g).is_identity() and g.then(f).is_identity():
            return f, g
    # deterministic fallback: decompose both sides and match summands
    sm, m_to_d, _ = decompose(m, config)
    sn, _, e_to_n = decompose(n, config)
    if len(sm) != len(sn):
        return None
    used = [False] * len(sn)
    matches = {}
    for idx, (rep, mult) in enumerate(sm):
        found = None
        for j, (rep2, mult2) in enumerate(sn):
            if used[j] or mult2 != mult:
                continue
            pair = _iso_between_indecomposables(rep, rep2)
            if pair is not None:
                found = (j, pair[0])
                break
        if found is None:
            return None
        used[found[0]] = True
        matches[idx] = found
    verts = list(m.dims)

    def copy_offsets(summands):
        out = []
        start = {v: 0 for v in verts}
        for rep, mult in summands:
            group = []
            for _ in range(mult):
                group.append(dict(start))
                for v in verts:
                    start[v] += rep.dims[v]
            out.append(group)
        return out, start

    off_d, d_total = copy_offsets(sm)
    off_e, e_total = copy_offsets(sn)
    big = {v: [[ZERO] * e_total[v] for _ in range(d_total[v])] for v in verts}
    for idx, (rep, mult) in enumerate(sm):
        j, fij = matches[idx]
        for c in range(mult):
            src_off = off_d[idx][c]
            tgt_off = off_e[j][c]
            for v in verts:
                mat = fij.mats[v]
                for r in range(mat.rows):
                    for s in range(mat.cols):
                        big[v][src_off[v] + r][tgt_off[v] + s] = mat.data[r][s]
    perm = ModuleMap(
        m_to_d.target,
        e_to_n.source,
        {v: Matrix(d_total[v], e_total[v], big[v]) for v in verts},
        check=False,
    )
    f = m_to_d.then(perm).then(e_to_n)
    if not f.is_vertexwise_invertible():
        return None
    g = f.inverse()
    if f.then(g).is_identity() and g.then(f).is_identity():
        return f, g
    return None
