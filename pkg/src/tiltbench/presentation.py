"""Recovering a quiver-with-relations presentation from an abstract algebra.

Vertices are primitive idempotents, arrows lift a basis of the radical modulo
its square, and relations are kernel elements of the induced map from the
path algebra, collected degree by degree up to the nilpotency index.  The
result is certified by rebuilding the path algebra and comparing dimensions;
only ideals with length-homogeneous generators are supported (the rebuild
certifies that this suffices for the input at hand).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import BasicAlgebra, build_path_algebra
from .config import DEFAULT, WorkbenchConfig
from .decompose import FiniteDimAlgebra, primitive_idempotents
from .errors import (
    NoIdentity,
    NotAssociative,
    NotBasic,
    PresentationError,
    RadicalNotNilpotent,
)
from .linalg import Matrix, row_space_basis, row_space_contains, row_spaces_equal
from .quiver import Path, Quiver, Relation

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class Presentation:
    quiver: Quiver
    relations: list
    algebra: BasicAlgebra  # rebuilt path algebra, certified same dimension
    arrow_elements: dict  # arrow name -> coordinates in the abstract algebra
    vertex_idempotents: dict  # vertex label -> coordinates
    nil_index: int


def abstract_from_table(dim: int, table, one) -> FiniteDimAlgebra:
    """Algebra from structure constants; verifies associativity and identity.

    ``table[i][j]`` is the coordinate vector of (basis i) * (basis j).
    """
    table = [[list(map(Fraction, cell)) for cell in row] for row in table]

    def mul(x, y):
        out = [ZERO] * dim
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                cell = table[i][j]
                for k in range(dim):
                    if cell[k]:
                        out[k] += ab * cell[k]
        return out

    alg = FiniteDimAlgebra(dim, mul, one)
    basis = [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
    for i in range(dim):
        li = alg.mul(list(alg.one), basis[i])
        ri = alg.mul(basis[i], list(alg.one))
        if li != basis[i] or ri != basis[i]:
            raise NoIdentity("declared identity is not two-sided")
    for i in range(dim):
        for j in range(dim):
            ij = alg.mul(basis[i], basis[j])
            for k in range(dim):
                if alg.mul(ij, basis[k]) != alg.mul(basis[i], alg.mul(basis[j], basis[k])):
                    raise NotAssociative(f"associativity fails on basis triple ({i},{j},{k})")
    return alg


def _power_rows(alg: FiniteDimAlgebra, rows_a: Matrix, rows_b: Matrix) -> Matrix:
    out = []
    for i in range(rows_a.rows):
        for j in range(rows_b.rows):
            out.append(alg.mul(list(rows_a.row(i)), list(rows_b.row(j))))
    return row_space_basis(Matrix(len(out), alg.dim, out)) if out else Matrix.zero(0, alg.dim)


def radical_chain(alg: FiniteDimAlgebra):
    """[rad, rad^2, ...] as row-space matrices, ending at zero."""
    rad = alg.radical_rows()
    chain = [rad]
    while chain[-1].rows:
        nxt = _power_rows(alg, chain[-1], rad)
        if nxt.rows >= chain[-1].rows and nxt.rows > 0 and row_spaces_equal(nxt, chain[-1]):
            raise RadicalNotNilpotent("radical chain stabilized while nonzero")
        chain.append(nxt)
    return chain


def quiver_presentation(
    alg: FiniteDimAlgebra,
    idempotents=None,
    config: WorkbenchConfig = DEFAULT,
    vertex_names=None,
) -> Presentation:
    idems = idempotents if idempotents is not None else primitive_idempotents(alg, config)
    chain = radical_chain(alg)
    rad, rad2 = chain[0], chain[1] if len(chain) > 1 else Matrix.zero(0, alg.dim)
    nil_index = len(chain)  # rad^(len) = 0
    if alg.dim - rad.rows != len(idems):
        raise NotBasic(
            f"semisimple quotient has dimension {alg.dim - rad.rows} but "
            f"{len(idems)} primitive idempotents"
        )
    n = len(idems)
    names = [str(x) for x in (vertex_names or [str(i + 1) for i in range(n)])]

    def sandwich(rows: Matrix, i: int, j: int) -> Matrix:
        out = []
        for r in range(rows.rows):
            x = alg.mul(list(idems[i]), alg.mul(list(rows.row(r)), list(idems[j])))
            out.append(x)
        return row_space_basis(Matrix(len(out), alg.dim, out)) if out else Matrix.zero(0, alg.dim)

    arrows = []
    arrow_elements = {}
    for i in range(n):
        for j in range(n):
            s_ij = sandwich(rad, i, j)
            s2_ij = sandwich(rad2, i, j)
            cur = s2_ij
            k = 0
            for r in range(s_ij.rows):
                cand = cur.vstack(s_ij.submatrix([r], range(alg.dim)))
                if cand.rank() > cur.rank():
                    name = f"a{len(arrows)}"
                    arrows.append((name, names[i], names[j]))
                    arrow_elements[name] = list(s_ij.row(r))
                    cur = row_space_basis(cand)
                    k += 1
    quiver = Quiver(names, arrows)

    # evaluate paths in the abstract algebra
    def eval_path(p: Path):
        if not p.arrows:
            return list(idems[names.index(p.source)])
        acc = arrow_elements[p.arrows[0]]
        for a in p.arrows[1:]:
            acc = alg.mul(acc, arrow_elements[a])
        return list(acc)

    # surjectivity: vertices and arrow products must span the algebra
    span_rows = [list(e) for e in idems]
    paths_by_len = {1: [Path(a[1], (a[0],)) for a in arrows]}
    for p in paths_by_len[1]:
        span_rows.append(eval_path(p))
    relations = []
    length = 2
    while length < nil_index + 1:
        prev = paths_by_len.get(length - 1, [])
        cur_paths = []
        for p in prev:
            tail = quiver.arrow_by_name[p.arrows[-1]].target
            for a in quiver.arrows_from[tail]:
                cur_paths.append(Path(p.source, p.arrows + (a.name,)))
        if not cur_paths:
            break
        paths_by_len[length] = cur_paths
        rows = [eval_path(p) for p in cur_paths]
        mat = Matrix(len(rows), alg.dim, rows)
        ker = mat.left_kernel_basis()
        for r in range(ker.rows):
            terms = [(ker.data[r][c], cur_paths[c]) for c in range(len(cur_paths)) if ker.data[r][c] != 0]
            relations.append(Relation(quiver, terms))
        span_rows.extend(rows)
        length += 1
    if Matrix(len(span_rows), alg.dim, span_rows).rank() != alg.dim:
        raise PresentationError("vertex and arrow products do not span the algebra")

    relations = _prune_relations(quiver, relations, nil_index + 1)
    rebuilt = build_path_algebra(quiver, relations, max_path_len=max(nil_index + 1, 4))
    if rebuilt.dim != alg.dim:
        raise PresentationError(
            f"rebuilt path algebra has dimension {rebuilt.dim}, expected {alg.dim}; "
            "the relation ideal is not generated in homogeneous lengths"
        )
    vertex_idems = {names[i]: list(idems[i]) for i in range(n)}
    return Presentation(quiver, relations, rebuilt, arrow_elements, vertex_idems, nil_index)


def _relation_vector(quiver, rel, order_index):
    vec = [ZERO] * len(order_index)
    for c, p in rel.terms:
        vec[order_index[p]] += c
    return vec


def _prune_relations(quiver, relations, max_len):
    """Greedy minimal generating subset, by increasing length."""
    relations = sorted(relations, key=lambda r: r.length)
    kept = []
    for rel in relations:
        if kept and _relation_in_ideal(quiver, kept, rel, max_len):
            continue
        kept.append(rel)
    return kept


def _relation_in_ideal(quiver, gens, rel, max_len) -> bool:
    """Whether rel lies in the homogeneous ideal span generated by gens."""
    spans = _ideal_spans(quiver, gens, rel.length)
    order, index, span = spans.get(rel.length, (None, None, None))
    if order is None:
        return False
    vec = _relation_vector(quiver, rel, index)
    if span.rows == 0:
        return all(c == 0 for c in vec)
    return row_space_contains(span, vec)


def _ideal_spans(quiver, gens, up_to):
    """Length -> (path order, path index, span rows) for the ideal of gens."""
    from .quiver import deglex_key

    by_len = {}
    for g in gens:
        by_len.setdefault(g.length, []).append(g)
    out = {}
    raw = {1: [Path(a.source, (a.name,)) for a in quiver.arrows]}
    prev_rows = []
    prev_order = None
    for n in range(2, up_to + 1):
        raw[n] = []
        for p in raw[n - 1]:
            tail = quiver.arrow_by_name[p.arrows[-1]].target
            for a in quiver.arrows_from[tail]:
                raw[n].append(Path(p.source, p.arrows + (a.name,)))
        order = sorted(raw[n], key=lambda p: deglex_key(quiver, p))
        index = {p: i for i, p in enumerate(order)}
        rows = []
        for g in by_len.get(n, []):
            rows.append(_relation_vector(quiver, g, index))
        if prev_order is not None:
            for row in prev_rows:
                for a in quiver.arrows:
                    left = [ZERO] * len(order)
                    right = [ZERO] * len(order)
                    any_l = any_r = False
                    for p, c in zip(prev_order, row):
                        if c == 0:
                            continue
                        if a.target == p.source:
                            left[index[Path(a.source, (a.name,) + p.arrows)]] += c
                            any_l = True
                        if p.target(quiver) == a.source:
                            right[index[Path(p.source, p.arrows + (a.name,))]] += c
                            any_r = True
                    if any_l:
                        rows.append(left)
                    if any_r:
                        rows.append(right)
        span = row_space_basis(Matrix(len(rows), len(order), rows)) if rows else Matrix.zero(0, len(order))
        out[n] = (order, index, span)
        prev_rows = [list(span.row(i)) for i in range(span.rows)]
        prev_order = order
    return out


def algebra_from_structure_constants(
    dim: int, table, one, config: WorkbenchConfig = DEFAULT
) -> BasicAlgebra:
    """Basic algebra from a verified structure-constant table.

    The returned path algebra carries the recovered presentation on its
    ``recovered_from`` attribute (quiver, relations, arrow images, and the
    primitive idempotents found in the input coordinates).
    """
    abstract = abstract_from_table(dim, table, one)
    pres = quiver_presentation(abstract, config=config)
    pres.algebra.recovered_from = pres
    return pres.algebra


def relation_ideals_equal(quiver: Quiver, rels1, rels2, max_path_len: int = 30) -> bool:
    """Whether two relation lists over the same quiver generate the same ideal.

    Decided by building both quotients (same dimension required) and
    cross-reducing each relation in the other ideal's homogeneous spans.
    """
    try:
        a1 = build_path_algebra(quiver, rels1, max_path_len)
        a2 = build_path_algebra(quiver, rels2, max_path_len)
    except Exception:
        return False
    if a1.dim != a2.dim:
        return False
    up_to = max([a1.nil_length, a2.nil_length] + [r.length for r in list(rels1) + list(rels2)])
    for gens, others in ((rels1, rels2), (rels2, rels1)):
        for rel in others:
            if not _relation_in_ideal(quiver, list(gens), rel, up_to):
                return False
    return True


def presentations_match(q1: Quiver, rels1, q2: Quiver, rels2) -> dict | None:
    """A vertex/arrow matching from (q1, rels1) onto (q2, rels2) under which
    the relation ideals agree, or None.

    Parallel arrows are not searched (at most one arrow per ordered vertex
    pair), which covers every algebra this package constructs.
    """
    import itertools

    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None

    def pair_counts(q):
        out = {}
        for a in q.arrows:
            out[(a.source, a.target)] = out.get((a.source, a.target), 0) + 1
        return out

    c1 = pair_counts(q1)
    if any(v > 1 for v in c1.values()) or any(v > 1 for v in pair_counts(q2).values()):
        raise PresentationError("parallel arrows are not supported by the matcher")
    for perm in itertools.permutations(q2.vertices):
        vmap = dict(zip(q1.vertices, perm))
        amap = {}
        ok = True
        for a in q1.arrows:
            cand = [b for b in q2.arrows if b.source == vmap[a.source] and b.target == vmap[a.target]]
            if len(cand) != 1:
                ok = False
                break
            amap[a.name] = cand[0].name
        if not ok:
            continue
        moved = []
        try:
            for r in rels1:
                moved.append(
                    Relation(
                        q2,
                        [
                            (c, Path(vmap[p.source], tuple(amap[x] for x in p.arrows)))
                            for c, p in r.terms
                        ],
                    )
                )
        except Exception:
            continue
        if relation_ideals_equal(q2, moved, list(rels2)):
            return {"vertices": vmap, "arrows": amap}
    return None
