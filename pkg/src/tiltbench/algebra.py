"""Finite-dimensional basic algebras presented by quivers with relations.

The algebra of a quiver with admissible relations is built on a basis of
normal-form paths.  Normal forms come from length-graded linear reduction:
for each length, the homogeneous span of (relations sandwiched by paths) is
row-reduced, its leading paths (largest in deglex) are rewritten into the
surviving ones, and construction stops at the first length with no
survivors.  Structure constants are obtained by reducing concatenations.

Elements are sparse dicts ``{basis index: Fraction}``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAdmissible, RadicalNotNilpotent, TiltbenchError
from .linalg import Matrix, frac, row_space_basis
from .quiver import Path, Quiver, deglex_key, trivial_path

RAW_PATH_CAP = 100_000


# -- sparse element helpers ----------------------------------------------


def el_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, c in y.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def el_sub(x: dict, y: dict) -> dict:
    return el_add(x, {k: -c for k, c in y.items()})


def el_scale(c, x: dict) -> dict:
    c = frac(c)
    if c == 0:
        return {}
    return {k: c * v for k, v in x.items()}


def el_is_zero(x: dict) -> bool:
    return not x


def el_eq(x: dict, y: dict) -> bool:
    return el_is_zero(el_sub(x, y))


class BasicAlgebra:
    """Path algebra modulo an admissible ideal, on a normal-form path basis.

    Attributes of note:
      basis             list of Path in a fixed deglex order (trivial first)
      index             Path -> basis position
      idempotent_index  vertex label -> basis position of its trivial path
      dim               len(basis)
    """

    def __init__(self, quiver: Quiver, relations, basis, rewrite, nil_length: int):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.index = {p: i for i, p in enumerate(self.basis)}
        self.nil_length = nil_length  # all paths of this length or more vanish
        self._rewrite = rewrite  # length -> {Path: {Path: coeff}} for non-normal paths
        self.idempotent_index = {v: self.index[trivial_path(v)] for v in quiver.vertices}
        self.source = [p.source for p in self.basis]
        self.target = [p.target(quiver) for p in self.basis]
        self._table = {}
        self._build_table()
        self._sandwich = {}
        for i in range(self.dim):
            self._sandwich.setdefault((self.source[i], self.target[i]), []).append(i)

    # -- construction ------------------------------------------------------

    def _reduce_raw(self, path: Path) -> dict:
        """Express a raw path in the normal basis."""
        n = len(path)
        if n >= self.nil_length:
            return {}
        if path in self.index:
            return {self.index[path]: Fraction(1)}
        rw = self._rewrite.get(n, {}).get(path)
        if rw is None:
            raise TiltbenchError(f"raw path {path} not covered by rewrite data")
        return {self.index[p]: c for p, c in rw.items() if c != 0}

    def _build_table(self):
        for i, p in enumerate(self.basis):
            for j, q in enumerate(self.basis):
                if self.target[i] != self.source[j]:
                    continue
                raw = Path(p.source, p.arrows + q.arrows)
                red = self._reduce_raw(raw)
                if red:
                    self._table[(i, j)] = red

    # -- arithmetic ----------------------------------------------------------

    def one(self) -> dict:
        return {i: Fraction(1) for i in self.idempotent_index.values()}

    def idem(self, v) -> dict:
        return {self.idempotent_index[str(v)]: Fraction(1)}

    def basis_el(self, i: int) -> dict:
        return {i: Fraction(1)}

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                prod = self._table.get((i, j))
                if not prod:
                    continue
                ab = a * b
                for k, c in prod.items():
                    s = out.get(k, 0) + ab * c
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def paths_between(self, a, b):
        """Basis indices i with source a and target b (the sandwich e_a A e_b)."""
        return self._sandwich.get((str(a), str(b)), [])

    def is_radical_index(self, i: int) -> bool:
        return len(self.basis[i]) >= 1

    def radical_indices(self):
        return [i for i in range(self.dim) if len(self.basis[i]) >= 1]

    def el_to_vector(self, x: dict):
        v = [Fraction(0)] * self.dim
        for k, c in x.items():
            v[k] = c
        return v

    def left_mul_matrix(self, x: dict) -> Matrix:
        """Matrix of y -> x*y on the basis, rows indexed by the input basis."""
        rows = []
        for j in range(self.dim):
            rows.append(self.el_to_vector(self.mul(x, self.basis_el(j))))
        return Matrix(self.dim, self.dim, rows)

    # -- invariants ----------------------------------------------------------

    def cartan_matrix(self) -> Matrix:
        """Entry (i, j) counts basis paths from vertex i to vertex j."""
        n = len(self.quiver.vertices)
        m = [[Fraction(0)] * n for _ in range(n)]
        for k in range(self.dim):
            i = self.quiver.vertex_index[self.source[k]]
            j = self.quiver.vertex_index[self.target[k]]
            m[i][j] += 1
        return Matrix(n, n, m)

    def radical_basis(self):
        """Jacobson radical as a list of elements (the nontrivial basis paths).

        Cross-checked once against the trace-form kernel of the regular
        representation, which is the radical in characteristic zero.
        """
        if not hasattr(self, "_radical_checked"):
            tf = trace_form_radical(self)
            expected = sorted(self.radical_indices())
            got = row_space_basis(tf)
            span = Matrix(
                len(expected),
                self.dim,
                [self.el_to_vector(self.basis_el(i)) for i in expected],
            )
            from .linalg import row_spaces_equal

            if not row_spaces_equal(got, span):
                raise RadicalNotNilpotent("trace-form radical disagrees with path radical")
            self._radical_checked = True
        return [self.basis_el(i) for i in self.radical_indices()]

    def check_associative(self) -> bool:
        for i in range(self.dim):
            bi = self.basis_el(i)
            for j in range(self.dim):
                bj = self.basis_el(j)
                ij = self.mul(bi, bj)
                for k in range(self.dim):
                    bk = self.basis_el(k)
                    if not el_eq(self.mul(ij, bk), self.mul(bi, self.mul(bj, bk))):
                        return False
        return True

    def check_idempotents(self) -> bool:
        total = {}
        for v in self.quiver.vertices:
            ev = self.idem(v)
            for w in self.quiver.vertices:
                ew = self.idem(w)
                prod = self.mul(ev, ew)
                want = ev if v == w else {}
                if not el_eq(prod, want):
                    return False
            total = el_add(total, ev)
        return el_eq(total, self.one())

    def corner_inverse(self, u: dict, vertex: str) -> dict:
        """Inverse of a unit in the local corner e_v A e_v (Neumann series)."""
        ei = self.idempotent_index[str(vertex)]
        c = u.get(ei, Fraction(0))
        if c == 0:
            raise TiltbenchError("corner element is not a unit")
        n = el_scale(Fraction(-1, 1) / c, el_sub(u, el_scale(c, self.basis_el(ei))))
        inv = self.basis_el(ei)
        power = self.basis_el(ei)
        for _ in range(self.nil_length + 1):
            power = self.mul(power, n)
            if el_is_zero(power):
                break
            inv = el_add(inv, power)
        else:
            raise TiltbenchError("corner element is not a unit (series did not terminate)")
        return el_scale(Fraction(1, 1) / c, inv)

    def format_element(self, x: dict) -> str:
        if not x:
            return "0"
        return " + ".join(f"({c})*{self.basis[k].word()}" for k, c in sorted(x.items()))


def trace_form_radical(alg: BasicAlgebra) -> Matrix:
    """Rows span the radical of the trace bilinear form of the regular rep."""
    d = alg.dim
    lmats = [alg.left_mul_matrix(alg.basis_el(i)) for i in range(d)]
    t = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            prod = alg.mul(alg.basis_el(i), alg.basis_el(j))
            tr = Fraction(0)
            for k, c in prod.items():
                # trace of left multiplication by basis element k
                tr += c * sum(lmats[k].data[m][m] for m in range(d))
            t[i][j] = tr
            t[j][i] = tr
    return Matrix(d, d, t).left_kernel_basis()


def build_path_algebra(quiver: Quiver, relations, max_path_len: int = 30) -> BasicAlgebra:
    """Quotient of the path algebra by the ideal the relations generate.

    Raises NotAdmissible when normal-form paths still survive at
    ``max_path_len``.
    """
    relations = list(relations)
    by_len = {}
    for r in relations:
        by_len.setdefault(r.length, []).append(r)

    def raw_next(paths):
        out = []
        for p in paths:
            for a in quiver.arrows_from[p.target(quiver)]:
                out.append(Path(p.source, p.arrows + (a.name,)))
        return out

    trivials = [trivial_path(v) for v in quiver.vertices]
    raw = {0: trivials, 1: [Path(a.source, (a.name,)) for a in quiver.arrows]}
    normal = {0: list(trivials), 1: list(raw[1])}
    span_rows = {1: []}  # list of dict(Path -> coeff), an rref'd spanning set
    rewrite = {}
    nil_length = None

    for n in range(2, max_path_len + 1):
        raw[n] = raw_next(raw[n - 1])
        if len(raw[n]) > RAW_PATH_CAP:
            raise NotAdmissible(f"more than {RAW_PATH_CAP} raw paths at length {n}")
        if not raw[n]:
            nil_length = n
            break
        order = sorted(raw[n], key=lambda p: deglex_key(quiver, p), reverse=True)
        col = {p: i for i, p in enumerate(order)}
        rows = []
        for r in by_len.get(n, []):
            vec = [Fraction(0)] * len(order)
            for c, p in r.terms:
                vec[col[p]] += c
            rows.append(vec)
        for row in span_rows[n - 1]:
            for a in quiver.arrows:
                left = [Fraction(0)] * len(order)
                right = [Fraction(0)] * len(order)
                any_l = any_r = False
                for p, c in row.items():
                    if a.target == p.source:
                        left[col[Path(a.source, (a.name,) + p.arrows)]] += c
                        any_l = True
                    if p.target(quiver) == a.source:
                        right[col[Path(p.source, p.arrows + (a.name,))]] += c
                        any_r = True
                if any_l:
                    rows.append(left)
                if any_r:
                    rows.append(right)
        if rows:
            red, pivots = Matrix(len(rows), len(order), rows).rref()
        else:
            red, pivots = Matrix.zero(0, len(order)), []
        pivot_set = set(pivots)
        normal_n = [order[j] for j in range(len(order)) if j not in pivot_set]
        normal_n.sort(key=lambda p: deglex_key(quiver, p))
        normal[n] = normal_n
        span_rows[n] = [
            {order[j]: red.data[i][j] for j in range(len(order)) if red.data[i][j] != 0}
            for i in range(len(pivots))
        ]
        rewrite[n] = {}
        for i, pc in enumerate(pivots):
            lead = order[pc]
            tail = {}
            for j in range(len(order)):
                if j != pc and red.data[i][j] != 0:
                    tail[order[j]] = -red.data[i][j]
            rewrite[n][lead] = tail
        if not normal_n:
            nil_length = n
            break
    if nil_length is None:
        raise NotAdmissible(
            f"normal-form paths still survive at length {max_path_len}; "
            "raise max_path_len or fix the relations"
        )

    basis = []
    for n in range(0, nil_length):
        basis.extend(normal.get(n, []))
    return BasicAlgebra(quiver, relations, basis, rewrite, nil_length)
