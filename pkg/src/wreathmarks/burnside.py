"""The Burnside ring A(G): marks, the table of marks, ring operations,
restriction/transfer/external product, and exact matrices of additive maps.

The canonical basis is indexed by the conjugacy-class table; under its
(order, element-list) ordering the table of marks is block triangular with
nonzero diagonal, which from_marks exploits by back substitution.
Transfers and restrictions are computed through the explicit-set oracle
(gsets.induce / gsets.restrict + decompose), never through closed formulas:
the formulas live in `induced` and are tested against these.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from . import gsets, linalg
from .errors import NotInImage
from .groups import (ConjugacyClassTable, GroupHom, PermGroup, SubgroupRef,
                     direct_product, double_cosets, inv, left_cosets, mul,
                     subgroup_conjugacy_classes)


class BurnsideElement:
    """An integer vector over Conj(G): a virtual G-set in the transitive basis."""

    __slots__ = ("table", "coords")

    def __init__(self, table: ConjugacyClassTable, coords):
        self.table = table
        self.coords = tuple(int(c) for c in coords)
        if len(self.coords) != table.size:
            raise ValueError("coordinate length does not match the class table")

    @classmethod
    def basis(cls, table: ConjugacyClassTable, idx: int) -> "BurnsideElement":
        coords = [0] * table.size
        coords[idx] = 1
        return cls(table, coords)

    @classmethod
    def zero(cls, table: ConjugacyClassTable) -> "BurnsideElement":
        return cls(table, [0] * table.size)

    @classmethod
    def one(cls, table: ConjugacyClassTable) -> "BurnsideElement":
        return cls.basis(table, table.size - 1)  # [G/G] is the last class

    def _check(self, other):
        if self.table is not other.table:
            raise ValueError("elements live over different class tables")

    def __add__(self, other):
        self._check(other)
        return BurnsideElement(self.table, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return BurnsideElement(self.table, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return BurnsideElement(self.table, [-a for a in self.coords])

    def scale(self, k: int) -> "BurnsideElement":
        return BurnsideElement(self.table, [k * a for a in self.coords])

    def __mul__(self, other):
        self._check(other)
        out = [0] * self.table.size
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b == 0:
                    continue
                for k, c in enumerate(basis_product(self.table, i, j)):
                    out[k] += a * b * c
        return BurnsideElement(self.table, out)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def size(self) -> int:
        """Total cardinality of the virtual set."""
        G = self.table.group.order
        return sum(c * (G // rep.order) for c, rep in zip(self.coords, self.table.classes))

    def __eq__(self, other):
        return (isinstance(other, BurnsideElement) and self.table is other.table
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.table), self.coords))

    def __repr__(self):
        terms = [f"{c}*[G/{self.table.class_names[i]}]"
                 for i, c in enumerate(self.coords) if c]
        return " + ".join(terms) if terms else "0"


class MarksVector:
    """A rational vector over Conj(G), with pointwise ring structure."""

    __slots__ = ("table", "values")

    def __init__(self, table: ConjugacyClassTable, values):
        self.table = table
        self.values = tuple(Fraction(v) for v in values)

    @classmethod
    def indicator(cls, table, idx: int) -> "MarksVector":
        return cls(table, [1 if i == idx else 0 for i in range(table.size)])

    @classmethod
    def constant(cls, table, value) -> "MarksVector":
        return cls(table, [value] * table.size)

    def _check(self, other):
        if self.table is not other.table:
            raise ValueError("marks vectors live over different class tables")

    def __add__(self, other):
        self._check(other)
        return MarksVector(self.table, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return MarksVector(self.table, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        self._check(other)
        return MarksVector(self.table, [a * b for a, b in zip(self.values, other.values)])

    def scale(self, k) -> "MarksVector":
        return MarksVector(self.table, [k * a for a in self.values])

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def __eq__(self, other):
        return (isinstance(other, MarksVector) and self.table is other.table
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.table), self.values))

    def __repr__(self):
        return "marks(" + ", ".join(str(v) for v in self.values) + ")"


# ---------------------------------------------------------------------------
# marks


def table_of_marks(table: ConjugacyClassTable):
    """Rows indexed by [H] (the basis element G/H), columns by [K]: |(G/H)^K|.

    gH is K-fixed iff K^g <= H, so each entry is a count over coset
    representatives; cached on the table.
    """
    hit = table.group._caches.get("marks")
    if hit is not None:
        return hit
    G = table.group
    rows = []
    for H in table.classes:
        reps = left_cosets(G, H)
        row = []
        for K in table.classes:
            kgens = K.gens
            count = 0
            for g in reps:
                gi = inv(g)
                if all(mul(mul(gi, k), g) in H.elems for k in kgens):
                    count += 1
            row.append(count)
        rows.append(row)
    G._caches["marks"] = rows
    return rows


def chi(x: BurnsideElement) -> MarksVector:
    """The marks homomorphism: fixed-point counts of the virtual set."""
    rows = table_of_marks(x.table)
    vals = [0] * x.table.size
    for i, c in enumerate(x.coords):
        if c:
            for j in range(x.table.size):
                vals[j] += c * rows[i][j]
    return MarksVector(x.table, vals)


def from_marks_rational(table: ConjugacyClassTable, values) -> list:
    """Solve chi(x) = values over Q by back substitution on the block-triangular
    table of marks; returns rational coordinates."""
    rows = table_of_marks(table)
    n = table.size
    vals = [Fraction(v) for v in values]
    coeffs = [Fraction(0)] * n
    for j in range(n - 1, -1, -1):
        acc = vals[j]
        for i in range(j + 1, n):
            if rows[i][j]:
                acc -= coeffs[i] * rows[i][j]
        coeffs[j] = acc / rows[j][j]
    return coeffs


def from_marks(table: ConjugacyClassTable, m: MarksVector) -> BurnsideElement:
    """The unique preimage under chi; NotInImage if it is not integral."""
    coeffs = from_marks_rational(table, m.values)
    if any(c.denominator != 1 for c in coeffs):
        raise NotInImage(f"marks vector is not the character of a virtual set: {coeffs}")
    return BurnsideElement(table, [int(c) for c in coeffs])


def basis_product(table: ConjugacyClassTable, i: int, j: int):
    """[G/H_i] * [G/H_j] by the double coset formula, as a coordinate tuple."""
    cache = table.group._caches.setdefault("basis_prod", {})
    key = (i, j) if i <= j else (j, i)
    hit = cache.get(key)
    if hit is not None:
        return hit
    G = table.group
    H, K = table.classes[key[0]], table.classes[key[1]]
    out = [0] * table.size
    for g, _size in double_cosets(G, H, K):
        gi = inv(g)
        conj_H = frozenset(mul(mul(gi, h), g) for h in H.elems)
        inter = conj_H & K.elems
        out[table.class_of_elements(inter)] += 1
    out = tuple(out)
    cache[key] = out
    return out


# ---------------------------------------------------------------------------
# restriction / transfer through the explicit-set oracle


def _hom_key(phi: GroupHom):
    """A content-based cache key: a homomorphism is pinned down by its source
    generators and their images (object ids are unsafe, they get recycled)."""
    gens = phi.source.generators
    return (gens, tuple(phi(g) for g in gens))


def restriction(phi: GroupHom, x: BurnsideElement,
                src_table: ConjugacyClassTable) -> BurnsideElement:
    """Res_phi: A(G) -> A(H) for phi: H -> G, via explicit restricted coset sets."""
    tgt_table = x.table
    if tgt_table.group is not phi.target:
        raise ValueError("x must live over phi's target group")
    cache = src_table.group._caches.setdefault(("res",) + _hom_key(phi), {})
    out = BurnsideElement.zero(src_table)
    for idx, c in enumerate(x.coords):
        if c == 0:
            continue
        if idx not in cache:
            X = gsets.coset_gset(phi.target, tgt_table.classes[idx])
            cache[idx] = gsets.decompose(gsets.restrict(phi, X), src_table)
        out = out + cache[idx].scale(c)
    return out


def transfer(phi: GroupHom, x: BurnsideElement,
             tgt_table: ConjugacyClassTable) -> BurnsideElement:
    """Tr_phi: A(H) -> A(G) for phi: H -> G, via explicit induced sets."""
    src_table = x.table
    if src_table.group is not phi.source:
        raise ValueError("x must live over phi's source group")
    cache = tgt_table.group._caches.setdefault(("tr",) + _hom_key(phi), {})
    out = BurnsideElement.zero(tgt_table)
    for idx, c in enumerate(x.coords):
        if c == 0:
            continue
        if idx not in cache:
            X = gsets.coset_gset(phi.source, src_table.classes[idx])
            cache[idx] = gsets.decompose(gsets.induce(phi, X), tgt_table)
        out = out + cache[idx].scale(c)
    return out


# ---------------------------------------------------------------------------
# external products


def external_product_oracle(x: BurnsideElement, y: BurnsideElement,
                            max_elements: int = 10_000):
    """x boxtimes y in A(G x H) by decomposing the explicit product set.

    Returns (element over the product table, product group, proj_left, proj_right).
    Only defined for effective x, y (the oracle realizes actual sets); extend
    bilinearly for virtual inputs.
    """
    G, H = x.table.group, y.table.group
    P, pl, pr = direct_product(G, H, max_elements=max_elements)
    ptable = subgroup_conjugacy_classes(P)
    out = BurnsideElement.zero(ptable)
    for i, a in enumerate(x.coords):
        for j, b in enumerate(y.coords):
            if a == 0 or b == 0:
                continue
            if a < 0 or b < 0:
                raise ValueError("oracle external product needs effective inputs")
            X = gsets.coset_gset(G, x.table.classes[i])
            Y = gsets.coset_gset(H, y.table.classes[j])
            points = [(p, q) for p in X.points for q in Y.points]

            def action(w, pq, X=X, Y=Y):
                return (X.action(pl(w), pq[0]), Y.action(pr(w), pq[1]))

            Z = gsets.FiniteGSet(P, points, action)
            out = out + gsets.decompose(Z, ptable).scale(a * b)
    return out, P, pl, pr


def external_product_marks(fx: MarksVector, fy: MarksVector,
                           ptable: ConjugacyClassTable, proj_left, proj_right) -> MarksVector:
    """(f boxtimes g)([K]) = f([pi_1 K]) g([pi_2 K]) over Conj(G x H)."""
    gtab = fx.table
    htab = fy.table
    vals = []
    for K in ptable.classes:
        left = frozenset(proj_left(k) for k in K.elems)
        right = frozenset(proj_right(k) for k in K.elems)
        vals.append(fx.values[gtab.class_of_elements(left)]
                    * fy.values[htab.class_of_elements(right)])
    return MarksVector(ptable, vals)


# ---------------------------------------------------------------------------
# matrices of additive maps on marks


class AdditiveMapMatrix:
    """The exact matrix M(F) of an additive map F: A(H) -> A(G) on marks,
    in the indicator bases: F(1_[L]) = sum_K M[K][L] 1_[K]."""

    def __init__(self, src_table: ConjugacyClassTable, tgt_table: ConjugacyClassTable,
                 entries):
        self.src_table = src_table
        self.tgt_table = tgt_table
        self.entries = [[Fraction(v) for v in row] for row in entries]

    def apply(self, f: MarksVector) -> MarksVector:
        if f.table is not self.src_table:
            raise ValueError("marks vector over the wrong table")
        return MarksVector(self.tgt_table, linalg.mat_vec(self.entries, list(f.values)))

    def compose(self, other: "AdditiveMapMatrix") -> "AdditiveMapMatrix":
        """self after other."""
        if other.tgt_table is not self.src_table:
            raise ValueError("matrices are not composable")
        return AdditiveMapMatrix(other.src_table, self.tgt_table,
                                 linalg.mat_mul(self.entries, other.entries))

    @classmethod
    def identity(cls, table: ConjugacyClassTable) -> "AdditiveMapMatrix":
        n = table.size
        return cls(table, table, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (isinstance(other, AdditiveMapMatrix) and self.entries == other.entries
                and self.src_table is other.src_table and self.tgt_table is other.tgt_table)


def marks_matrix(table: ConjugacyClassTable):
    """A[j][i] = mark of basis element i at class j (chi in matrix form)."""
    rows = table_of_marks(table)
    n = table.size
    return [[Fraction(rows[i][j]) for i in range(n)] for j in range(n)]


def matrix_of_additive_map(images: Iterable[BurnsideElement],
                           src_table: ConjugacyClassTable,
                           tgt_table: ConjugacyClassTable) -> AdditiveMapMatrix:
    """M(F) from the images F([H/L]) of all basis elements of A(H).

    M = X_G . B . X_H^-1 where X are the marks matrices and B the integer
    matrix of F in the transitive bases.
    """
    images = list(images)
    if len(images) != src_table.size:
        raise ValueError("need one image per basis element of the source")
    n_t = tgt_table.size
    B = [[Fraction(images[j].coords[i]) for j in range(src_table.size)] for i in range(n_t)]
    XG = marks_matrix(tgt_table)
    XH_inv = linalg.invert(marks_matrix(src_table))
    return AdditiveMapMatrix(src_table, tgt_table,
                             linalg.mat_mul(linalg.mat_mul(XG, B), XH_inv))


def transfer_matrix(phi: GroupHom, src_table: ConjugacyClassTable,
                    tgt_table: ConjugacyClassTable) -> AdditiveMapMatrix:
    """M(Tr_phi) via the explicit-set oracle."""
    images = [transfer(phi, BurnsideElement.basis(src_table, i), tgt_table)
              for i in range(src_table.size)]
    return matrix_of_additive_map(images, src_table, tgt_table)


def restriction_matrix(phi: GroupHom, src_table: ConjugacyClassTable,
                       tgt_table: ConjugacyClassTable) -> AdditiveMapMatrix:
    """M(Res_phi) for phi: H -> G as a map A(G) -> A(H) (src=G-table, tgt=H-table)."""
    images = [restriction(phi, BurnsideElement.basis(src_table, i), tgt_table)
              for i in range(src_table.size)]
    return matrix_of_additive_map(images, src_table, tgt_table)


# ---------------------------------------------------------------------------
# transfer on marks along an inclusion (classical formula, for cross-checks)


def transfer_marks_inclusion(G: PermGroup, H: SubgroupRef,
                             h_table: ConjugacyClassTable,
                             g_table: ConjugacyClassTable,
                             f: MarksVector) -> MarksVector:
    """Tr_{H<=G}(f)([K]) = sum over gH with K^g <= H of f([K^g])."""
    vals = []
    for K in g_table.classes:
        acc = Fraction(0)
        for g in left_cosets(G, H):
            gi = inv(g)
            conj = frozenset(mul(mul(gi, k), g) for k in K.elems)
            if conj <= H.elems:
                acc += f.values[h_table.class_of_elements(conj)]
        vals.append(acc)
    return MarksVector(g_table, vals)


def marks_transfer_product(f: MarksVector, g: MarksVector, G: PermGroup,
                           i: int, j: int, wi, wj, wn,
                           ti: ConjugacyClassTable, tj: ConjugacyClassTable,
                           tn: ConjugacyClassTable) -> MarksVector:
    """The transfer product on marks of wreath products.

    (f star g)([H]) sums f(pi_[i][H^s]) g(pi_[j][H^s]) over those coset
    representatives s of Sigma_n/(Sigma_i x Sigma_j) with H^s inside
    G wr Sigma_i x G wr Sigma_j.
    """
    import itertools as _it
    n = i + j
    d = G.degree
    # order-preserving shuffles: sigma maps [0,i) onto S ascending, rest onto complement
    shuffles = []
    for S in _it.combinations(range(n), i):
        comp = [a for a in range(n) if a not in S]
        sigma = list(S) + comp  # sigma(k) for k in [0,n)
        shuffles.append(tuple(sigma))
    vals = []
    for H in tn.classes:
        acc = Fraction(0)
        for sigma in shuffles:
            w_sigma = wn.encode([G.identity] * n if n else [], sigma) if n else wn.identity
            wsi = inv(w_sigma)
            conj = [mul(mul(wsi, h), w_sigma) for h in H.elems]
            ok = True
            left = set()
            right = set()
            for h in conj:
                _, sig, _ = wn.decode(h)
                if any((sig[a] < i) != (a < i) for a in range(n)):
                    ok = False
                    break
            if not ok:
                continue
            for h in conj:
                left.add(tuple(h[:i * d]))
                right.add(tuple(h[x] - i * d for x in range(i * d, n * d)))
            acc += (f.values[ti.class_of_elements(frozenset(left))]
                    * g.values[tj.class_of_elements(frozenset(right))])
        vals.append(acc)
    return MarksVector(tn, vals)
