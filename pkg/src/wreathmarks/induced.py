"""Induced maps on parks: lifting any additive map of Burnside rings to the
wreath-power subrings, plus the closed-form specializations for transfers
along inclusions, the transfer to the trivial group (the generalized orbit
counting lemma), restrictions along class functions, the Frobenius-Wielandt
maps, norms, and the gcd-property test.

Each specialization is implemented independently of the general lift so the
two routes can be asserted equal; n-degree matrices vanish off the blocks
where source and target partitions share an underlying integer partition.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .burnside import (AdditiveMapMatrix, BurnsideElement, MarksVector, chi,
                       from_marks, transfer_matrix)
from .errors import FWIntegralityError, NotInImage
from .groups import (ConjugacyClassTable, GroupHom, SubgroupRef, element_order,
                     close_under_product, double_cosets, inv, left_cosets,
                     monomial_representation, mul, normalizer)
from .partitions import (DecoratedPartition, canonical_composition,
                         compositions_matching_sizes, enumerate_partitions)
from .wreath_power import AAElement, ParksVector, beta, from_parks, parks_char, parts_for, r_map


class ParksMapMatrix:
    """A linear map Parks(H, n, Q) -> Parks(G, n, Q) in the indicator bases,
    stored sparsely as {(target kappa, source lam): value}."""

    def __init__(self, src_table: ConjugacyClassTable, tgt_table: ConjugacyClassTable,
                 n: int, entries: dict):
        self.src_table = src_table
        self.tgt_table = tgt_table
        self.n = n
        self.entries = {k: Fraction(v) for k, v in entries.items() if v}

    def apply(self, f: ParksVector) -> ParksVector:
        if f.table is not self.src_table or f.n != self.n:
            raise ValueError("parks vector does not match this matrix")
        out: dict = {}
        for (ka, la), v in self.entries.items():
            fv = f.values.get(la)
            if fv:
                out[ka] = out.get(ka, Fraction(0)) + v * fv
        return ParksVector(self.tgt_table, self.n, out)

    def compose(self, other: "ParksMapMatrix") -> "ParksMapMatrix":
        """self after other."""
        if other.tgt_table is not self.src_table or other.n != self.n:
            raise ValueError("matrices are not composable")
        out: dict = {}
        for (ka, mid), v in self.entries.items():
            for (mid2, la), w in other.entries.items():
                if mid2 == mid:
                    key = (ka, la)
                    out[key] = out.get(key, Fraction(0)) + v * w
        return ParksMapMatrix(other.src_table, self.tgt_table, self.n, out)

    @classmethod
    def identity(cls, table: ConjugacyClassTable, n: int) -> "ParksMapMatrix":
        return cls(table, table, n, {(la, la): Fraction(1) for la in parts_for(table, n)})

    def __eq__(self, other):
        return (isinstance(other, ParksMapMatrix) and self.n == other.n
                and self.src_table is other.src_table and self.tgt_table is other.tgt_table
                and self.entries == other.entries)

    def __repr__(self):
        return f"<ParksMapMatrix degree {self.n} with {len(self.entries)} entries>"


def lift_map(M: AdditiveMapMatrix, n: int) -> ParksMapMatrix:
    """Lift an additive map F: A(H) -> A(G) (given by its marks matrix) to
    degree-n parks.

    The (kappa, lam) entry sums, over compositions ell of lam whose size
    sequence matches a fixed composition of kappa, the products of matrix
    entries M[kappa_i-decoration][ell_i-decoration].
    """
    src = M.src_table
    tgt = M.tgt_table
    entries: dict = {}
    src_parts_by_shape: dict = {}
    for la in parts_for(src, n):
        src_parts_by_shape.setdefault(la.undecorate(), []).append(la)
    for ka in parts_for(tgt, n):
        cka = canonical_composition(ka)
        sizes = cka.sizes()
        decs = cka.decorations()
        for la in src_parts_by_shape.get(ka.undecorate(), ()):
            total = Fraction(0)
            for ell in compositions_matching_sizes(la, sizes):
                prod = Fraction(1)
                for kdec, (ldec, _s) in zip(decs, ell):
                    prod *= M.entries[kdec][ldec]
                    if prod == 0:
                        break
                total += prod
            if total:
                entries[(ka, la)] = total
    return ParksMapMatrix(src, tgt, n, entries)


def parks_map_single_column(src_table: ConjugacyClassTable, tgt_table: ConjugacyClassTable,
                            n: int, psi: list, coeffs: list) -> ParksMapMatrix:
    """The closed form when each source class maps to a single target class:
    entry at (psi_* lam, lam) is (psi_* lam)!/lam! times the product of the
    per-class coefficients. The factorial ratio is always an integer."""
    entries: dict = {}
    for la in parts_for(src_table, n):
        ka = la.pushforward(lambda d: psi[d])
        ratio, rem = divmod(ka.factorial(), la.factorial())
        if rem:
            raise ArithmeticError("factorial ratio (psi_* lam)!/lam! not integral")
        val = Fraction(ratio)
        for (dec, _size), mult in la.items():
            val *= Fraction(coeffs[dec]) ** mult
            if val == 0:
                break
        if val:
            entries[(ka, la)] = entries.get((ka, la), Fraction(0)) + val
    return ParksMapMatrix(src_table, tgt_table, n, entries)


def restriction_parks(src_table: ConjugacyClassTable, tgt_table: ConjugacyClassTable,
                      psi: list, n: int) -> ParksMapMatrix:
    """Restriction along a class function psi: Conj(G) -> Conj(H) (indices into
    src_table): the lifted map sends f to f(psi_* kappa).

    src_table belongs to H (the map's source ring A(H)), tgt_table to G.
    """
    entries: dict = {}
    for ka in parts_for(tgt_table, n):
        la = ka.pushforward(lambda d: psi[d])
        entries[(ka, la)] = Fraction(1)
    return ParksMapMatrix(src_table, tgt_table, n, entries)


# ---------------------------------------------------------------------------
# transfers along a subgroup inclusion


def inclusion_class_map(g_table: ConjugacyClassTable, h_table: ConjugacyClassTable) -> list:
    """Conj(H) -> Conj(G) for H's classes viewed as subgroups of G."""
    return [g_table.class_of_elements(rep.elems) for rep in h_table.classes]


def inclusion_transfer_coeffs(g_table: ConjugacyClassTable, H: SubgroupRef,
                              h_table: ConjugacyClassTable) -> list:
    """M(Tr_{H<=G})_[L] = [N_G(L) : N_H(L)] per class [L] of H."""
    G = g_table.group
    H_group = h_table.group
    out = []
    for L in h_table.classes:
        L_in_G = SubgroupRef(G, L.elems)
        n_g = normalizer(G, L_in_G).order
        n_h = normalizer(H_group, L).order
        out.append(Fraction(n_g, n_h))
    return out


def transfer_parks_inclusion(g_table: ConjugacyClassTable, H: SubgroupRef,
                             h_table: ConjugacyClassTable, n: int) -> ParksMapMatrix:
    """Closed form for Tr_{H<=G} on degree-n parks via normalizer indices."""
    psi = inclusion_class_map(g_table, h_table)
    coeffs = inclusion_transfer_coeffs(g_table, H, h_table)
    return parks_map_single_column(h_table, g_table, n, psi, coeffs)


def transfer_parks_inclusion_via_cosets(g_table: ConjugacyClassTable, H: SubgroupRef,
                                        h_table: ConjugacyClassTable, n: int) -> ParksMapMatrix:
    """The coset-sum form: order kappa's parts, choose subgroup representatives,
    and sum over coset tuples taking every representative into H."""
    G = g_table.group
    reps = left_cosets(G, H)
    h_elems = H.elems
    entries: dict = {}
    for ka in parts_for(g_table, n):
        expanded = [(g_table.classes[d], s) for d, s in ka.expand()]
        for gtuple in itertools.product(reps, repeat=len(expanded)):
            parts = []
            ok = True
            for (K, s), g in zip(expanded, gtuple):
                gi = inv(g)
                conj = frozenset(mul(mul(gi, k), g) for k in K.elems)
                if not conj <= h_elems:
                    ok = False
                    break
                parts.append(((h_table.class_of_elements(conj), s), 1))
            if ok:
                la = DecoratedPartition(parts)
                key = (ka, la)
                entries[key] = entries.get(key, Fraction(0)) + 1
    return ParksMapMatrix(h_table, g_table, n, entries)


def transfer_parks_inclusion_via_lift(g_table: ConjugacyClassTable, H: SubgroupRef,
                                      h_table: ConjugacyClassTable, n: int) -> ParksMapMatrix:
    """The generic route: lift the oracle-computed marks matrix of Tr."""
    phi = GroupHom.inclusion(h_table.group, g_table.group)
    return lift_map(transfer_matrix(phi, h_table, g_table), n)


# ---------------------------------------------------------------------------
# transfer to the trivial group: the generalized orbit counting lemma


def euler_phi(n: int) -> int:
    out = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            out += 1
    return out


def cyclic_subgroup_class(g_table: ConjugacyClassTable):
    """Element -> class index of the cyclic subgroup it generates."""
    G = g_table.group
    out = {}
    for g in G.elements:
        out[g] = g_table.class_of_elements(close_under_product(G.degree, [g]))
    return out


def transfer_parks_trivial(g_table: ConjugacyClassTable, e_table: ConjugacyClassTable,
                           n: int) -> ParksMapMatrix:
    """Tr_{G->e} on degree-n parks, by direct generalized-Burnside averaging:
    Tr(f)(lam) = |G|^{-|lam|} sum over tuples of group elements (one per part)
    of f at the partition decorated by the generated cyclic subgroups."""
    G = g_table.group
    gen_class = cyclic_subgroup_class(g_table)
    entries: dict = {}
    for la in enumerate_partitions(1, n):
        sizes = canonical_composition(la).sizes()
        denom = G.order ** la.length
        for gtuple in itertools.product(G.elements, repeat=la.length):
            ka = DecoratedPartition([((gen_class[g], s), 1) for g, s in zip(gtuple, sizes)])
            key = (la, ka)
            entries[key] = entries.get(key, Fraction(0)) + Fraction(1, denom)
    return ParksMapMatrix(g_table, e_table, n, entries)


def trivial_transfer_coeffs(g_table: ConjugacyClassTable) -> list:
    """M(Tr_{G->e})_[K]: phi(|K|)/|N_G(K)| for cyclic K, else 0."""
    G = g_table.group
    out = []
    for K in g_table.classes:
        orders = sorted({element_order(x) for x in K.elems})
        cyclic = orders[-1] == K.order
        if cyclic:
            out.append(Fraction(euler_phi(K.order), normalizer(G, K).order))
        else:
            out.append(Fraction(0))
    return out


def transfer_parks_trivial_via_coeffs(g_table: ConjugacyClassTable,
                                      e_table: ConjugacyClassTable, n: int) -> ParksMapMatrix:
    psi = [0] * g_table.size
    return parks_map_single_column(g_table, e_table, n, psi, trivial_transfer_coeffs(g_table))


# ---------------------------------------------------------------------------
# Frobenius-Wielandt


class FWMap:
    """The ring map A(C_m) -> A(G) induced on marks by pulling back along the
    function sending [H] to the unique subgroup of C_m of order |H|."""

    def __init__(self, g_table: ConjugacyClassTable, c_table: ConjugacyClassTable):
        self.g_table = g_table
        self.c_table = c_table
        order_to_class = {}
        for i, rep in enumerate(c_table.classes):
            if rep.order in order_to_class:
                raise ValueError("source table is not a cyclic group")
            order_to_class[rep.order] = i
        self.cyc = [order_to_class[rep.order] for rep in g_table.classes]

    def marks_matrix(self) -> AdditiveMapMatrix:
        rows = [[1 if self.cyc[k] == l else 0 for l in range(self.c_table.size)]
                for k in range(self.g_table.size)]
        return AdditiveMapMatrix(self.c_table, self.g_table, rows)

    def apply_marks(self, f: MarksVector) -> MarksVector:
        if f.table is not self.c_table:
            raise ValueError("marks vector must live over the cyclic group")
        return MarksVector(self.g_table, [f.values[self.cyc[k]] for k in range(self.g_table.size)])

    def __call__(self, x: BurnsideElement) -> BurnsideElement:
        if x.table is not self.c_table:
            raise ValueError("element must live over the cyclic group")
        try:
            return from_marks(self.g_table, self.apply_marks(chi(x)))
        except NotInImage as exc:
            raise FWIntegralityError(str(exc)) from None

    def parks_matrix(self, n: int) -> ParksMapMatrix:
        return restriction_parks(self.c_table, self.g_table, self.cyc, n)

    def apply_parks(self, f: ParksVector) -> ParksVector:
        """Precomposition with the pushforward of the class function."""
        if f.table is not self.c_table:
            raise ValueError("parks vector must live over the cyclic group")
        out: dict = {}
        for ka in parts_for(self.g_table, f.n):
            v = f(ka.pushforward(lambda d: self.cyc[d]))
            if v:
                out[ka] = v
        return ParksVector(self.g_table, f.n, out)


def fw_map(g_table: ConjugacyClassTable, c_table: ConjugacyClassTable) -> FWMap:
    return FWMap(g_table, c_table)


def fw_wreath(fw: FWMap, x: BurnsideElement) -> AAElement:
    """w_n: A(C_m wr Sigma_n) -> A(G wr Sigma_n), landing in the combinatorial
    subring: retract to the subring over C_m, push the parks character through
    the class function, and solve back to an integral element over G."""
    wtable = x.table
    aa_c = r_map(x, fw.c_table)
    f = parks_char(aa_c)
    g = fw.apply_parks(f)
    try:
        return from_parks(fw.g_table, aa_c.n, g)
    except NotInImage as exc:
        raise FWIntegralityError(str(exc)) from None


# ---------------------------------------------------------------------------
# norms along the monomial representation


def norm_partition(g_table: ConjugacyClassTable, H: SubgroupRef,
                   h_table: ConjugacyClassTable, K: SubgroupRef) -> DecoratedPartition:
    """The partition sum over K\\G/H of ([K^a cap H], |KaH|/|H|)."""
    G = g_table.group
    parts = []
    for a, size in double_cosets(G, K, H):
        ai = inv(a)
        conj = frozenset(mul(mul(ai, k), a) for k in K.elems)
        inter = conj & H.elems
        parts.append(((h_table.class_of_elements(inter), size // H.order), 1))
    return DecoratedPartition(parts)


def norm_restriction(g_table: ConjugacyClassTable, H: SubgroupRef,
                     h_table: ConjugacyClassTable, f: ParksVector) -> MarksVector:
    """Evaluate degree-[G:H] parks through the double-coset partition of each
    class: the composite of beta^* with restriction along the monomial map."""
    n = g_table.group.order // H.order
    if f.n != n:
        raise ValueError(f"parks vector must have degree [G:H] = {n}")
    vals = [f(norm_partition(g_table, H, h_table, K)) for K in g_table.classes]
    return MarksVector(g_table, vals)


def norm_restriction_via_monomial(g_table: ConjugacyClassTable, H: SubgroupRef,
                                  h_table: ConjugacyClassTable, f: ParksVector) -> MarksVector:
    """Same map, computed from the actual monomial representation and beta."""
    G = g_table.group
    phi = monomial_representation(G, H)
    W = phi.target
    vals = []
    for K in g_table.classes:
        image = SubgroupRef(W, phi.image_of(K.elems))
        vals.append(f(beta(W, image, h_table)))
    return MarksVector(g_table, vals)


def norm_classical_marks(g_table: ConjugacyClassTable, H: SubgroupRef,
                         h_table: ConjugacyClassTable, f: MarksVector) -> MarksVector:
    """Nm(f)([K]) = product over K\\G/H of f([K^g cap H])."""
    G = g_table.group
    vals = []
    for K in g_table.classes:
        acc = Fraction(1)
        for a, _size in double_cosets(G, K, H):
            ai = inv(a)
            conj = frozenset(mul(mul(ai, k), a) for k in K.elems)
            inter = conj & H.elems
            acc *= f.values[h_table.class_of_elements(inter)]
        vals.append(acc)
    return MarksVector(g_table, vals)


# ---------------------------------------------------------------------------
# the gcd property and commutation with the Frobenius-Wielandt map


def gcd_property(g_table: ConjugacyClassTable, H: SubgroupRef) -> bool:
    """|K cap H| = gcd(|K|, |H|) for every subgroup K (not just class reps:
    the intersection size is not conjugation invariant)."""
    for K in g_table.all_subgroups:
        if len(K.elems & H.elems) != math.gcd(K.order, H.order):
            return False
    return True


def fw_commutes_with_norm(g_table: ConjugacyClassTable, H: SubgroupRef,
                          h_table: ConjugacyClassTable,
                          ch_table: ConjugacyClassTable) -> bool:
    """Whether the double-coset partition pushed to cyclic decorations collapses
    to the single-part gcd/lcm form, for every class [K]. Equivalent to the
    norm commuting with the Frobenius-Wielandt map."""
    order_to_class = {rep.order: i for i, rep in enumerate(ch_table.classes)}
    h_ord = H.order
    G = g_table.group
    for K in g_table.classes:
        lcm = K.order * h_ord // math.gcd(K.order, h_ord)
        lhs_parts = []
        for a, size in double_cosets(G, K, H):
            ai = inv(a)
            conj = frozenset(mul(mul(ai, k), a) for k in K.elems)
            inter_order = len(conj & H.elems)
            lhs_parts.append(((order_to_class[inter_order], size // h_ord), 1))
        lhs = DecoratedPartition(lhs_parts)
        mult, rem = divmod(G.order, lcm)
        if rem:
            return False
        rhs = DecoratedPartition.from_part(order_to_class[math.gcd(K.order, h_ord)],
                                           lcm // h_ord, mult)
        if lhs != rhs:
            return False
    return True
