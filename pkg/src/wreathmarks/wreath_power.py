"""The combinatorial subring of A(G wr Sigma_n) indexed by decorated partitions.

A basis element is a decorated partition lam of n, realized inside the wreath
product as the coset space (G wr Sigma_n)/alpha(lam), where alpha(lam) is a
product of subgroups H wr Sigma_m. The retract beta reads a partition off any
subgroup from its orbit data on [n]; alpha and beta satisfy beta(alpha(lam)) = lam.

Design choices worth knowing:
  * internal products of basis elements are computed by multiplying explicit
    coset spaces and reading orbit stabilizers through beta (orbit stabilizers
    of such sets are their own hulls, so no Conj(G wr Sigma_n) table is needed);
  * total power operations are computed as truncated strict-unit power series
    in the graded monoid ring, which handles negative coordinates uniformly;
  * parks characters of basis elements are assembled from the product formula
    for power characters plus the star product, with the coset-space
    fixed-point count kept only as an oracle cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Dict

from . import gsets, linalg
from .burnside import BurnsideElement, MarksVector, table_of_marks
from .errors import CapExceeded, NotInImage
from .groups import (DEFAULT_ELEMENT_CAP, ConjugacyClassTable, SubgroupRef,
                     WreathGroup, close_under_product, identity, wreath_product)
from .partitions import (DecoratedPartition, canonical_composition,
                         enumerate_partitions)

Coords = Dict[DecoratedPartition, int]


def parts_for(table: ConjugacyClassTable, n: int) -> tuple:
    """Parts(G, n) in the canonical enumeration order; cached on the table."""
    cache = table.group._caches.setdefault("parts", {})
    if n not in cache:
        cache[n] = tuple(enumerate_partitions(table.size, n))
    return cache[n]


class AAElement:
    """An integer combination of decorated partitions of n: an element of the
    submissive-set Grothendieck ring in degree n."""

    __slots__ = ("table", "n", "coords")

    def __init__(self, table: ConjugacyClassTable, n: int, coords: Coords):
        self.table = table
        self.n = n
        clean = {}
        for la, c in coords.items():
            if la.size != n:
                raise ValueError(f"partition {la!r} has size {la.size}, expected {n}")
            if c:
                clean[la] = int(c)
        self.coords = clean

    @classmethod
    def basis(cls, table, la: DecoratedPartition) -> "AAElement":
        return cls(table, la.size, {la: 1})

    @classmethod
    def zero(cls, table, n: int) -> "AAElement":
        return cls(table, n, {})

    @classmethod
    def one(cls, table) -> "AAElement":
        return cls(table, 0, {DecoratedPartition.empty(): 1})

    def _check(self, other):
        if self.table is not other.table:
            raise ValueError("elements live over different groups")

    def __add__(self, other):
        self._check(other)
        if self.n != other.n:
            raise ValueError("cannot add different degrees")
        out = dict(self.coords)
        for la, c in other.coords.items():
            out[la] = out.get(la, 0) + c
        return AAElement(self.table, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int) -> "AAElement":
        return AAElement(self.table, self.n, {la: k * c for la, c in self.coords.items()})

    def star(self, other: "AAElement") -> "AAElement":
        """Transfer product: on basis partitions kappa star lam = kappa + lam."""
        self._check(other)
        out: Coords = {}
        for ka, a in self.coords.items():
            for la, b in other.coords.items():
                mu = ka + la
                out[mu] = out.get(mu, 0) + a * b
        return AAElement(self.table, self.n + other.n, out)

    def __eq__(self, other):
        return (isinstance(other, AAElement) and self.table is other.table
                and self.n == other.n and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.table), self.n, tuple(sorted(self.coords.items(),
                                                          key=lambda kv: kv[0].sort_key()))))

    def support(self):
        return sorted(self.coords, key=DecoratedPartition.sort_key)

    def __repr__(self):
        if not self.coords:
            return f"0 (degree {self.n})"
        return " + ".join(f"{c}*{{{la!r}}}" for la, c in
                          sorted(self.coords.items(), key=lambda kv: kv[0].sort_key()))


class ParksVector:
    """A rational function on Parts(G, n), sparsely stored."""

    __slots__ = ("table", "n", "values")

    def __init__(self, table: ConjugacyClassTable, n: int, values):
        self.table = table
        self.n = n
        clean = {}
        for la, v in values.items():
            fv = Fraction(v)
            if la.size != n:
                raise ValueError(f"partition {la!r} has size {la.size}, expected {n}")
            if fv:
                clean[la] = fv
        self.values = clean

    @classmethod
    def indicator(cls, table, la: DecoratedPartition) -> "ParksVector":
        return cls(table, la.size, {la: 1})

    @classmethod
    def zero(cls, table, n: int) -> "ParksVector":
        return cls(table, n, {})

    def __call__(self, la: DecoratedPartition) -> Fraction:
        return self.values.get(la, Fraction(0))

    def _check(self, other):
        if self.table is not other.table:
            raise ValueError("parks vectors live over different groups")

    def __add__(self, other):
        self._check(other)
        if self.n != other.n:
            raise ValueError("cannot add different degrees")
        out = dict(self.values)
        for la, v in other.values.items():
            out[la] = out.get(la, Fraction(0)) + v
        return ParksVector(self.table, self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k) -> "ParksVector":
        return ParksVector(self.table, self.n, {la: k * v for la, v in self.values.items()})

    def __mul__(self, other):
        """Pointwise product (the internal ring structure of a fixed degree)."""
        self._check(other)
        if self.n != other.n:
            raise ValueError("pointwise product needs matching degrees")
        out = {}
        for la, v in self.values.items():
            w = other.values.get(la)
            if w:
                out[la] = v * w
        return ParksVector(self.table, self.n, out)

    def star(self, other: "ParksVector") -> "ParksVector":
        """(f star g)(mu) = sum over kappa+lam=mu of mu!/(kappa! lam!) f(kappa) g(lam)."""
        self._check(other)
        out: dict = {}
        for ka, a in self.values.items():
            kfact = ka.factorial()
            for la, b in other.values.items():
                mu = ka + la
                coeff = Fraction(mu.factorial(), kfact * la.factorial())
                out[mu] = out.get(mu, Fraction(0)) + coeff * a * b
        return ParksVector(self.table, self.n + other.n, out)

    def star_value_via_compositions(self, other: "ParksVector", mu: DecoratedPartition):
        """Composition form of the star product at mu: sum over ordered
        two-block set partitions I ⊔ J of the part positions."""
        self._check(other)
        c = canonical_composition(mu)
        total = Fraction(0)
        idx = range(len(c))
        for r in range(len(c) + 1):
            for I in combinations(idx, r):
                J = tuple(i for i in idx if i not in I)
                total += (self(c.restrict(I).un_index())
                          * other(c.restrict(J).un_index()))
        return total

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values.values())

    def __eq__(self, other):
        return (isinstance(other, ParksVector) and self.table is other.table
                and self.n == other.n and self.values == other.values)

    def __repr__(self):
        if not self.values:
            return f"parks 0 (degree {self.n})"
        return " + ".join(f"{v}*1_{{{la!r}}}" for la, v in
                          sorted(self.values.items(), key=lambda kv: kv[0].sort_key()))


# ---------------------------------------------------------------------------
# alpha, beta, hull, r


def alpha(table: ConjugacyClassTable, la: DecoratedPartition,
          max_elements: int = DEFAULT_ELEMENT_CAP) -> SubgroupRef:
    """The product subgroup prod (H wr Sigma_m) inside G wr Sigma_n for lam.

    Parts occupy consecutive blocks of [n] in canonical part order, matching the
    order-preserving embedding convention.
    """
    G = table.group
    n = la.size
    cache = G._caches.setdefault("alpha", {})
    if la in cache:
        return cache[la]
    W, _, _ = wreath_product(G, n, max_elements=max_elements)
    expected = 1
    for cls_idx, s in la.expand():
        expected *= table.classes[cls_idx].order ** s * math.factorial(s)
    if expected > max_elements:
        raise CapExceeded("alpha subgroup size", expected, max_elements)
    d = G.degree
    gens = []
    offset = 0
    for cls_idx, s in la.expand():
        H = table.classes[cls_idx]
        for h in H.gens:
            gbar = [identity(d)] * n
            gbar[offset] = h
            gens.append(W.encode(gbar, identity(n)))
        if s >= 2:
            sig = list(range(n))
            sig[offset], sig[offset + 1] = offset + 1, offset
            gens.append(W.encode([identity(d)] * n, tuple(sig)))
        if s >= 3:
            sig = list(range(n))
            for t in range(s):
                sig[offset + t] = offset + (t + 1) % s
            gens.append(W.encode([identity(d)] * n, tuple(sig)))
        offset += s
    sub = SubgroupRef(W, close_under_product(W.degree, gens))
    if sub.order != expected:
        raise AssertionError("alpha subgroup closure has unexpected order")
    cache[la] = sub
    return sub


class OrbitTypeRecord:
    """Orbit data of a subgroup H <= G wr Sigma_n on [n]: the orbits, and for
    each orbit the class of H_ii at its representative and the orbit size."""

    def __init__(self, W: WreathGroup, sub: SubgroupRef, table: ConjugacyClassTable):
        self.W = W
        self.sub = sub
        n = W.n
        seen = set()
        orbit_of = {}
        orbits = []
        sig_gens = [W.decode(g)[1] for g in sub.gens]
        for i in range(n):
            if i in seen:
                continue
            orb = {i}
            frontier = [i]
            while frontier:
                a = frontier.pop()
                for sig in sig_gens:
                    b = sig[a]
                    if b not in orb:
                        orb.add(b)
                        frontier.append(b)
            seen |= orb
            orbits.append(tuple(sorted(orb)))
        self.orbits = tuple(orbits)
        stab_sets = {orb[0]: set() for orb in orbits}
        for w in sub.elems:
            gbar, sig, _ = W.decode(w)
            for rep in stab_sets:
                if sig[rep] == rep:
                    stab_sets[rep].add(gbar[rep])
        self.entries = tuple(
            (table.class_of_elements(frozenset(stab_sets[orb[0]])), len(orb))
            for orb in orbits
        )

    def partition(self) -> DecoratedPartition:
        return DecoratedPartition([((cls, size), 1) for cls, size in self.entries])


def beta(W: WreathGroup, sub: SubgroupRef, table: ConjugacyClassTable) -> DecoratedPartition:
    """Read off the decorated partition sum of ([H_ii], |Hi|) over orbits."""
    return OrbitTypeRecord(W, sub, table).partition()


def transporter_sets(W: WreathGroup, sub: SubgroupRef) -> dict:
    """The sets H_ij = {gbar_j : (gbar, sigma) in H, sigma(i) = j}."""
    n = W.n
    out: dict = {}
    for w in sub.elems:
        gbar, sig, sig_inv = W.decode(w)
        for j in range(n):
            i = sig_inv[j]
            out.setdefault((i, j), set()).add(gbar[j])
    return {k: frozenset(v) for k, v in out.items()}


def hull(W: WreathGroup, sub: SubgroupRef) -> SubgroupRef:
    """The largest subgroup with the same transporter data:
    H' = {(gbar, sigma) : gbar_{sigma(i)} in H_{i sigma(i)} for all i}."""
    hsets = transporter_sets(W, sub)
    n = W.n
    keep = []
    for w in W.elements:
        gbar, sig, _ = W.decode(w)
        ok = True
        for i in range(n):
            j = sig[i]
            allowed = hsets.get((i, j))
            if allowed is None or gbar[j] not in allowed:
                ok = False
                break
        if ok:
            keep.append(w)
    return SubgroupRef(W, frozenset(keep))


def r_map(x: BurnsideElement, g_table: ConjugacyClassTable) -> AAElement:
    """The retract A(G wr Sigma_n) -> combinatorial subring: basis class [H]
    goes to the basis partition beta([H])."""
    wtable = x.table
    W = wtable.group
    if not isinstance(W, WreathGroup):
        raise ValueError("r_map needs an element over a wreath-product table")
    out: Coords = {}
    for idx, c in enumerate(x.coords):
        if c == 0:
            continue
        la = beta(W, wtable.classes[idx], g_table)
        out[la] = out.get(la, 0) + c
    return AAElement(g_table, W.n, out)


def embed(x: AAElement, wtable: ConjugacyClassTable) -> BurnsideElement:
    """Write an element of the subring in the full A(G wr Sigma_n) basis."""
    coords = [0] * wtable.size
    for la, c in x.coords.items():
        sub = alpha(x.table, la)
        coords[wtable.class_of_elements(sub.elems)] += c
    return BurnsideElement(wtable, coords)


# ---------------------------------------------------------------------------
# total power operations


def _series_mul(a: dict, b: dict, trunc: int) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            if ka.size + kb.size > trunc:
                continue
            mu = ka + kb
            out[mu] = out.get(mu, 0) + ca * cb
            if out[mu] == 0:
                del out[mu]
    return out


def _series_inverse(s: dict, trunc: int) -> dict:
    """Invert a strict unit (constant term 1) in the truncated monoid ring."""
    by_deg: dict = {}
    for la, c in s.items():
        by_deg.setdefault(la.size, {})[la] = c
    inv_terms: dict = {0: {DecoratedPartition.empty(): 1}}
    for deg in range(1, trunc + 1):
        acc: dict = {}
        for k in range(1, deg + 1):
            sk = by_deg.get(k)
            if not sk:
                continue
            tk = inv_terms.get(deg - k)
            if not tk:
                continue
            for la, c in _series_mul(sk, tk, trunc).items():
                acc[la] = acc.get(la, 0) + c
        inv_terms[deg] = {la: -c for la, c in acc.items() if c}
    out: dict = {}
    for terms in inv_terms.values():
        out.update(terms)
    return out


def power_series(x: BurnsideElement, trunc: int) -> dict:
    """All P_i(x) for i <= trunc at once, as one partition->int dict.

    The total power operation is the unique strict-unit homomorphism sending a
    basis class [G/H] to 1 + ([H],1) + ([H],2) + ...; negative coordinates
    invert that series.
    """
    out: dict = {DecoratedPartition.empty(): 1}
    for cls_idx, coeff in enumerate(x.coords):
        if coeff == 0:
            continue
        base = {DecoratedPartition.empty(): 1}
        for m in range(1, trunc + 1):
            base[DecoratedPartition.from_part(cls_idx, m)] = 1
        factor = base if coeff > 0 else _series_inverse(base, trunc)
        for _ in range(abs(coeff)):
            out = _series_mul(out, factor, trunc)
    return out


def power_op(x: BurnsideElement, n: int) -> AAElement:
    """P_n(x), for arbitrary (possibly virtual) x."""
    g_table = x.table
    series = power_series(x, n)
    return AAElement(g_table, n, {la: c for la, c in series.items() if la.size == n})


def power_op_partition(x: BurnsideElement, la: DecoratedPartition) -> AAElement:
    """P_lambda(x) = star product of P_k(x)^{star mult} over the parts of an
    integer partition lambda."""
    series = power_series(x, la.size)
    out = AAElement.one(x.table)
    for (_, k), m in la.items():
        pk = AAElement(x.table, k, {mu: c for mu, c in series.items() if mu.size == k})
        for _ in range(m):
            out = out.star(pk)
    return out


def power_op_difference_closed(x: BurnsideElement, y: BurnsideElement, n: int) -> AAElement:
    """P_n(x - y) by the closed alternating-sum formula over integer partitions:
    sum over i + ||lam|| = n of (-1)^{|lam|} (|lam|!/lam!) P_i(x) star P_lam(y)."""
    out = AAElement.zero(x.table, n)
    for i in range(n + 1):
        pix = power_op(x, i)
        if not pix.coords:
            continue
        for la in enumerate_partitions(1, n - i):
            sign = -1 if la.length % 2 else 1
            count = math.factorial(la.length) // la.factorial()
            term = pix.star(power_op_partition(y, la)).scale(sign * count)
            out = out + term
    return out


def power_op_difference_inductive(x: BurnsideElement, y: BurnsideElement, n: int) -> AAElement:
    """P_n(x - y) by enforcing the additivity relation inductively:
    P_n(x) = sum_{i+j=n} P_i(x-y) star P_j(y)."""
    table = x.table
    memo: dict = {}

    def d(k: int) -> AAElement:
        if k in memo:
            return memo[k]
        acc = power_op(x, k)
        for j in range(1, k + 1):
            acc = acc - d(k - j).star(power_op(y, j))
        memo[k] = acc
        return acc

    memo[0] = AAElement.one(table)
    return d(n)


# ---------------------------------------------------------------------------
# parks characters


def parks_power_char(f: MarksVector, n: int) -> ParksVector:
    """P_n on marks: P_n(f)(lam) = prod over parts f([H])^multiplicity."""
    table = f.table
    out = {}
    for la in parts_for(table, n):
        val = Fraction(1)
        for (cls_idx, _size), mult in la.items():
            val *= f.values[cls_idx] ** mult
        if val:
            out[la] = val
    return ParksVector(table, n, out)


def parks_char_basis(table: ConjugacyClassTable, la: DecoratedPartition) -> ParksVector:
    """Character of a basis partition: star product of the power characters of
    its parts. Cached on the table."""
    cache = table.group._caches.setdefault("parkschar", {})
    if la in cache:
        return cache[la]
    out = ParksVector(table, 0, {DecoratedPartition.empty(): Fraction(1)})
    for cls_idx, s in la.expand():
        f = MarksVector(table, table_of_marks(table)[cls_idx])
        out = out.star(parks_power_char(f, s))
    cache[la] = out
    return out


def parks_char(x: AAElement) -> ParksVector:
    out = ParksVector.zero(x.table, x.n)
    for la, c in x.coords.items():
        out = out + parks_char_basis(x.table, la).scale(c)
    return out


def parks_char_oracle_value(table: ConjugacyClassTable, la: DecoratedPartition,
                            ka: DecoratedPartition,
                            max_elements: int = DEFAULT_ELEMENT_CAP) -> int:
    """|((G wr Sigma_n)/alpha(lam))^{alpha(kappa)}| by explicit coset counting."""
    if la.size != ka.size:
        raise ValueError("partitions must have equal size")
    G = table.group
    W, _, _ = wreath_product(G, la.size, max_elements=max_elements)
    X = gsets.coset_gset(W, alpha(table, la, max_elements))
    return gsets.fixed_point_count(X, alpha(table, ka, max_elements))


def beta_pullback(f: ParksVector, wtable: ConjugacyClassTable) -> MarksVector:
    """(beta^* f)([H]) = f(beta([H])) over the full wreath class table."""
    W = wtable.group
    if not isinstance(W, WreathGroup):
        raise ValueError("beta_pullback needs a wreath-product table")
    vals = [f(beta(W, rep, f.table)) for rep in wtable.classes]
    return MarksVector(wtable, vals)


def from_parks(table: ConjugacyClassTable, n: int, f: ParksVector) -> AAElement:
    """Solve the rational system against the basis characters; NotInImage if the
    solution is not integral."""
    basis = parts_for(table, n)
    A = [[parks_char_basis(table, la)(ka) for la in basis] for ka in basis]
    b = [f(ka) for ka in basis]
    sol = linalg.solve(A, b)
    if any(v.denominator != 1 for v in sol):
        raise NotInImage(f"parks vector is not the character of an integral element: {sol}")
    return AAElement(table, n, {la: int(v) for la, v in zip(basis, sol) if v})


# ---------------------------------------------------------------------------
# explicit-set bridges


def decompose_submissive(Y: gsets.FiniteGSet, table: ConjugacyClassTable) -> AAElement:
    """Orbit decomposition of a submissive G wr Sigma_n-set, with stabilizers
    read through beta (their hulls realize basis partitions)."""
    W = Y.group
    if not isinstance(W, WreathGroup):
        raise ValueError("decompose_submissive needs a wreath-product action")
    out: Coords = {}
    for orb in gsets.orbits(Y):
        stab = gsets.stabilizer(Y, orb[0])
        la = beta(W, stab, table)
        out[la] = out.get(la, 0) + 1
    return AAElement(table, W.n, out)


def basis_gset(table: ConjugacyClassTable, la: DecoratedPartition,
               max_elements: int = DEFAULT_ELEMENT_CAP) -> gsets.FiniteGSet:
    """The coset space (G wr Sigma_n)/alpha(lam) as an explicit set."""
    G = table.group
    W, _, _ = wreath_product(G, la.size, max_elements=max_elements)
    return gsets.coset_gset(W, alpha(table, la, max_elements))


def aa_multiply(x: AAElement, y: AAElement,
                max_elements: int = DEFAULT_ELEMENT_CAP) -> AAElement:
    """Internal product in fixed degree n: multiply explicit coset spaces and
    decompose through stabilizer-beta."""
    if x.n != y.n:
        raise ValueError("internal product needs matching degrees")
    x._check(y)
    table = x.table
    cache = table.group._caches.setdefault("aa_prod", {})
    out = AAElement.zero(table, x.n)
    for ka, a in x.coords.items():
        for la, b in y.coords.items():
            key = tuple(sorted([ka, la], key=DecoratedPartition.sort_key))
            key = (key[0], key[1])
            if key not in cache:
                X = basis_gset(table, key[0], max_elements)
                Y = basis_gset(table, key[1], max_elements)
                Z = gsets.cartesian_product(X, Y)
                cache[key] = decompose_submissive(Z, table)
            out = out + cache[key].scale(a * b)
    return out
