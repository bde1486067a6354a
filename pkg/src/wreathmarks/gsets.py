"""Explicit finite G-sets: the brute-force oracle layer.

Everything here works by materializing points and exhausting group elements,
never by ring-theoretic formulas; the algebraic modules are validated against
these functions. Points must be hashable and mutually orderable so orbit
representatives come out deterministic.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .errors import CapExceeded
from .groups import (DEFAULT_ELEMENT_CAP, GroupHom, PermGroup, SubgroupRef,
                     wreath_product)
from .perms import Perm, inv, mul


class FiniteGSet:
    """A finite left G-set: a point list and an action callable (elem, point) -> point."""

    def __init__(self, group: PermGroup, points, action: Callable):
        self.group = group
        self.points = tuple(points)
        self.action = action

    def __len__(self):
        return len(self.points)

    def act(self, g: Perm, x):
        return self.action(g, x)

    def validate(self) -> bool:
        """Check identity and compatibility axioms by exhaustion (tests only)."""
        e = self.group.identity
        pts = set(self.points)
        for x in self.points:
            if self.action(e, x) != x:
                return False
        for g in self.group.elements:
            for h in self.group.elements:
                gh = mul(g, h)
                for x in self.points:
                    if self.action(g, self.action(h, x)) != self.action(gh, x):
                        return False
                    if self.action(g, x) not in pts:
                        return False
        return True

    def __repr__(self):
        return f"<FiniteGSet |X|={len(self.points)} over {self.group!r}>"


def natural_gset(group: PermGroup) -> FiniteGSet:
    """The group's defining action on its domain."""
    return FiniteGSet(group, range(group.degree), lambda g, x: g[x])


def trivial_gset(group: PermGroup, size: int) -> FiniteGSet:
    return FiniteGSet(group, range(size), lambda g, x: x)


def coset_gset(group: PermGroup, sub: SubgroupRef) -> FiniteGSet:
    """G/H with left multiplication; a coset is named by its minimal element."""
    rep_of = {}
    points = []
    for g in group.elements:
        if g in rep_of:
            continue
        coset = [mul(g, h) for h in sub.elems]
        r = min(coset)
        points.append(r)
        for x in coset:
            rep_of[x] = r
    points.sort()
    return FiniteGSet(group, points, lambda g, x: rep_of[mul(g, x)])


def disjoint_union(*gsets: FiniteGSet) -> FiniteGSet:
    """Tagged disjoint union of G-sets over the same group."""
    group = gsets[0].group
    points = []
    for k, X in enumerate(gsets):
        if X.group is not group:
            raise ValueError("disjoint union needs a common group")
        points.extend((k, p) for p in X.points)
    parts = tuple(gsets)

    def action(g, tagged):
        k, p = tagged
        return (k, parts[k].action(g, p))

    return FiniteGSet(group, points, action)


def cartesian_product(X: FiniteGSet, Y: FiniteGSet) -> FiniteGSet:
    group = X.group
    if Y.group is not group:
        raise ValueError("product needs a common group")
    points = [(p, q) for p in X.points for q in Y.points]
    return FiniteGSet(group, points, lambda g, pq: (X.action(g, pq[0]), Y.action(g, pq[1])))


def from_burnside_coords(table, coords) -> FiniteGSet:
    """Effective element -> explicit G-set: a disjoint union of coset spaces."""
    pieces = []
    for idx, coeff in enumerate(coords):
        if coeff < 0:
            raise ValueError("only effective elements have explicit realizations")
        for _ in range(coeff):
            pieces.append(coset_gset(table.group, table.classes[idx]))
    if not pieces:
        return FiniteGSet(table.group, [], lambda g, x: x)
    return disjoint_union(*pieces)


def orbits(X: FiniteGSet) -> list:
    """Orbits as sorted point tuples, ordered by their minimal points."""
    gens = X.group.generators
    seen = set()
    out = []
    for p in X.points:
        if p in seen:
            continue
        orb = {p}
        frontier = [p]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = X.action(g, x)
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        seen |= orb
        out.append(tuple(sorted(orb)))
    return out


def stabilizer(X: FiniteGSet, x) -> SubgroupRef:
    """Stab_G(x), by filtering the full element list."""
    elems = frozenset(g for g in X.group.elements if X.action(g, x) == x)
    return SubgroupRef(X.group, elems)


def fixed_point_count(X: FiniteGSet, sub: SubgroupRef) -> int:
    """|X^H|; a point is H-fixed iff it is fixed by H's generators."""
    gens = sub.gens
    return sum(1 for p in X.points if all(X.action(g, p) == p for g in gens))


def fixed_points_of_element(X: FiniteGSet, g: Perm) -> int:
    return sum(1 for p in X.points if X.action(g, p) == p)


def orbit_count_by_burnside(X: FiniteGSet):
    """Average fixed-point count over the group, as an exact Fraction."""
    from fractions import Fraction
    total = sum(fixed_points_of_element(X, g) for g in X.group.elements)
    return Fraction(total, X.group.order)


def power_gset(X: FiniteGSet, n: int, max_points: int = 100_000,
               max_elements: int = DEFAULT_ELEMENT_CAP) -> FiniteGSet:
    """X^{x n} as a G wr Sigma_n-set: coordinate i of (gbar, sigma)x is gbar_i x_{sigma^-1(i)}."""
    if len(X.points) ** n > max_points:
        raise CapExceeded("power set size", len(X.points) ** n, max_points)
    W, _, _ = wreath_product(X.group, n, max_elements=max_elements)
    points = [tuple(t) for t in itertools.product(X.points, repeat=n)]

    def action(w, xs):
        gbar, _, sigma_inv = W.decode(w)
        return tuple(X.action(gbar[i], xs[sigma_inv[i]]) for i in range(n))

    return FiniteGSet(W, points, action)


def restrict(phi: GroupHom, X: FiniteGSet) -> FiniteGSet:
    """Pull the action back along phi: H -> G."""
    if X.group is not phi.target:
        raise ValueError("X must be a set over phi's target")
    return FiniteGSet(phi.source, X.points, lambda h, x: X.action(phi(h), x))


def induce(phi: GroupHom, X: FiniteGSet, max_points: int = 200_000) -> FiniteGSet:
    """G x_H X along phi: H -> G, materialized as H-orbits of pairs (g, x).

    H acts on pairs by h.(g, x) = (g phi(h)^-1, h x); the orbit space carries
    the left G-action g'.[g, x] = [g' g, x]. Covers induction (phi injective)
    and deflation (phi surjective: the result is the quotient by ker phi).
    """
    H, G = phi.source, phi.target
    if X.group is not H:
        raise ValueError("X must be a set over phi's source")
    if G.order * len(X.points) > max_points:
        raise CapExceeded("induction size", G.order * len(X.points), max_points)
    gens = [(phi(h), h) for h in H.generators] or [(G.identity, H.identity)]
    gen_invs = [(inv(img), h) for img, h in gens]
    rep_of = {}
    points = []
    for g in G.elements:
        for x in X.points:
            if (g, x) in rep_of:
                continue
            orb = {(g, x)}
            frontier = [(g, x)]
            while frontier:
                (a, y) = frontier.pop()
                for img_inv, h in gen_invs:
                    z = (mul(a, img_inv), X.action(h, y))
                    if z not in orb:
                        orb.add(z)
                        frontier.append(z)
            r = min(orb)
            points.append(r)
            for z in orb:
                rep_of[z] = r
    points.sort()

    def action(gp, pair):
        g, x = pair
        return rep_of[(mul(gp, g), x)]

    return FiniteGSet(G, points, action)


def decompose(X: FiniteGSet, table):
    """Orbit decomposition into a BurnsideElement over the given class table."""
    from .burnside import BurnsideElement
    if table.group is not X.group:
        raise ValueError("table does not match the acting group")
    coords = [0] * table.size
    for orb in orbits(X):
        stab = stabilizer(X, orb[0])
        coords[table.class_index(stab)] += 1
    return BurnsideElement(table, tuple(coords))
