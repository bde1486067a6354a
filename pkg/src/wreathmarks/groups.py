"""Finite permutation groups, subgroup machinery, homomorphisms, wreath products.

Everything downstream (G-sets, Burnside rings, the wreath-power subring) sits on
top of the types here. Groups are presented by permutation generators on a fixed
domain [0, n); elements are materialized lazily under a configurable cap.
All objects are immutable after construction; internal memo dicts only ever
fill idempotently.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Callable, Iterable

from . import perms
from .errors import CapExceeded, GroupSpecError
from .perms import Perm, identity, inv, mul

DEFAULT_ELEMENT_CAP = 10_000
DEFAULT_SUBGROUP_CAP = 400


def close_under_product(degree: int, gens: Iterable[Perm], cap: int | None = None) -> frozenset:
    """Generate the subgroup closure of `gens` by breadth-first products."""
    e = identity(degree)
    elems = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in elems:
                    if cap is not None and len(elems) >= cap:
                        raise CapExceeded("element enumeration", len(elems) + 1, cap)
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


class PermGroup:
    """A finite group of permutations of [0, degree).

    Compared by identity; construct through group_from_spec / the catalog to
    get object reuse (and therefore shared class-table caches).
    """

    def __init__(self, degree: int, generators: Iterable[Perm], name: str = "",
                 spec: str = "", max_elements: int = DEFAULT_ELEMENT_CAP):
        self.degree = degree
        gens = []
        for g in generators:
            if not perms.is_perm(g, degree):
                raise GroupSpecError(f"not a permutation of [{degree}]: {g}")
            if g != identity(degree) and g not in gens:
                gens.append(tuple(g))
        self.generators = tuple(gens)
        self.name = name
        self.spec = spec
        self.max_elements = max_elements
        self._caches: dict = {}

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    @cached_property
    def elements(self) -> tuple:
        """All elements, sorted; the identity always comes first."""
        els = close_under_product(self.degree, self.generators, self.max_elements)
        return tuple(sorted(els))

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, p: Perm, q: Perm) -> Perm:
        return mul(p, q)

    def inv(self, p: Perm) -> Perm:
        return inv(p)

    def __contains__(self, p) -> bool:
        return p in self.element_set

    def __repr__(self):
        label = self.name or self.spec or f"degree {self.degree}"
        return f"<PermGroup {label}>"


class SubgroupRef:
    """A subgroup of an ambient PermGroup, held as an explicit element set."""

    def __init__(self, ambient: PermGroup, elems: frozenset):
        self.ambient = ambient
        self.elems = frozenset(elems)

    @classmethod
    def generated(cls, ambient: PermGroup, gens: Iterable[Perm]) -> "SubgroupRef":
        return cls(ambient, close_under_product(ambient.degree, list(gens)))

    @classmethod
    def trivial(cls, ambient: PermGroup) -> "SubgroupRef":
        return cls(ambient, frozenset([ambient.identity]))

    @classmethod
    def whole(cls, ambient: PermGroup) -> "SubgroupRef":
        return cls(ambient, ambient.element_set)

    @cached_property
    def sorted_elems(self) -> tuple:
        return tuple(sorted(self.elems))

    @property
    def order(self) -> int:
        return len(self.elems)

    @cached_property
    def gens(self) -> tuple:
        """A small generating set, chosen greedily over the sorted elements."""
        out = []
        cur = {identity(self.ambient.degree)}
        for x in self.sorted_elems:
            if x not in cur:
                out.append(x)
                cur = close_under_product(self.ambient.degree, out)
                if len(cur) == self.order:
                    break
        return tuple(out)

    def conjugate(self, g: Perm) -> "SubgroupRef":
        gi = inv(g)
        return SubgroupRef(self.ambient, frozenset(mul(mul(gi, x), g) for x in self.elems))

    def is_subgroup_of(self, other: "SubgroupRef") -> bool:
        return self.elems <= other.elems

    def validate(self) -> bool:
        """Exhaustive closure/inverse check; for tests, not hot paths."""
        if identity(self.ambient.degree) not in self.elems:
            return False
        for x in self.elems:
            if inv(x) not in self.elems:
                return False
            for y in self.elems:
                if mul(x, y) not in self.elems:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, SubgroupRef) and self.ambient is other.ambient and self.elems == other.elems

    def __hash__(self):
        return hash((id(self.ambient), self.elems))

    def __repr__(self):
        return f"<Subgroup order {self.order} of {self.ambient!r}>"


def as_group(sub: SubgroupRef, name: str = "") -> PermGroup:
    """Recast a subgroup as a standalone PermGroup on the same domain."""
    return PermGroup(sub.ambient.degree, sub.gens or [], name=name,
                     max_elements=sub.ambient.max_elements)


class GroupHom:
    """A homomorphism between permutation groups, held as a callable on elements.

    Use from_gen_images when only generator images are known; the extension is
    computed multiplicatively over a breadth-first traversal of the source.
    """

    def __init__(self, source: PermGroup, target: PermGroup, mapping: Callable[[Perm], Perm],
                 name: str = ""):
        self.source = source
        self.target = target
        self._mapping = mapping
        self.name = name

    @classmethod
    def from_gen_images(cls, source: PermGroup, target: PermGroup,
                        images: dict, name: str = "") -> "GroupHom":
        table = {source.identity: target.identity}
        frontier = [source.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in source.generators:
                    y = mul(x, g)
                    if y not in table:
                        table[y] = mul(table[x], images[g])
                        nxt.append(y)
            frontier = nxt
        return cls(source, target, table.__getitem__, name=name)

    @classmethod
    def inclusion(cls, source: PermGroup, target: PermGroup, name: str = "") -> "GroupHom":
        if source.degree != target.degree:
            raise GroupSpecError("inclusion needs matching domains")
        return cls(source, target, lambda x: x, name=name or "incl")

    @classmethod
    def identity_hom(cls, group: PermGroup) -> "GroupHom":
        return cls(group, group, lambda x: x, name="id")

    def __call__(self, x: Perm) -> Perm:
        return self._mapping(x)

    def image_of(self, elems: Iterable[Perm]) -> frozenset:
        return frozenset(self._mapping(x) for x in elems)

    def is_homomorphism(self) -> bool:
        """Exhaustive check over all pairs of source elements."""
        for x in self.source.elements:
            fx = self(x)
            if fx not in self.target:
                return False
            for y in self.source.elements:
                if self(mul(x, y)) != mul(fx, self(y)):
                    return False
        return True

    def is_injective(self) -> bool:
        return len(self.image_of(self.source.elements)) == self.source.order

    def __repr__(self):
        return f"<GroupHom {self.name or '?'}: {self.source!r} -> {self.target!r}>"


# ---------------------------------------------------------------------------
# wreath products


class WreathGroup(PermGroup):
    """G wr Sigma_n acting on [n] x [d], where d is the base group's degree.

    An element (gbar, sigma) sends the point (i, x) to (sigma(i), gbar_{sigma(i)}(x)),
    which realizes the action law ((gbar, sigma) x)_i = gbar_i x_{sigma^-1(i)} on tuples.
    """

    def __init__(self, base: PermGroup, n: int, max_elements: int = DEFAULT_ELEMENT_CAP):
        self.base = base
        self.n = n
        d = base.degree
        gens = []
        for g in base.generators:
            gbar = [identity(d)] * n
            if n > 0:
                gbar[0] = g
                gens.append(self._encode_raw(gbar, identity(n), d, n))
        if n >= 2:
            swap = list(range(n))
            swap[0], swap[1] = 1, 0
            gens.append(self._encode_raw([identity(d)] * n, tuple(swap), d, n))
        if n >= 3:
            cyc = tuple((i + 1) % n for i in range(n))
            gens.append(self._encode_raw([identity(d)] * n, cyc, d, n))
        super().__init__(n * d, gens, name=f"{base.name or base.spec or 'G'} wr S{n}",
                         spec=f"wreath({base.spec or base.name},{n})",
                         max_elements=max_elements)
        self._decode_cache: dict = {}

    @staticmethod
    def _encode_raw(gbar, sigma, d, n) -> Perm:
        out = [0] * (n * d)
        for i in range(n):
            si = sigma[i]
            gi = gbar[si]
            for x in range(d):
                out[i * d + x] = si * d + gi[x]
        return tuple(out)

    def encode(self, gbar: Iterable[Perm], sigma: Perm) -> Perm:
        return self._encode_raw(list(gbar), sigma, self.base.degree, self.n)

    @property
    def expected_order(self) -> int:
        return self.base.order ** self.n * math.factorial(self.n)

    def __contains__(self, w) -> bool:
        """Membership by decoding block structure; never enumerates elements."""
        d = self.base.degree
        n = self.n
        if not perms.is_perm(tuple(w), n * d):
            return False
        sigma = []
        for i in range(n):
            j = w[i * d] // d
            block = tuple(w[i * d + x] - j * d for x in range(d))
            if any(not (0 <= b < d) for b in block) or block not in self.base.element_set:
                return False
            sigma.append(j)
        return perms.is_perm(tuple(sigma), n)

    def decode(self, w: Perm):
        """Return (gbar, sigma, sigma_inv) with gbar a tuple of base elements."""
        hit = self._decode_cache.get(w)
        if hit is not None:
            return hit
        d = self.base.degree
        n = self.n
        sigma = tuple(w[i * d] // d for i in range(n))
        sigma_inv = inv(sigma)
        gbar = tuple(
            tuple(w[sigma_inv[j] * d + x] - j * d for x in range(d))
            for j in range(n)
        )
        out = (gbar, sigma, sigma_inv)
        self._decode_cache[w] = out
        return out

    def sigma_of(self, w: Perm) -> Perm:
        return self.decode(w)[1]


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        gens.append(tuple(swap))
    if n >= 3:
        gens.append(tuple((i + 1) % n for i in range(n)))
    return PermGroup(n, gens, name=f"S{n}", spec=f"sym({n})")


def wreath_product(base: PermGroup, n: int, max_elements: int = DEFAULT_ELEMENT_CAP):
    """Build G wr Sigma_n with its base embedding and sigma projection.

    Returns (W, base_embedding: G^n -> W, sigma_projection: W -> Sigma_n).
    The result is cached on the base group.
    """
    cache = base._caches.setdefault("wreath", {})
    if n in cache:
        return cache[n]
    # The cap is enforced lazily: construction never enumerates elements, so
    # oversized wreath groups are fine until a path actually materializes them.
    W = WreathGroup(base, n, max_elements=max_elements)
    d = base.degree
    base_gens = []
    for i in range(n):
        for g in base.generators:
            gbar = [identity(d)] * n
            gbar[i] = g
            base_gens.append(W.encode(gbar, identity(n)))
    base_power = PermGroup(n * d, base_gens, name=f"{base.name or 'G'}^{n}",
                           max_elements=max_elements)
    embedding = GroupHom(base_power, W, lambda x: x, name="base")
    sigma_proj = GroupHom(W, symmetric_group(n), W.sigma_of, name="sigma")
    out = (W, embedding, sigma_proj)
    cache[n] = out
    return out


def direct_product(G: PermGroup, H: PermGroup, max_elements: int = DEFAULT_ELEMENT_CAP):
    """G x H on the disjoint union of domains; returns (P, project_left, project_right).
    Cached on the left factor so product tables are shared."""
    cache = G._caches.setdefault("product", {})
    key = (H.degree, H.generators, max_elements)
    if key in cache:
        return cache[key]
    dG, dH = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(tuple(g) + tuple(dG + x for x in range(dH)))
    for h in H.generators:
        gens.append(tuple(range(dG)) + tuple(dG + h[x] for x in range(dH)))
    if G.order * H.order > max_elements:
        raise CapExceeded("direct product size", G.order * H.order, max_elements)
    P = PermGroup(dG + dH, gens, name=f"{G.name or 'G'}x{H.name or 'H'}",
                  spec=f"product({G.spec or G.name},{H.spec or H.name})",
                  max_elements=max_elements)

    def proj_left(p: Perm) -> Perm:
        return tuple(p[:dG])

    def proj_right(p: Perm) -> Perm:
        return tuple(p[dG + x] - dG for x in range(dH))

    out = (P, proj_left, proj_right)
    cache[key] = out
    return out


def encode_pair(G: PermGroup, H: PermGroup, g: Perm, h: Perm) -> Perm:
    return tuple(g) + tuple(G.degree + x for x in h)


# ---------------------------------------------------------------------------
# subgroup enumeration and conjugacy classes


def derived_series_reaches_trivial(G: PermGroup, max_steps: int = 20) -> bool:
    """Solvability by the derived series, with commutators taken exhaustively."""
    current = set(G.elements)
    for _ in range(max_steps):
        if len(current) == 1:
            return True
        elems = sorted(current)
        commutators = set()
        for x in elems:
            xi = inv(x)
            for y in elems:
                commutators.add(mul(mul(xi, inv(y)), mul(x, y)))
        nxt = close_under_product(G.degree, sorted(commutators))
        if len(nxt) == len(current):
            return False
        current = set(nxt)
    return False


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _subgroups_generic(G: PermGroup) -> dict:
    """Bottom-up closure enumeration: all cyclic subgroups, then adjoin cyclic
    generators until nothing new appears. Works for any G; quadratic-ish."""
    e = G.identity
    info: dict = {frozenset([e]): []}
    cyc_gen: dict = {}
    for g in G.elements:
        if g == e:
            continue
        cyc_elems = frozenset(close_under_product(G.degree, [g]))
        if cyc_elems not in cyc_gen:
            cyc_gen[cyc_elems] = g
    for elems, g in cyc_gen.items():
        if elems not in info:
            info[elems] = [g]
    work = list(info.keys())
    while work:
        S = work.pop()
        gensS = info[S]
        for celems, cgen in cyc_gen.items():
            if cgen in S:
                continue
            T = close_under_product(G.degree, gensS + [cgen])
            if T not in info:
                info[T] = gensS + [cgen]
                work.append(T)
    return info


def _subgroups_cyclic_extension(G: PermGroup) -> dict:
    """Every subgroup of a solvable G by prime-index normal extensions.

    Each subgroup of a solvable group sits in a subnormal chain with prime
    cyclic quotients, so extending S by g in N_G(S)\\S with g^p in S (p prime)
    and taking the coset union S u Sg u ... u Sg^{p-1} reaches everything.
    """
    e = G.identity
    elements = G.elements
    info: dict = {frozenset([e]): []}
    work = [frozenset([e])]
    while work:
        S = work.pop()
        gensS = info[S]
        normalizer_elems = []
        for g in elements:
            gi = inv(g)
            # conjugation is an automorphism, so checking generators suffices
            if all(mul(mul(gi, x), g) in S for x in gensS):
                normalizer_elems.append(g)
        for g in normalizer_elems:
            if g in S:
                continue
            power = g
            k = 1
            while power not in S:
                power = mul(power, g)
                k += 1
            if not _is_prime(k):
                continue
            coset = list(S)
            T = set(S)
            step = g
            for _ in range(k - 1):
                T.update(mul(x, step) for x in coset)
                step = mul(step, g)
            T = frozenset(T)
            if T not in info:
                info[T] = gensS + [g]
                work.append(T)
    return info


def _all_subgroups_with_gens(G: PermGroup, cap: int) -> dict:
    """Every subgroup of G, as a dict {frozenset elements: generator list}.

    Solvable groups (everything of interest at this scale) go through the
    cyclic-extension method; anything else falls back to generic closure.
    """
    if G.order > cap:
        raise CapExceeded("subgroup enumeration", G.order, cap)
    if derived_series_reaches_trivial(G):
        return _subgroups_cyclic_extension(G)
    return _subgroups_generic(G)


def element_order(p: Perm) -> int:
    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        out = out * length // math.gcd(out, length)
    return out


def _structure_name(sub: SubgroupRef, ambient_order: int) -> str:
    n = sub.order
    if n == 1:
        return "e"
    orders = sorted(element_order(x) for x in sub.elems)
    cyclic = orders[-1] == n
    if cyclic:
        return f"C{n}"
    abelian = all(mul(x, y) == mul(y, x) for x in sub.gens for y in sub.gens)
    involutions = sum(1 for o in orders if o == 2)
    if n == 4:
        return "V4"
    if n == 6:
        return "S3"
    if n == 8:
        if abelian:
            return "C4xC2" if orders[-1] == 4 else "E8"
        return "Q8" if involutions == 1 else "D4"
    if n == 12 and not abelian:
        if involutions == 3:
            return "A4"
        if involutions == 1:
            return "Dic3"
        return "D6"
    if n == 24 and not abelian and involutions == 9:
        return "S4"
    return f"o{n}"


class ConjugacyClassTable:
    """The ordered set Conj(G): one canonical representative per conjugacy
    class of subgroups, sorted by (order, sorted element list).

    Built from an exhaustive subgroup enumeration, so class lookup is a dict
    hit for any subgroup of the ambient group.
    """

    def __init__(self, group: PermGroup, classes: list, key_to_class: dict):
        self.group = group
        self.classes: tuple = tuple(classes)
        self._key_to_class = key_to_class
        self.size = len(self.classes)
        base = [_structure_name(c, group.order) for c in self.classes]
        names = []
        for i, nm in enumerate(base):
            if base.count(nm) > 1:
                k = sum(1 for j in range(i) if base[j] == nm)
                nm = f"{nm}{chr(ord('a') + k)}"
            names.append(nm)
        self.class_names: tuple = tuple(names)
        self._name_to_index = {nm: i for i, nm in enumerate(names)}

    def class_index(self, sub: SubgroupRef) -> int:
        try:
            return self._key_to_class[sub.elems]
        except KeyError:
            raise KeyError("subgroup is not a subgroup of this table's group") from None

    def class_of_elements(self, elems: frozenset) -> int:
        return self._key_to_class[frozenset(elems)]

    def index_of_name(self, name: str) -> int:
        return self._name_to_index[name]

    @cached_property
    def all_subgroups(self) -> tuple:
        """Every subgroup of the group (not just class representatives)."""
        return tuple(SubgroupRef(self.group, k)
                     for k in sorted(self._key_to_class, key=lambda s: (len(s), sorted(s))))

    def orders(self) -> tuple:
        return tuple(c.order for c in self.classes)

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"<Conj({self.group.name or self.group.spec}) with {self.size} classes>"


def subgroup_conjugacy_classes(G: PermGroup, cap: int = DEFAULT_SUBGROUP_CAP) -> ConjugacyClassTable:
    """Enumerate Conj(G); cached on the group object. The cap is a contract,
    not just a resource guard, so it is enforced even on cache hits."""
    if G.order > cap:
        raise CapExceeded("subgroup enumeration", G.order, cap)
    hit = G._caches.get("table")
    if hit is not None:
        return hit
    info = _all_subgroups_with_gens(G, cap)
    subs_sorted = sorted(info.keys(), key=lambda s: (len(s), sorted(s)))
    key_to_class: dict = {}
    classes = []
    for elems in subs_sorted:
        if elems in key_to_class:
            continue
        idx = len(classes)
        classes.append(SubgroupRef(G, elems))
        for g in G.elements:
            gi = inv(g)
            conj_elems = frozenset(mul(mul(gi, x), g) for x in elems)
            key_to_class[conj_elems] = idx
    table = ConjugacyClassTable(G, classes, key_to_class)
    G._caches["table"] = table
    return table


def normalizer(G: PermGroup, H: SubgroupRef) -> SubgroupRef:
    """N_G(H) = {g : H^g = H}."""
    if not H.elems <= G.element_set:
        raise GroupSpecError("H is not a subgroup of G")
    target = H.elems
    out = []
    for g in G.elements:
        gi = inv(g)
        if all(mul(mul(gi, x), g) in target for x in H.gens) and \
           frozenset(mul(mul(gi, x), g) for x in H.elems) == target:
            out.append(g)
    return SubgroupRef(G, frozenset(out))


def double_cosets(G: PermGroup, H: SubgroupRef, K: SubgroupRef) -> list:
    """Representatives of H\\G/K with their double-coset sizes, in element order."""
    if not (H.elems <= G.element_set and K.elems <= G.element_set):
        raise GroupSpecError("H, K must be subgroups of G")
    remaining = set(G.elements)
    out = []
    for g in G.elements:
        if g not in remaining:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for h in H.gens:
                y = mul(h, x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
            for k in K.gens:
                y = mul(x, k)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        out.append((g, len(orbit)))
        remaining -= orbit
    return out


def left_cosets(G: PermGroup, H: SubgroupRef) -> list:
    """Canonical (minimal) representatives of G/H, sorted."""
    reps = []
    seen = set()
    for g in G.elements:
        if g in seen:
            continue
        coset = [mul(g, h) for h in H.elems]
        reps.append(min(coset))
        seen.update(coset)
    return sorted(reps)


def induced_class_map(phi: GroupHom, src_table: ConjugacyClassTable,
                      tgt_table: ConjugacyClassTable) -> list:
    """The map Conj(source) -> Conj(target), [K] |-> [phi(K)], as an index list."""
    out = []
    for rep in src_table.classes:
        image = phi.image_of(rep.elems)
        out.append(tgt_table.class_of_elements(image))
    return out


def monomial_representation(G: PermGroup, H: SubgroupRef,
                            max_elements: int = DEFAULT_ELEMENT_CAP) -> GroupHom:
    """The relative Cayley map G -> H wr Sigma_[G:H].

    Cosets of G/H are ordered by, and sectioned at, their minimal elements, so
    the representative of the conjugacy class of representations is fixed.
    """
    if not H.elems <= G.element_set:
        raise GroupSpecError("H is not a subgroup of G")
    H_group = as_group(H, name="H")
    reps = left_cosets(G, H)
    n = len(reps)
    coset_of = {}
    for a, rep in enumerate(reps):
        for h in H.elems:
            coset_of[mul(rep, h)] = a
    W, _, _ = wreath_product(H_group, n, max_elements=max_elements)
    rep_inv = [inv(r) for r in reps]

    def phi(g: Perm) -> Perm:
        sigma = tuple(coset_of[mul(g, reps[a])] for a in range(n))
        gi = inv(g)
        gbar = []
        for a in range(n):
            b = coset_of[mul(gi, reps[a])]  # the coset g^-1 a H
            val = mul(mul(rep_inv[a], g), reps[b])
            gbar.append(val)
        return W.encode(gbar, sigma)

    return GroupHom(G, W, phi, name=f"monomial[{G.name or G.spec}:{n}]")


# ---------------------------------------------------------------------------
# the catalog and the group-spec grammar


def _quaternion_generators():
    labels = [(1, "e"), (-1, "e"), (1, "i"), (-1, "i"),
              (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    index = {lab: t for t, lab in enumerate(labels)}
    rules = {("i", "i"): (-1, "e"), ("j", "j"): (-1, "e"), ("k", "k"): (-1, "e"),
             ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
             ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
             ("k", "i"): (1, "j"), ("i", "k"): (-1, "j")}

    def q_mul(a, b):
        sa, xa = a
        sb, xb = b
        if xa == "e":
            return (sa * sb, xb)
        if xb == "e":
            return (sa * sb, xa)
        s, x = rules[(xa, xb)]
        return (sa * sb * s, x)

    gens = []
    for gen in [(1, "i"), (1, "j")]:
        gens.append(tuple(index[q_mul(gen, lab)] for lab in labels))
    return gens


_CATALOG: dict = {
    "e": (1, []),
    "C2": (2, ["(1 2)"]),
    "C3": (3, ["(1 2 3)"]),
    "C4": (4, ["(1 2 3 4)"]),
    "C6": (6, ["(1 2 3 4 5 6)"]),
    "V4": (4, ["(1 2)(3 4)", "(1 3)(2 4)"]),
    "S3": (3, ["(1 2 3)", "(1 2)"]),
    "D4": (4, ["(1 2 3 4)", "(1 3)"]),
    "A4": (4, ["(1 2 3)", "(2 3 4)"]),
    "S4": (4, ["(1 2 3 4)", "(1 2)"]),
}

CATALOG_NAMES = tuple(list(_CATALOG) + ["Q8"])

_group_cache: dict = {}


def cyclic_group(m: int, max_elements: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    if m == 1:
        return group_from_spec("e")
    if f"C{m}" in _CATALOG:
        return group_from_spec(f"C{m}", max_elements=max_elements)
    return group_from_spec(f"domain={m} ({' '.join(str(i) for i in range(1, m + 1))})",
                           max_elements=max_elements)


def _split_top_level(text: str, sep: str = ",") -> list:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def group_from_spec(spec: str, max_elements: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Build a group from the spec grammar.

    Accepted forms: a catalog name (e, C2, C3, C4, C6, V4, S3, D4, Q8, A4, S4);
    comma-separated generators in cycle notation, optionally prefixed with
    "domain=n"; wreath(SPEC,n); product(SPEC,SPEC).
    """
    spec = spec.strip()
    key = (spec, max_elements)
    hit = _group_cache.get(key)
    if hit is not None:
        return hit
    out = _build_from_spec(spec, max_elements)
    # probe the cap now so malformed requests fail at construction
    if out.order > max_elements:
        raise CapExceeded("element enumeration", out.order, max_elements)
    _group_cache[key] = out
    return out


def _build_from_spec(spec: str, max_elements: int) -> PermGroup:
    if spec == "Q8":
        return PermGroup(8, _quaternion_generators(), name="Q8", spec="Q8",
                         max_elements=max_elements)
    if spec in _CATALOG:
        degree, gen_specs = _CATALOG[spec]
        gens = [perms.parse_cycles(s, degree) for s in gen_specs]
        return PermGroup(degree, gens, name=spec, spec=spec, max_elements=max_elements)
    if spec.startswith("wreath(") and spec.endswith(")"):
        inner = _split_top_level(spec[len("wreath("):-1])
        if len(inner) != 2:
            raise GroupSpecError(f"wreath(SPEC,n) takes two arguments: {spec!r}")
        base = group_from_spec(inner[0].strip(), max_elements=max_elements)
        try:
            n = int(inner[1])
        except ValueError:
            raise GroupSpecError(f"wreath degree must be an integer: {inner[1]!r}") from None
        if n < 0:
            raise GroupSpecError("wreath degree must be >= 0")
        return wreath_product(base, n, max_elements=max_elements)[0]
    if spec.startswith("product(") and spec.endswith(")"):
        inner = _split_top_level(spec[len("product("):-1])
        if len(inner) != 2:
            raise GroupSpecError(f"product(SPEC,SPEC) takes two arguments: {spec!r}")
        left = group_from_spec(inner[0].strip(), max_elements=max_elements)
        right = group_from_spec(inner[1].strip(), max_elements=max_elements)
        return direct_product(left, right, max_elements=max_elements)[0]
    # generator list in cycle notation
    body = spec
    degree = None
    if body.startswith("domain="):
        head, _, rest = body.partition(" ")
        try:
            degree = int(head[len("domain="):])
        except ValueError:
            raise GroupSpecError(f"bad domain declaration: {head!r}") from None
        body = rest.strip()
        if not body:
            return PermGroup(degree, [], name="", spec=spec, max_elements=max_elements)
    gen_texts = [t.strip() for t in _split_top_level(body) if t.strip()]
    if not gen_texts:
        raise GroupSpecError(f"empty group spec: {spec!r}")
    if degree is None:
        degree = 0
        for t in gen_texts:
            p = perms.parse_cycles(t)
            degree = max(degree, len(p))
    gens = [perms.parse_cycles(t, degree) for t in gen_texts]
    return PermGroup(degree, gens, name="", spec=spec, max_elements=max_elements)
