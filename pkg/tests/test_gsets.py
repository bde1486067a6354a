import random

from hypothesis import given, settings
from hypothesis import strategies as st

from wreathmarks import gsets
from wreathmarks.burnside import BurnsideElement, chi
from wreathmarks.groups import (GroupHom, SubgroupRef, group_from_spec,
                                subgroup_conjugacy_classes)

from conftest import table


def class_named(t, name):
    return t.classes[t.index_of_name(name)]


def test_gset_axioms_validate():
    S3 = group_from_spec("S3")
    assert gsets.natural_gset(S3).validate()
    t = table("S3")
    assert gsets.coset_gset(S3, class_named(t, "C2")).validate()


def test_orbits_examples():
    C2 = group_from_spec("C2")
    reg = gsets.coset_gset(C2, SubgroupRef.trivial(C2))
    assert len(gsets.orbits(reg)) == 1 and len(reg) == 2

    S3 = group_from_spec("S3")
    assert len(gsets.orbits(gsets.trivial_gset(S3, 3))) == 3

    # ordered pairs of distinct points of [3]: one orbit of size 6
    pairs = [(i, j) for i in range(3) for j in range(3) if i != j]
    X = gsets.FiniteGSet(S3, pairs, lambda g, p: (g[p[0]], g[p[1]]))
    orbs = gsets.orbits(X)
    assert len(orbs) == 1 and len(orbs[0]) == 6


def test_stabilizer_examples():
    S3 = group_from_spec("S3")
    t = table("S3")
    reg = gsets.coset_gset(S3, SubgroupRef.trivial(S3))
    assert gsets.stabilizer(reg, reg.points[0]).order == 1
    triv = gsets.trivial_gset(S3, 2)
    assert gsets.stabilizer(triv, 0).order == 6
    cos = gsets.coset_gset(S3, class_named(t, "C2"))
    stab = gsets.stabilizer(cos, S3.identity)
    assert stab.elems == class_named(t, "C2").elems


def test_orbit_stabilizer_theorem():
    for spec in ["S3", "D4", "A4"]:
        G = group_from_spec(spec)
        t = subgroup_conjugacy_classes(G)
        for H in t.classes:
            X = gsets.coset_gset(G, H)
            for p in X.points:
                orbit = next(o for o in gsets.orbits(X) if p in o)
                assert len(orbit) * gsets.stabilizer(X, p).order == G.order


def test_fixed_point_counts():
    S3 = group_from_spec("S3")
    t = table("S3")
    cos = gsets.coset_gset(S3, class_named(t, "C2"))
    assert gsets.fixed_point_count(cos, SubgroupRef.trivial(S3)) == 3
    assert gsets.fixed_point_count(cos, class_named(t, "C3")) == 0
    assert gsets.fixed_point_count(cos, class_named(t, "C2")) == 1


@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
@settings(max_examples=25, deadline=None)
def test_burnside_lemma_property(coords):
    t = table("S3")
    X = gsets.from_burnside_coords(t, coords)
    assert gsets.orbit_count_by_burnside(X) == len(gsets.orbits(X))


def test_decompose_respects_marks():
    """chi(decompose(X)) equals the direct fixed-point count vector."""
    rng = random.Random(3)
    t = table("D4")
    for _ in range(5):
        coords = [rng.randrange(3) for _ in range(t.size)]
        X = gsets.from_burnside_coords(t, coords)
        x = gsets.decompose(X, t)
        assert x.coords == tuple(coords)  # decomposition recovers the sum
        marks = chi(x).values
        for j, K in enumerate(t.classes):
            assert marks[j] == gsets.fixed_point_count(X, K)


def test_decompose_product_example():
    """(S3/C2)^2 = [S3/C2] + [S3/e], the marks check (3,1,0,0)^2 = (9,1,0,0)."""
    t = table("S3")
    cos = gsets.coset_gset(t.group, class_named(t, "C2"))
    prod = gsets.cartesian_product(cos, cos)
    x = gsets.decompose(prod, t)
    expect = [0] * t.size
    expect[t.index_of_name("e")] = 1
    expect[t.index_of_name("C2")] = 1
    assert x.coords == tuple(expect)
    assert [int(v) for v in chi(x).values] == [9, 1, 0, 0]


def test_power_gset_examples():
    C2 = group_from_spec("C2")
    two = gsets.trivial_gset(C2, 2)
    assert len(gsets.power_gset(two, 2)) == 4

    reg = gsets.coset_gset(C2, SubgroupRef.trivial(C2))
    p2 = gsets.power_gset(reg, 2)
    orbs = gsets.orbits(p2)
    assert len(orbs) == 1 and len(orbs[0]) == 4

    # n = 1: same orbit/stabilizer data as X itself
    S3 = group_from_spec("S3")
    t = table("S3")
    X = gsets.coset_gset(S3, class_named(t, "C2"))
    p1 = gsets.power_gset(X, 1)
    assert len(gsets.orbits(p1)) == len(gsets.orbits(X))
    W1 = p1.group
    for K in t.classes:
        lifted = SubgroupRef(W1, frozenset(W1.encode([k], (0,)) for k in K.elems))
        assert gsets.fixed_point_count(p1, lifted) == gsets.fixed_point_count(X, K)


def test_power_gset_action_law():
    """((gbar, sigma) x)_i = gbar_i x_{sigma^-1(i)}, exhaustively for |W| <= 100."""
    import itertools
    C2 = group_from_spec("C2")
    X = gsets.natural_gset(C2)
    Y = gsets.power_gset(X, 3)
    W = Y.group
    assert W.order == 48
    for w in W.elements:
        gbar, sigma, sigma_inv = W.decode(w)
        for xs in itertools.product(X.points, repeat=3):
            got = Y.action(w, xs)
            want = tuple(gbar[i][xs[sigma_inv[i]]] for i in range(3))
            assert got == want


def test_induce_regular():
    """Inducing a point along e < G gives the regular G-set."""
    S3 = group_from_spec("S3")
    t = table("S3")
    triv = SubgroupRef.trivial(S3)
    from wreathmarks.groups import as_group
    E = as_group(triv)
    point = gsets.trivial_gset(E, 1)
    ind = gsets.induce(GroupHom.inclusion(E, S3), point)
    assert len(ind) == 6
    x = gsets.decompose(ind, t)
    assert x.coords == (1, 0, 0, 0)


def test_induce_example_from_subgroup():
    """S3 x_{C2} (C2/e) is the regular S3-set (size 6*2/2 = 6)."""
    S3 = group_from_spec("S3")
    t = table("S3")
    from wreathmarks.groups import as_group
    H = class_named(t, "C2")
    HG = as_group(H)
    th = subgroup_conjugacy_classes(HG)
    reg_h = gsets.coset_gset(HG, SubgroupRef.trivial(HG))
    ind = gsets.induce(GroupHom.inclusion(HG, S3), reg_h)
    assert len(ind) == 6
    assert gsets.decompose(ind, t).coords == (1, 0, 0, 0)


def test_deflation_is_orbit_space():
    """Transfer along G -> e sends X to its orbit set."""
    S3 = group_from_spec("S3")
    E = group_from_spec("e")
    quot = GroupHom(S3, E, lambda g: E.identity, name="collapse")
    t = table("S3")
    X = gsets.from_burnside_coords(t, (1, 2, 0, 1))
    defl = gsets.induce(quot, X)
    assert len(defl) == len(gsets.orbits(X)) == 4


def test_restrict_examples():
    S3 = group_from_spec("S3")
    t = table("S3")
    reg = gsets.coset_gset(S3, SubgroupRef.trivial(S3))
    ident = GroupHom.identity_hom(S3)
    assert gsets.decompose(gsets.restrict(ident, reg), t).coords == (1, 0, 0, 0)

    from wreathmarks.groups import as_group
    C3 = as_group(class_named(t, "C3"))
    t3 = subgroup_conjugacy_classes(C3)
    res = gsets.restrict(GroupHom.inclusion(C3, S3), reg)
    assert gsets.decompose(res, t3).coords == (2, 0)  # two regular C3-orbits

    # restriction along e -> G gives the trivial action
    E = group_from_spec("e")
    triv_incl = GroupHom(E, S3, lambda g: S3.identity, name="unit")
    res2 = gsets.restrict(triv_incl, reg)
    assert all(res2.action(E.identity, p) == p for p in res2.points)
    assert len(gsets.orbits(res2)) == 6


def test_induce_then_decompose_matches_transfer():
    """Functoriality: decompose(induce(X)) = transfer(decompose(X))."""
    from wreathmarks.burnside import transfer
    from wreathmarks.groups import as_group
    S3 = group_from_spec("S3")
    t = table("S3")
    H = class_named(t, "C3")
    HG = as_group(H)
    th = subgroup_conjugacy_classes(HG)
    phi = GroupHom.inclusion(HG, S3)
    rng = random.Random(5)
    for _ in range(4):
        coords = [rng.randrange(3) for _ in range(th.size)]
        X = gsets.from_burnside_coords(th, coords)
        lhs = gsets.decompose(gsets.induce(phi, X), t)
        rhs = transfer(phi, BurnsideElement(th, coords), t)
        assert lhs == rhs
