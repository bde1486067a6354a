import itertools
import math

import pytest

from wreathmarks.errors import CapExceeded, GroupSpecError
from wreathmarks.groups import (GroupHom, SubgroupRef, close_under_product,
                                cyclic_group, double_cosets, group_from_spec,
                                induced_class_map, left_cosets, monomial_representation,
                                normalizer, subgroup_conjugacy_classes, symmetric_group,
                                wreath_product)
from wreathmarks.perms import cycle_string, identity, inv, mul, parse_cycles

from conftest import table

CATALOG_ORDERS = {"e": 1, "C2": 2, "C3": 3, "C4": 4, "C6": 6, "V4": 4,
                  "S3": 6, "D4": 8, "Q8": 8, "A4": 12, "S4": 24}


def brute_force_subgroups(G):
    """Oracle: every subset containing the identity that is closed under
    multiplication and inverse. Only for tiny groups."""
    elems = list(G.elements)
    out = set()
    for r in range(1, len(elems) + 1):
        for subset in itertools.combinations(elems, r):
            s = frozenset(subset)
            if G.identity not in s:
                continue
            if all(inv(x) in s for x in s) and all(mul(x, y) in s for x in s for y in s):
                out.add(s)
    return out


def test_cycle_parsing():
    assert parse_cycles("(1 2 3)") == (1, 2, 0)
    assert parse_cycles("(1 2)(3 4)") == (1, 0, 3, 2)
    assert parse_cycles("(1,2)", 3) == (1, 0, 2)
    assert cycle_string((1, 2, 0)) == "(1 2 3)"
    assert cycle_string(identity(4)) == "()"
    with pytest.raises(GroupSpecError):
        parse_cycles("(1 2")
    with pytest.raises(GroupSpecError):
        parse_cycles("(0 1)")
    with pytest.raises(GroupSpecError):
        parse_cycles("(1 2)(2 3)")
    with pytest.raises(GroupSpecError):
        parse_cycles("(1 5)", 3)


def test_catalog_orders():
    for name, order in CATALOG_ORDERS.items():
        G = group_from_spec(name)
        assert G.order == order, name
        assert G.order % 1 == 0
        assert math.factorial(G.degree) % G.order == 0  # Lagrange in Sym(domain)


def test_spec_grammar():
    assert group_from_spec("(1 2 3),(1 2)").order == 6
    assert group_from_spec("domain=4 (1 2)").order == 2
    assert group_from_spec("wreath(C2,2)").order == 8
    assert group_from_spec("product(C2,C3)").order == 6
    with pytest.raises(GroupSpecError):
        group_from_spec("Nope")
    with pytest.raises(GroupSpecError):
        group_from_spec("")
    with pytest.raises(CapExceeded):
        group_from_spec("S4", max_elements=10)


def test_q8_structure():
    Q8 = group_from_spec("Q8")
    assert Q8.order == 8
    # unique element of order 2
    from wreathmarks.groups import element_order
    assert sum(1 for g in Q8.elements if element_order(g) == 2) == 1
    # nonabelian
    a, b = Q8.generators
    assert mul(a, b) != mul(b, a)


def test_closure_is_subgroup():
    G = group_from_spec("S4")
    for gens in [G.generators, G.generators[:1]]:
        H = close_under_product(G.degree, gens)
        assert identity(G.degree) in H
        for x in H:
            assert inv(x) in H
            for y in H:
                assert mul(x, y) in H


def test_subgroup_enumeration_matches_brute_force():
    for spec in ["C2", "C3", "V4", "S3", "D4", "Q8"]:
        G = group_from_spec(spec)
        t = subgroup_conjugacy_classes(G)
        assert {s.elems for s in t.all_subgroups} == brute_force_subgroups(G), spec


def test_class_counts():
    assert len(table("e")) == 1
    assert len(table("C2")) == 2
    assert [c.order for c in table("S3").classes] == [1, 2, 3, 6]
    assert table("S3").class_names == ("e", "C2", "C3", "S3")
    # V4: trivial, three C2's, V4
    assert [c.order for c in table("V4").classes] == [1, 2, 2, 2, 4]


def test_class_partition_count():
    """Sum of class sizes |G|/|N_G(rep)| equals the total number of subgroups."""
    for spec in ["S3", "D4", "Q8", "A4", "S4", "wreath(C2,2)", "wreath(C2,3)"]:
        G = group_from_spec(spec)
        t = subgroup_conjugacy_classes(G)
        total = sum(G.order // normalizer(G, rep).order for rep in t.classes)
        assert total == len(t.all_subgroups), spec


def test_classes_are_pairwise_nonconjugate():
    G = group_from_spec("D4")
    t = subgroup_conjugacy_classes(G)
    for i, H in enumerate(t.classes):
        for j, K in enumerate(t.classes):
            if i >= j:
                continue
            conjugate = any(H.conjugate(g).elems == K.elems for g in G.elements)
            assert not conjugate


def test_normalizer():
    S3 = group_from_spec("S3")
    t = table("S3")
    c3 = next(c for c in t.classes if c.order == 3)
    assert normalizer(S3, c3).order == 6  # C3 normal in S3
    c2 = next(c for c in t.classes if c.order == 2)
    assert normalizer(S3, c2).elems == c2.elems  # self-normalizing
    whole = SubgroupRef.whole(S3)
    assert normalizer(S3, whole).elems == S3.element_set


def test_double_cosets():
    S3 = group_from_spec("S3")
    t = table("S3")
    c2 = next(c for c in t.classes if c.order == 2)
    dc = double_cosets(S3, c2, c2)
    assert sorted(size for _, size in dc) == [2, 4]
    whole = SubgroupRef.whole(S3)
    assert [size for _, size in double_cosets(S3, whole, whole)] == [6]
    triv = SubgroupRef.trivial(S3)
    assert len(double_cosets(S3, triv, triv)) == 6
    # sizes always partition G
    for H in t.classes:
        for K in t.classes:
            assert sum(s for _, s in double_cosets(S3, H, K)) == 6


def test_wreath_sizes_and_multiplication_law():
    C2 = group_from_spec("C2")
    S3 = group_from_spec("S3")
    assert wreath_product(C2, 2)[0].order == 8
    assert wreath_product(S3, 2)[0].order == 72
    assert wreath_product(S3, 0)[0].order == 1

    W, embedding, proj = wreath_product(C2, 2)
    # encode/decode roundtrip and the semidirect multiplication law, exhaustively
    elems = []
    for gbar in itertools.product(C2.elements, repeat=2):
        for sigma in symmetric_group(2).elements:
            elems.append((gbar, sigma))
    for gbar, sigma in elems:
        w = W.encode(list(gbar), sigma)
        got_gbar, got_sigma, _ = W.decode(w)
        assert got_gbar == tuple(gbar) and got_sigma == sigma
    for (g1, s1) in elems:
        for (g2, s2) in elems:
            prod = mul(W.encode(list(g1), s1), W.encode(list(g2), s2))
            # (g1, s1)(g2, s2) = (g1 . s1 g2, s1 s2), with (s g)_i = g_{s^-1(i)}
            s1_inv = inv(s1)
            twisted = tuple(g2[s1_inv[i]] for i in range(2))
            expect = W.encode([mul(a, b) for a, b in zip(g1, twisted)], mul(s1, s2))
            assert prod == expect


def test_wreath_projection_and_embedding():
    C2 = group_from_spec("C2")
    W, embedding, proj = wreath_product(C2, 3)
    assert proj.is_homomorphism()
    assert embedding.is_homomorphism()
    assert embedding.source.order == 8  # C2^3
    assert proj.image_of(W.elements) == proj.target.element_set
    assert wreath_product(C2, 3)[0] is W  # cached


def test_wreath_cap():
    S3 = group_from_spec("S3")
    W, _, _ = wreath_product(S3, 4)  # construction is lazy
    assert W.expected_order == 31104
    with pytest.raises(CapExceeded):
        W.elements  # materializing 31104 > 10000 is refused


def test_left_cosets():
    S3 = group_from_spec("S3")
    c2 = next(c for c in table("S3").classes if c.order == 2)
    reps = left_cosets(S3, c2)
    assert len(reps) == 3
    seen = set()
    for r in reps:
        seen |= {mul(r, h) for h in c2.elems}
    assert seen == S3.element_set


def test_induced_class_map_identity_and_inclusion():
    S3 = group_from_spec("S3")
    tS3 = table("S3")
    ident = GroupHom.identity_hom(S3)
    assert induced_class_map(ident, tS3, tS3) == list(range(4))

    C2sub = next(c for c in tS3.classes if c.order == 2)
    from wreathmarks.groups import as_group
    H = as_group(C2sub)
    tH = subgroup_conjugacy_classes(H)
    incl = GroupHom.inclusion(H, S3)
    assert induced_class_map(incl, tH, tS3) == [0, 1]


def test_induced_class_map_surjection():
    """S3 -> C2 (the sign map): [e]->[e], [C2]->[C2], [C3]->[e], [S3]->[C2]."""
    S3 = group_from_spec("S3")
    C2 = group_from_spec("C2")
    rot, flip = S3.generators  # (1 2 3), (1 2)
    sign = GroupHom.from_gen_images(S3, C2, {rot: C2.identity, flip: C2.generators[0]})
    assert sign.is_homomorphism()
    got = induced_class_map(sign, table("S3"), table("C2"))
    assert got == [0, 1, 0, 1]


def test_monomial_representation_examples():
    # H = e in C2: the Cayley embedding C2 -> Sigma_2
    C2 = group_from_spec("C2")
    phi = monomial_representation(C2, SubgroupRef.trivial(C2))
    assert phi.is_homomorphism() and phi.is_injective()
    assert phi.target.base.order == 1 and phi.target.n == 2

    # H = G: G -> G wr Sigma_1
    S3 = group_from_spec("S3")
    phi = monomial_representation(S3, SubgroupRef.whole(S3))
    assert phi.is_homomorphism() and phi.is_injective()
    assert phi.target.n == 1

    # H = C2 in S3: injective hom into a group of order 48
    c2 = next(c for c in table("S3").classes if c.order == 2)
    phi = monomial_representation(S3, c2)
    assert phi.target.order == 48
    assert phi.is_homomorphism() and phi.is_injective()


def test_monomial_representation_exhaustive_small():
    for spec in ["C4", "V4", "S3", "D4", "A4", "S4"]:
        G = group_from_spec(spec)
        t = subgroup_conjugacy_classes(G)
        for H in t.classes:
            phi = monomial_representation(G, H)
            assert phi.is_homomorphism(), (spec, H.order)
            assert phi.is_injective(), (spec, H.order)


def test_cyclic_group_helper():
    assert cyclic_group(1).order == 1
    assert cyclic_group(6).spec == "C6"
    assert cyclic_group(12).order == 12
    t = subgroup_conjugacy_classes(cyclic_group(12))
    assert [c.order for c in t.classes] == [1, 2, 3, 4, 6, 12]


def test_enumeration_fast_path_matches_generic():
    """The solvable cyclic-extension enumeration equals generic closure."""
    from wreathmarks.groups import (_subgroups_cyclic_extension, _subgroups_generic,
                                    derived_series_reaches_trivial)
    for spec in ["C6", "D4", "Q8", "S4", "wreath(C2,2)", "wreath(S3,2)"]:
        G = group_from_spec(spec)
        assert derived_series_reaches_trivial(G), spec
        assert set(_subgroups_generic(G)) == set(_subgroups_cyclic_extension(G)), spec


def test_enumeration_insolvable_fallback():
    """A5 is insolvable; the table is still complete via generic closure."""
    from wreathmarks.groups import derived_series_reaches_trivial
    A5 = group_from_spec("(1 2 3 4 5),(1 2 3)")
    assert A5.order == 60
    assert not derived_series_reaches_trivial(A5)
    t = subgroup_conjugacy_classes(A5)
    assert len(t.all_subgroups) == 59  # classical count for A5
    assert [c.order for c in t.classes] == [1, 2, 3, 4, 5, 6, 10, 12, 60]
