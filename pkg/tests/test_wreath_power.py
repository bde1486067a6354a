import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wreathmarks import gsets
from wreathmarks.burnside import BurnsideElement, MarksVector, chi
from wreathmarks.errors import NotInImage
from wreathmarks.groups import (SubgroupRef, subgroup_conjugacy_classes,
                                wreath_product)
from wreathmarks.partitions import DecoratedPartition
from wreathmarks.wreath_power import (AAElement, OrbitTypeRecord, ParksVector, aa_multiply,
                                      alpha, basis_gset, beta, beta_pullback,
                                      decompose_submissive, embed, from_parks, hull,
                                      parks_char, parks_char_basis, parks_char_oracle_value,
                                      parks_power_char, parts_for, power_op,
                                      power_op_difference_closed,
                                      power_op_difference_inductive, power_series, r_map)

from conftest import table


def part(dec, size, mult=1):
    return DecoratedPartition.from_part(dec, size, mult)


def test_alpha_examples(t_s3):
    n = 2
    W, _, _ = wreath_product(t_s3.group, n)
    whole = part(t_s3.index_of_name("S3"), n)
    assert alpha(t_s3, whole).order == W.expected_order  # G wr Sigma_n itself

    singles = DecoratedPartition.from_part(0, 1, n)  # n * ([e],1)
    assert alpha(t_s3, singles).order == 1

    sym_only = part(0, n)  # ([e],n): Sigma_n with trivial base
    assert alpha(t_s3, sym_only).order == 2


def test_beta_examples(t_c2):
    C2 = t_c2.group
    W, _, _ = wreath_product(C2, 2)
    triv = SubgroupRef.trivial(W)
    assert beta(W, triv, t_c2) == DecoratedPartition.from_part(0, 1, 2)
    whole = SubgroupRef.whole(W)
    assert beta(W, whole, t_c2) == part(1, 2)
    # Sigma_2 with trivial base: one orbit, H_ii = e
    swap = W.encode([C2.identity] * 2, (1, 0))
    sym = SubgroupRef.generated(W, [swap])
    assert beta(W, sym, t_c2) == part(0, 2)


def test_beta_conjugation_invariance():
    t = table("C2")
    W, _, _ = wreath_product(t.group, 3)
    rng = random.Random(11)
    elements = list(W.elements)
    for _ in range(10):
        H = SubgroupRef.generated(W, [rng.choice(elements), rng.choice(elements)])
        la = beta(W, H, t)
        for _ in range(4):
            g = rng.choice(elements)
            assert beta(W, H.conjugate(g), t) == la


def test_beta_is_monoid_hom():
    """beta([H] star [K]) = beta([H]) + beta([K]) via explicit product subgroups."""
    t = table("C2")
    C2 = t.group
    W1, _, _ = wreath_product(C2, 1)
    W2, _, _ = wreath_product(C2, 2)
    W3, _, _ = wreath_product(C2, 3)
    rng = random.Random(13)
    for _ in range(8):
        H = SubgroupRef.generated(W1, [rng.choice(list(W1.elements))])
        K = SubgroupRef.generated(W2, [rng.choice(list(W2.elements)),
                                       rng.choice(list(W2.elements))])
        # embed H x K into W3 = blocks [0] and [1,2]
        gens = []
        for h in H.gens:
            gb, sig, _ = W1.decode(h)
            gens.append(W3.encode([gb[0], C2.identity, C2.identity], (0, 1, 2)))
        for k in K.gens:
            gb, sig, _ = W2.decode(k)
            sigma3 = (0, sig[0] + 1, sig[1] + 1)
            gens.append(W3.encode([C2.identity, gb[0], gb[1]], sigma3))
        HK = SubgroupRef.generated(W3, gens)
        assert beta(W3, HK, t) == beta(W1, H, t) + beta(W2, K, t)


def test_orbit_record_groupoid_relations():
    """e in H_ii, H_jk H_ij <= H_ik, H_ij^-1 = H_ji."""
    from wreathmarks.perms import inv as pinv, mul as pmul
    from wreathmarks.wreath_power import transporter_sets
    t = table("C2")
    W, _, _ = wreath_product(t.group, 3)
    rng = random.Random(17)
    for _ in range(6):
        H = SubgroupRef.generated(W, [rng.choice(list(W.elements)),
                                      rng.choice(list(W.elements))])
        sets = transporter_sets(W, H)
        rec = OrbitTypeRecord(W, H, t)
        assert sum(size for _, size in rec.entries) == 3
        for i in range(3):
            assert t.group.identity in sets.get((i, i), frozenset())
        for (i, j), sij in sets.items():
            assert frozenset(pinv(x) for x in sij) == sets[(j, i)]
            for (i2, k), sjk in sets.items():
                if i2 != j:
                    continue
                for a in sij:
                    for b in sjk:
                        assert pmul(b, a) in sets[(i, k)]


def test_retract_small():
    for spec, nmax in [("C2", 3), ("C3", 3), ("S3", 2)]:
        t = table(spec)
        for n in range(nmax + 1):
            W, _, _ = wreath_product(t.group, n)
            for la in parts_for(t, n):
                assert beta(W, alpha(t, la), t) == la, (spec, la)


def test_hull_examples(t_c2):
    C2 = t_c2.group
    W, _, _ = wreath_product(C2, 2)
    g = C2.generators[0]
    diag = SubgroupRef.generated(W, [W.encode([g, g], (0, 1))])
    h = hull(W, diag)
    assert h.order == 4  # the full base C2 x C2
    assert beta(W, h, t_c2) == beta(W, diag, t_c2) == part(1, 1, 2)
    # hull of an alpha subgroup is itself
    for la in parts_for(t_c2, 2):
        a = alpha(t_c2, la)
        assert hull(W, a).elems == a.elems
    triv = SubgroupRef.trivial(W)
    assert hull(W, triv).elems == triv.elems


def test_hull_properties():
    t = table("C2")
    W, _, _ = wreath_product(t.group, 3)
    X = gsets.natural_gset(t.group)
    X3 = gsets.power_gset(X, 3)
    rng = random.Random(19)
    for _ in range(8):
        H = SubgroupRef.generated(W, [rng.choice(list(W.elements)),
                                      rng.choice(list(W.elements))])
        Hp = hull(W, H)
        assert H.elems <= Hp.elems
        assert hull(W, Hp).elems == Hp.elems
        assert beta(W, Hp, t) == beta(W, H, t)
        assert gsets.fixed_point_count(X3, H) == gsets.fixed_point_count(X3, Hp)
        # the hull is conjugate to the alpha representative
        a = alpha(t, beta(W, H, t))
        assert any(Hp.conjugate(g).elems == a.elems for g in W.elements)


def test_r_map(t_c2):
    C2 = t_c2.group
    W, _, _ = wreath_product(C2, 2)
    tW = subgroup_conjugacy_classes(W)
    # on a basis element of the subring, r is the identity
    for la in parts_for(t_c2, 2):
        x = embed(AAElement.basis(t_c2, la), tW)
        assert r_map(x, t_c2) == AAElement.basis(t_c2, la)
    # r([(C2 wr S2)/diag]) = basis 2*([C2],1)
    g = C2.generators[0]
    diag = SubgroupRef.generated(W, [W.encode([g, g], (0, 1))])
    x = BurnsideElement.basis(tW, tW.class_index(diag))
    assert r_map(x, t_c2) == AAElement.basis(t_c2, part(1, 1, 2))
    # r([W/e]) = basis n*([e],1)
    x = BurnsideElement.basis(tW, 0)
    assert r_map(x, t_c2) == AAElement.basis(t_c2, part(0, 1, 2))


def test_star_monoid_ring(t_s3):
    ka = part(0, 1)
    la = part(1, 2)
    x = AAElement.basis(t_s3, ka)
    y = AAElement.basis(t_s3, la)
    assert x.star(y) == AAElement.basis(t_s3, ka + la)
    unit = AAElement.one(t_s3)
    assert unit.star(x) == x
    two_x = x.scale(2)
    assert two_x.star(x).coords == {part(0, 1, 2): 2}


def test_power_op_basis(t_s3):
    """P_n([G/H]) is the single basis partition ([H], n)."""
    for idx in range(t_s3.size):
        for n in range(4):
            got = power_op(BurnsideElement.basis(t_s3, idx), n)
            assert got == AAElement.basis(t_s3, part(idx, n) if n else DecoratedPartition.empty())


def test_power_op_additivity(t_c2):
    """P_n(x+y) = sum P_i(x) star P_j(y), for several virtual elements."""
    rng = random.Random(23)
    for _ in range(10):
        x = BurnsideElement(t_c2, [rng.randrange(-2, 3) for _ in range(2)])
        y = BurnsideElement(t_c2, [rng.randrange(-2, 3) for _ in range(2)])
        for n in range(4):
            lhs = power_op(x + y, n)
            rhs = AAElement.zero(t_c2, n)
            for i in range(n + 1):
                rhs = rhs + power_op(x, i).star(power_op(y, n - i))
            assert lhs == rhs


def test_power_op_zero_and_unit(t_c2):
    zero = BurnsideElement.zero(t_c2)
    assert power_op(zero, 0) == AAElement.one(t_c2)
    for n in range(1, 4):
        assert power_op(zero, n) == AAElement.zero(t_c2, n)


def test_power_difference_forms_agree(t_c2):
    """Closed negation formula == inductive definition == series route."""
    coords = range(-2, 3)
    for xa, xb in itertools.product(range(0, 3), repeat=2):
        for ya, yb in itertools.product(range(0, 3), repeat=2):
            x = BurnsideElement(t_c2, [xa, xb])
            y = BurnsideElement(t_c2, [ya, yb])
            for n in range(4):
                direct = power_op(x - y, n)
                closed = power_op_difference_closed(x, y, n)
                inductive = power_op_difference_inductive(x, y, n)
                assert direct == closed == inductive, (x.coords, y.coords, n)


def test_power_op_oracle_small():
    for spec, nmax in [("C2", 3), ("C3", 2)]:
        t = table(spec)
        for coords in itertools.product(range(3), repeat=t.size):
            if not any(coords):
                continue
            x = BurnsideElement(t, coords)
            X = gsets.from_burnside_coords(t, coords)
            for n in range(1, nmax + 1):
                Xn = gsets.power_gset(X, n)
                assert decompose_submissive(Xn, t) == power_op(x, n)


def test_parks_star_examples(t_c2):
    e1 = part(0, 1)
    c1 = part(1, 1)
    f = ParksVector.indicator(t_c2, e1)
    g = ParksVector.indicator(t_c2, c1)
    unit = ParksVector.indicator(t_c2, DecoratedPartition.empty())
    assert unit.star(f) == f
    ff = f.star(f)
    assert ff.values == {part(0, 1, 2): Fraction(2)}
    fg = f.star(g)
    assert fg.values == {e1 + c1: Fraction(1)}


def test_parks_star_commutative_associative(t_s3):
    indicators = [ParksVector.indicator(t_s3, la)
                  for n in range(3) for la in parts_for(t_s3, n)]
    for f in indicators:
        for g in indicators:
            assert f.star(g) == g.star(f)
    one_deg = [ParksVector.indicator(t_s3, la) for la in parts_for(t_s3, 1)]
    for f in one_deg:
        for g in one_deg:
            for h in one_deg:
                assert f.star(g).star(h) == f.star(g.star(h))


def test_parks_star_composition_form(t_s3):
    for i, j in [(1, 1), (1, 2), (2, 1)]:
        for la in parts_for(t_s3, i):
            for mu in parts_for(t_s3, j):
                f = ParksVector.indicator(t_s3, la)
                g = ParksVector.indicator(t_s3, mu)
                fg = f.star(g)
                for nu in parts_for(t_s3, i + j):
                    assert fg(nu) == f.star_value_via_compositions(g, nu)


def test_parks_power_char_examples(t_s3):
    ones = MarksVector.constant(t_s3, 1)
    p = parks_power_char(ones, 3)
    assert all(p(la) == 1 for la in parts_for(t_s3, 3))

    f = chi(BurnsideElement.basis(t_s3, t_s3.index_of_name("C2")))
    la = part(t_s3.index_of_name("e"), 1) + part(t_s3.index_of_name("C2"), 1)
    assert parks_power_char(f, 2)(la) == 3  # 3 * 1

    zero = MarksVector.constant(t_s3, 0)
    assert parks_power_char(zero, 2) == ParksVector.zero(t_s3, 2)


def test_parks_char_examples(t_e, t_s3):
    # over e, n=2: chi(P_2(2)) at {1,1} is 2^2 = 4
    two = BurnsideElement(t_e, [2])
    f = parks_char(power_op(two, 2))
    assert f(part(0, 1, 2)) == 4
    assert f(part(0, 2)) == 2

    unit = AAElement.one(t_s3)
    assert parks_char(unit)(DecoratedPartition.empty()) == 1

    # chi(P_n([G/H]))(lam) = prod |(G/H)^K|^mult
    marks = chi(BurnsideElement.basis(t_s3, t_s3.index_of_name("C2")))
    for n in range(1, 3):
        f = parks_char(power_op(BurnsideElement.basis(t_s3, t_s3.index_of_name("C2")), n))
        for la in parts_for(t_s3, n):
            want = 1
            for (d, _s), m in la.items():
                want *= int(marks.values[d]) ** m
            assert f(la) == want


def test_parks_char_matches_oracle():
    for spec, n in [("C2", 2), ("C3", 2), ("S3", 2)]:
        t = table(spec)
        for la in parts_for(t, n):
            pc = parks_char_basis(t, la)
            for ka in parts_for(t, n):
                assert pc(ka) == parks_char_oracle_value(t, la, ka), (spec, la, ka)


def test_parks_char_is_injective_ring_map_on_basis(t_c2):
    n = 2
    for la in parts_for(t_c2, n):
        for mu in parts_for(t_c2, n):
            x = AAElement.basis(t_c2, la)
            y = AAElement.basis(t_c2, mu)
            assert parks_char(aa_multiply(x, y)) == parks_char(x) * parks_char(y)
    chars = [tuple(sorted(parks_char_basis(t_c2, la).values.items(),
                          key=lambda kv: kv[0].sort_key())) for la in parts_for(t_c2, n)]
    assert len(set(chars)) == len(chars)


def test_pullback_square(t_c2):
    W, _, _ = wreath_product(t_c2.group, 2)
    tW = subgroup_conjugacy_classes(W)
    for la in parts_for(t_c2, 2):
        x = AAElement.basis(t_c2, la)
        assert chi(embed(x, tW)) == beta_pullback(parks_char(x), tW)


def test_from_parks_roundtrip(t_c2, t_s3):
    rng = random.Random(29)
    for t, n in [(t_c2, 2), (t_c2, 3), (t_s3, 2)]:
        basis = parts_for(t, n)
        for _ in range(6):
            coords = {la: rng.randrange(-2, 3) for la in basis}
            x = AAElement(t, n, coords)
            assert from_parks(t, n, parks_char(x)) == x


def test_from_parks_not_integral(t_c2):
    f = ParksVector.indicator(t_c2, part(0, 1))
    with pytest.raises(NotInImage):
        from_parks(t_c2, 1, f)


def test_decompose_submissive_matches_full_table(t_c2):
    """Stabilizer-beta decomposition agrees with the Conj(W)-table route."""
    W, _, _ = wreath_product(t_c2.group, 2)
    tW = subgroup_conjugacy_classes(W)
    for la in parts_for(t_c2, 2):
        for mu in parts_for(t_c2, 2):
            X = basis_gset(t_c2, la)
            Y = basis_gset(t_c2, mu)
            Z = gsets.cartesian_product(X, Y)
            via_beta = decompose_submissive(Z, t_c2)
            via_table = r_map(gsets.decompose(Z, tW), t_c2)
            assert via_beta == via_table


def test_power_series_prefix(t_c2):
    """power_series carries every P_i at once; degree slices match power_op."""
    x = BurnsideElement(t_c2, [2, -1])
    series = power_series(x, 3)
    for n in range(4):
        sliced = {la: c for la, c in series.items() if la.size == n}
        assert AAElement(t_c2, n, sliced) == power_op(x, n)


def test_fixed_point_product_on_sampled_subgroups():
    """|(X^n)^H| = prod over orbits |X^{H_ii}|, for arbitrary sampled subgroups
    H (not just alpha images), X over S3 with |X| <= 6, n <= 3."""
    t = table("S3")
    G = t.group
    rng = random.Random(47)
    regular = gsets.coset_gset(G, SubgroupRef.trivial(G))
    for X, degrees in [(gsets.natural_gset(G), (2, 3)), (regular, (2, 3))]:
        row = [gsets.fixed_point_count(X, K) for K in t.classes]
        for n in degrees:
            W, _, _ = wreath_product(G, n)
            Xn = gsets.power_gset(X, n)
            elements = list(W.elements)
            for _ in range(10):
                H = SubgroupRef.generated(W, [rng.choice(elements), rng.choice(elements)])
                rec = OrbitTypeRecord(W, H, t)
                want = 1
                for cls_idx, _size in rec.entries:
                    want *= row[cls_idx]
                assert gsets.fixed_point_count(Xn, H) == want


def test_transitive_subgroup_fixed_points():
    """For H transitive on [n], projection gives |(X^n)^H| = |X^{H_ii}|."""
    t = table("C3")
    G = t.group
    X = gsets.coset_gset(G, SubgroupRef.trivial(G))
    n = 2
    W, _, _ = wreath_product(G, n)
    Xn = gsets.power_gset(X, n)
    rng = random.Random(53)
    elements = list(W.elements)
    found = 0
    for _ in range(40):
        H = SubgroupRef.generated(W, [rng.choice(elements), rng.choice(elements)])
        rec = OrbitTypeRecord(W, H, t)
        if len(rec.orbits) != 1:
            continue
        found += 1
        cls_idx, size = rec.entries[0]
        assert size == n
        assert gsets.fixed_point_count(Xn, H) == \
            gsets.fixed_point_count(X, t.classes[cls_idx])
    assert found > 0


def test_internal_multiplication_unit(t_c2):
    """P_n([G/G]) is the unit of the internal degree-n ring."""
    n = 2
    top = power_op(BurnsideElement.one(t_c2), n)
    for la in parts_for(t_c2, n):
        x = AAElement.basis(t_c2, la)
        assert aa_multiply(x, top) == x
        assert aa_multiply(top, x) == x


def test_internal_multiplication_commutes_associates(t_c2):
    n = 2
    basis = [AAElement.basis(t_c2, la) for la in parts_for(t_c2, n)]
    for x in basis:
        for y in basis:
            assert aa_multiply(x, y) == aa_multiply(y, x)
    sample = basis[:3]
    for x in sample:
        for y in sample:
            for z in sample:
                assert aa_multiply(aa_multiply(x, y), z) == \
                    aa_multiply(x, aa_multiply(y, z))


@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
@settings(max_examples=30, deadline=None)
def test_power_additivity_property_s3(xc, yc):
    """P_n(x+y) = sum P_i(x) star P_j(y) over random virtual S3 elements."""
    t = table("S3")
    x = BurnsideElement(t, xc)
    y = BurnsideElement(t, yc)
    for n in (1, 2):
        lhs = power_op(x + y, n)
        rhs = AAElement.zero(t, n)
        for i in range(n + 1):
            rhs = rhs + power_op(x, i).star(power_op(y, n - i))
        assert lhs == rhs


@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
@settings(max_examples=30, deadline=None)
def test_parks_char_injective_property(coords):
    """from_parks recovers any virtual element from its character (degree 2)."""
    t = table("S3")
    basis = parts_for(t, 2)
    x = AAElement(t, 2, {basis[i % len(basis)]: c for i, c in enumerate(coords)})
    assert from_parks(t, 2, parks_char(x)) == x
