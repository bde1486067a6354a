"""Verification suites: each suite exercises a family of exact identities and
returns a deterministic report. Suites never raise on cap overruns; the
affected case is reported as a skip.

Suite names: retract, fixed-points, power-oracle, parks-ring, pullback,
transfers, fw, gcd, all.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import gsets
from .burnside import (BurnsideElement, MarksVector, chi, marks_transfer_product)
from .errors import CapExceeded, NotInImage, WreathmarksError
from .groups import (DEFAULT_ELEMENT_CAP, DEFAULT_SUBGROUP_CAP, GroupHom, SubgroupRef,
                     as_group, cyclic_group, group_from_spec, subgroup_conjugacy_classes,
                     wreath_product)
from .induced import (fw_map, fw_wreath, gcd_property, fw_commutes_with_norm,
                      transfer_parks_inclusion, transfer_parks_inclusion_via_cosets,
                      transfer_parks_inclusion_via_lift, transfer_parks_trivial,
                      transfer_parks_trivial_via_coeffs)
from .wreath_power import (AAElement, ParksVector, aa_multiply, alpha, beta,
                           beta_pullback, decompose_submissive, embed, hull,
                           parks_char, parks_char_basis, parks_char_oracle_value,
                           parts_for, power_op)

SUITES = ("retract", "fixed-points", "power-oracle", "parks-ring", "pullback",
          "transfers", "fw", "gcd", "all")


@dataclass
class Case:
    name: str
    status: str  # pass | fail | skip | info
    detail: str = ""

    def as_dict(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class Context:
    group_spec: str
    n: int
    cap_elements: int = DEFAULT_ELEMENT_CAP
    cap_subgroups: int = DEFAULT_SUBGROUP_CAP
    oracle: bool = True

    def __post_init__(self):
        self.group = group_from_spec(self.group_spec, max_elements=self.cap_elements)
        self.table = subgroup_conjugacy_classes(self.group, cap=self.cap_subgroups)
        self.e_table = subgroup_conjugacy_classes(group_from_spec("e"))


def _capped(case_name: str, fn) -> Case:
    try:
        return fn()
    except CapExceeded as exc:
        return Case(case_name, "skip", f"cap: {exc}")


def _oracle_case(ctx: Context, case_name: str, fn) -> Case:
    if not ctx.oracle:
        return Case(case_name, "skip", "oracle disabled")
    return _capped(case_name, fn)


def suite_retract(ctx: Context) -> list:
    cases = []
    for k in range(ctx.n + 1):
        def run(k=k):
            W, _, _ = wreath_product(ctx.group, k, max_elements=ctx.cap_elements)
            count = 0
            for la in parts_for(ctx.table, k):
                sub = alpha(ctx.table, la, max_elements=ctx.cap_elements)
                if beta(W, sub, ctx.table) != la:
                    return Case(f"retract n={k}", "fail", f"beta(alpha({la!r})) != lambda")
                count += 1
            return Case(f"retract n={k}", "pass", f"{count} partitions checked")
        cases.append(_capped(f"retract n={k}", run))
    return cases


def suite_fixed_points(ctx: Context) -> list:
    cases = []
    table = ctx.table
    for k in range(1, ctx.n + 1):
        def run_prod(k=k):
            checked = 0
            for idx in range(table.size):
                X = gsets.coset_gset(ctx.group, table.classes[idx])
                Xk = gsets.power_gset(X, k, max_elements=ctx.cap_elements)
                marks_row = chi(BurnsideElement.basis(table, idx)).values
                for la in parts_for(table, k):
                    sub = alpha(table, la, max_elements=ctx.cap_elements)
                    got = gsets.fixed_point_count(Xk, sub)
                    want = 1
                    for (d, _s), m in la.items():
                        want *= int(marks_row[d]) ** m
                    if got != want:
                        return Case(f"fixed-point-product n={k}", "fail",
                                    f"X=[G/{table.class_names[idx]}], {la!r}: {got} != {want}")
                    checked += 1
            return Case(f"fixed-point-product n={k}", "pass", f"{checked} pairs checked")
        cases.append(_oracle_case(ctx, f"fixed-point-product n={k}", run_prod))

        def run_hull(k=k):
            W, _, _ = wreath_product(ctx.group, k, max_elements=ctx.cap_elements)
            X = gsets.natural_gset(ctx.group)
            Xk = gsets.power_gset(X, k, max_elements=ctx.cap_elements)
            rng = random.Random(0)
            elements = list(W.elements)
            checked = 0
            for trial in range(8):
                gens = [elements[rng.randrange(len(elements))] for _ in range(2)]
                H = SubgroupRef.generated(W, gens)
                Hp = hull(W, H)
                if not H.elems <= Hp.elems:
                    return Case(f"hull n={k}", "fail", "H not inside hull(H)")
                if hull(W, Hp).elems != Hp.elems:
                    return Case(f"hull n={k}", "fail", "hull not idempotent")
                if beta(W, Hp, table) != beta(W, H, table):
                    return Case(f"hull n={k}", "fail", "hull changed beta")
                if gsets.fixed_point_count(Xk, H) != gsets.fixed_point_count(Xk, Hp):
                    return Case(f"hull n={k}", "fail", "fixed points differ on hull")
                checked += 1
            return Case(f"hull n={k}", "pass", f"{checked} sampled subgroups")
        cases.append(_oracle_case(ctx, f"hull n={k}", run_hull))
    return cases


def _effective_vectors(size: int, max_coord: int, limit: int = 300):
    count = 0
    for vec in itertools.product(range(max_coord + 1), repeat=size):
        if not any(vec):
            continue
        yield vec
        count += 1
        if count >= limit:
            return


def suite_power_oracle(ctx: Context) -> list:
    cases = []
    table = ctx.table
    for k in range(1, ctx.n + 1):
        def run(k=k):
            checked = 0
            for vec in _effective_vectors(table.size, 2):
                x = BurnsideElement(table, vec)
                X = gsets.from_burnside_coords(table, vec)
                Xk = gsets.power_gset(X, k, max_elements=ctx.cap_elements)
                got = decompose_submissive(Xk, table)
                want = power_op(x, k)
                if got != want:
                    return Case(f"power-oracle n={k}", "fail",
                                f"coords {vec}: {got!r} != {want!r}")
                checked += 1
            return Case(f"power-oracle n={k}", "pass", f"{checked} effective elements")
        cases.append(_oracle_case(ctx, f"power-oracle n={k}", run))
    return cases


def suite_parks_ring(ctx: Context) -> list:
    cases = []
    table = ctx.table
    n = ctx.n

    def run_star():
        checked = 0
        degrees = [k for k in range(n + 1)]
        indicators = {k: [ParksVector.indicator(table, la) for la in parts_for(table, k)]
                      for k in degrees}
        for i in degrees:
            for j in degrees:
                if i + j > n:
                    continue
                for f in indicators[i]:
                    for g in indicators[j]:
                        fg = f.star(g)
                        if fg != g.star(f):
                            return Case("parks-star comm", "fail", f"{f!r} {g!r}")
                        for mu in fg.values:
                            comp = f.star_value_via_compositions(g, mu)
                            if comp != fg.values[mu]:
                                return Case("parks-star forms", "fail",
                                            f"partition vs composition at {mu!r}")
                        checked += 1
        return Case("parks-star comm+forms", "pass", f"{checked} pairs")
    cases.append(run_star())

    def run_assoc():
        checked = 0
        for i in range(n + 1):
            for j in range(n - i + 1):
                for k in range(n - i - j + 1):
                    for la in parts_for(table, i):
                        for mu in parts_for(table, j):
                            for nu in parts_for(table, k):
                                f = ParksVector.indicator(table, la)
                                g = ParksVector.indicator(table, mu)
                                h = ParksVector.indicator(table, nu)
                                if f.star(g).star(h) != f.star(g.star(h)):
                                    return Case("parks-star assoc", "fail",
                                                f"{la!r},{mu!r},{nu!r}")
                                checked += 1
        return Case("parks-star assoc", "pass", f"{checked} triples")
    cases.append(run_assoc())

    for k in range(1, n + 1):
        def run_ring(k=k):
            checked = 0
            for la in parts_for(table, k):
                for mu in parts_for(table, k):
                    x = AAElement.basis(table, la)
                    y = AAElement.basis(table, mu)
                    prod = aa_multiply(x, y, max_elements=ctx.cap_elements)
                    lhs = parks_char(prod)
                    rhs = parks_char(x) * parks_char(y)
                    if lhs != rhs:
                        return Case(f"parks-char ring map n={k}", "fail",
                                    f"{la!r} * {mu!r}")
                    checked += 1
            return Case(f"parks-char ring map n={k}", "pass", f"{checked} basis pairs")
        cases.append(_capped(f"parks-char ring map n={k}", run_ring))

        def run_oracle(k=k):
            checked = 0
            for la in parts_for(table, k):
                pc = parks_char_basis(table, la)
                for ka in parts_for(table, k):
                    if pc(ka) != parks_char_oracle_value(table, la, ka,
                                                         max_elements=ctx.cap_elements):
                        return Case(f"parks-char oracle n={k}", "fail", f"{la!r} at {ka!r}")
                    checked += 1
            return Case(f"parks-char oracle n={k}", "pass", f"{checked} values")
        cases.append(_oracle_case(ctx, f"parks-char oracle n={k}", run_oracle))
    return cases


def suite_pullback(ctx: Context) -> list:
    cases = []
    table = ctx.table
    for k in range(1, ctx.n + 1):
        def run(k=k):
            W, _, _ = wreath_product(ctx.group, k, max_elements=ctx.cap_elements)
            wtable = subgroup_conjugacy_classes(W, cap=ctx.cap_subgroups)
            checked = 0
            for la in parts_for(table, k):
                x = AAElement.basis(table, la)
                if chi(embed(x, wtable)) != beta_pullback(parks_char(x), wtable):
                    return Case(f"pullback n={k}", "fail", f"square fails at {la!r}")
                checked += 1
            return Case(f"pullback n={k}", "pass", f"{checked} basis elements")
        cases.append(_capped(f"pullback n={k}", run))

        def run_star(k=k):
            tables = {}
            for m in range(k + 1):
                Wm, _, _ = wreath_product(ctx.group, m, max_elements=ctx.cap_elements)
                tables[m] = (Wm, subgroup_conjugacy_classes(Wm, cap=ctx.cap_subgroups))
            checked = 0
            for i in range(k + 1):
                j = k - i
                Wn, tn = tables[k]
                Wi, ti = tables[i]
                Wj, tj = tables[j]
                for la in parts_for(table, i):
                    for mu in parts_for(table, j):
                        f = ParksVector.indicator(table, la)
                        g = ParksVector.indicator(table, mu)
                        lhs = beta_pullback(f.star(g), tn)
                        rhs = marks_transfer_product(
                            beta_pullback(f, ti), beta_pullback(g, tj),
                            ctx.group, i, j, Wi, Wj, Wn, ti, tj, tn)
                        if lhs != rhs:
                            return Case(f"pullback star n={k}", "fail",
                                        f"beta^* not star-compatible at {la!r},{mu!r}")
                        checked += 1
            return Case(f"pullback star n={k}", "pass", f"{checked} indicator pairs")
        cases.append(_capped(f"pullback star n={k}", run_star))
    return cases


def suite_transfers(ctx: Context) -> list:
    cases = []
    table = ctx.table
    G = ctx.group

    for idx, H in enumerate(table.classes):
        if H.order == G.order:
            continue
        name = table.class_names[idx]
        h_group = as_group(H, name=name)
        h_table = subgroup_conjugacy_classes(h_group, cap=ctx.cap_subgroups)

        def run_paths(H=H, h_table=h_table, name=name):
            for k in range(1, ctx.n + 1):
                m1 = transfer_parks_inclusion(table, H, h_table, k)
                m2 = transfer_parks_inclusion_via_cosets(table, H, h_table, k)
                m3 = transfer_parks_inclusion_via_lift(table, H, h_table, k)
                if not (m1 == m2 == m3):
                    return Case(f"transfer paths H={name}", "fail", f"degree {k}")
            return Case(f"transfer paths H={name}", "pass", f"degrees 1..{ctx.n}")
        cases.append(_capped(f"transfer paths H={table.class_names[idx]}", run_paths))

        def run_oracle(H=H, h_group=h_group, h_table=h_table, name=name):
            phi = GroupHom.inclusion(h_group, G)
            checked = 0
            for k in range(1, min(ctx.n, 2) + 1):
                WH, _, _ = wreath_product(h_group, k, max_elements=ctx.cap_elements)
                WG, _, _ = wreath_product(G, k, max_elements=ctx.cap_elements)
                phi_wr = GroupHom.inclusion(WH, WG)
                mat = transfer_parks_inclusion(table, H, h_table, k)
                for la in parts_for(h_table, k):
                    X = gsets.coset_gset(WH, alpha(h_table, la, ctx.cap_elements))
                    ind = gsets.induce(phi_wr, X)
                    got = parks_char(decompose_submissive(ind, table))
                    want = mat.apply(parks_char_basis(h_table, la))
                    if got != want:
                        return Case(f"transfer oracle H={name}", "fail",
                                    f"degree {k}, {la!r}")
                    checked += 1
            return Case(f"transfer oracle H={name}", "pass", f"{checked} basis sets")
        cases.append(_oracle_case(ctx, f"transfer oracle H={table.class_names[idx]}", run_oracle))

    def run_trivial():
        for k in range(1, ctx.n + 1):
            if transfer_parks_trivial(table, ctx.e_table, k) != \
               transfer_parks_trivial_via_coeffs(table, ctx.e_table, k):
                return Case("trivial-transfer forms", "fail", f"degree {k}")
        return Case("trivial-transfer forms", "pass", f"degrees 1..{ctx.n}")
    cases.append(_capped("trivial-transfer forms", run_trivial))

    def run_deflation():
        checked = 0
        for k in range(1, ctx.n + 1):
            WG, _, sigma_proj = wreath_product(G, k, max_elements=ctx.cap_elements)
            sym = sigma_proj.target
            sym_table = subgroup_conjugacy_classes(sym, cap=ctx.cap_subgroups)
            mat = transfer_parks_trivial(table, ctx.e_table, k)
            for la in parts_for(table, k):
                X = gsets.coset_gset(WG, alpha(table, la, ctx.cap_elements))
                defl = gsets.induce(sigma_proj, X)
                lhs = chi(gsets.decompose(defl, sym_table))
                f_e = mat.apply(parks_char_basis(table, la))
                rhs_vals = []
                for rep in sym_table.classes:
                    orbs = _orbit_partition_of_sym_subgroup(sym, rep)
                    rhs_vals.append(f_e(orbs))
                rhs = MarksVector(sym_table, rhs_vals)
                if lhs != rhs:
                    return Case("deflation oracle", "fail", f"degree {k}, {la!r}")
                checked += 1
        return Case("deflation oracle", "pass", f"{checked} basis sets")
    cases.append(_oracle_case(ctx, "deflation oracle", run_deflation))

    def run_burnside_lemma():
        rng = random.Random(1)
        mat = transfer_parks_trivial(table, ctx.e_table, 1)
        from .partitions import DecoratedPartition
        one = DecoratedPartition.from_part(0, 1)
        for trial in range(20):
            vec = [rng.randrange(3) for _ in range(table.size)]
            if not any(vec):
                vec[0] = 1
            X = gsets.from_burnside_coords(table, vec)
            orbit_count = len(gsets.orbits(X))
            f = parks_char(AAElement(
                table, 1,
                {parts_for(table, 1)[i]: c for i, c in enumerate(vec) if c}))
            got = mat.apply(f)(one)
            if got != orbit_count:
                return Case("burnside lemma n=1", "fail", f"trial {trial}: {got} != {orbit_count}")
        return Case("burnside lemma n=1", "pass", "20 random G-sets")
    cases.append(_oracle_case(ctx, "burnside lemma n=1", run_burnside_lemma))
    return cases


def _orbit_partition_of_sym_subgroup(sym, rep):
    """Orbit-size partition of a subgroup of Sigma_k on [k], as an e-decorated partition."""
    from .partitions import DecoratedPartition
    n = sym.degree
    seen = set()
    sizes = []
    for i in range(n):
        if i in seen:
            continue
        orb = {i}
        frontier = [i]
        while frontier:
            a = frontier.pop()
            for g in rep.gens:
                b = g[a]
                if b not in orb:
                    orb.add(b)
                    frontier.append(b)
        seen |= orb
        sizes.append(len(orb))
    return DecoratedPartition.from_sizes(sizes)


def suite_fw(ctx: Context) -> list:
    cases = []
    table = ctx.table
    G = ctx.group
    cm = cyclic_group(G.order, max_elements=ctx.cap_elements)
    c_table = subgroup_conjugacy_classes(cm, cap=ctx.cap_subgroups)
    fw = fw_map(table, c_table)

    def run_integral():
        for i in range(c_table.size):
            fw(BurnsideElement.basis(c_table, i))
        return Case("fw integrality", "pass", f"{c_table.size} basis elements")
    try:
        cases.append(run_integral())
    except NotInImage as exc:
        cases.append(Case("fw integrality", "fail", str(exc)))

    def run_ring():
        for i in range(c_table.size):
            for j in range(c_table.size):
                x = BurnsideElement.basis(c_table, i)
                y = BurnsideElement.basis(c_table, j)
                if fw(x * y) != fw(x) * fw(y):
                    return Case("fw ring map", "fail", f"classes {i},{j}")
        return Case("fw ring map", "pass", f"{c_table.size}^2 basis pairs")
    cases.append(run_ring())

    for k in range(1, ctx.n + 1):
        def run_square(k=k):
            WC, _, _ = wreath_product(cm, k, max_elements=ctx.cap_elements)
            wc_table = subgroup_conjugacy_classes(WC, cap=ctx.cap_subgroups)
            for i in range(c_table.size):
                x = BurnsideElement.basis(c_table, i)
                lhs = fw_wreath(fw, embed(power_op(x, k), wc_table))
                rhs = power_op(fw(x), k)
                if lhs != rhs:
                    return Case(f"fw square n={k}", "fail", f"basis {i}")
            return Case(f"fw square n={k}", "pass", f"{c_table.size} basis elements")
        cases.append(_capped(f"fw square n={k}", run_square))

        def run_mult(k=k):
            WC, _, _ = wreath_product(cm, k, max_elements=ctx.cap_elements)
            wc_table = subgroup_conjugacy_classes(WC, cap=ctx.cap_subgroups)
            rng = random.Random(2)
            multiplicative = True
            witness = ""
            for trial in range(6):
                i = rng.randrange(wc_table.size)
                j = rng.randrange(wc_table.size)
                x = BurnsideElement.basis(wc_table, i)
                y = BurnsideElement.basis(wc_table, j)
                lhs = fw_wreath(fw, x * y)
                rhs = aa_multiply(fw_wreath(fw, x), fw_wreath(fw, y),
                                  max_elements=ctx.cap_elements)
                if lhs != rhs:
                    multiplicative = False
                    witness = f"classes {i},{j}"
                    break
            return Case(f"fw wn multiplicative n={k}", "info",
                        f"{multiplicative}" + (f" ({witness})" if witness else ""))
        cases.append(_capped(f"fw wn multiplicative n={k}", run_mult))
    return cases


def suite_gcd(ctx: Context) -> list:
    cases = []
    table = ctx.table
    for idx, H in enumerate(table.classes):
        name = table.class_names[idx]

        def run(H=H, name=name):
            ch_table = subgroup_conjugacy_classes(
                cyclic_group(H.order, max_elements=ctx.cap_elements), cap=ctx.cap_subgroups)
            h_table = subgroup_conjugacy_classes(as_group(H), cap=ctx.cap_subgroups)
            g = gcd_property(table, H)
            r = fw_commutes_with_norm(table, H, h_table, ch_table)
            if g != r:
                return Case(f"gcd<->norm-commutation H={name}", "fail", f"gcd={g} norm_side={r}")
            return Case(f"gcd<->norm-commutation H={name}", "pass", f"both {g}")
        cases.append(_capped(f"gcd<->norm-commutation H={name}", run))
    return cases


_SUITE_FUNCS = {
    "retract": suite_retract,
    "fixed-points": suite_fixed_points,
    "power-oracle": suite_power_oracle,
    "parks-ring": suite_parks_ring,
    "pullback": suite_pullback,
    "transfers": suite_transfers,
    "fw": suite_fw,
    "gcd": suite_gcd,
}


def run_suite(suite: str, group_spec: str, n: int,
              cap_elements: int = DEFAULT_ELEMENT_CAP,
              cap_subgroups: int = DEFAULT_SUBGROUP_CAP,
              oracle: bool = True) -> dict:
    if suite not in SUITES:
        raise WreathmarksError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    ctx = Context(group_spec, n, cap_elements, cap_subgroups, oracle)
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    cases = []
    for name in names:
        cases.extend(_SUITE_FUNCS[name](ctx))
    counts = {"pass": 0, "fail": 0, "skip": 0, "info": 0}
    for c in cases:
        counts[c.status] += 1
    return {
        "suite": suite,
        "group": group_spec,
        "n": n,
        "cases": [c.as_dict() for c in cases],
        "counts": counts,
        "ok": counts["fail"] == 0,
    }
