"""JSON and text forms for elements, partitions, and matrices.

JSON is the machine contract and must round-trip; text mirrors the classical
notation ("2·([e],1)+([C2],3)"). Class decorations travel as canonical class
names, groups as their spec strings, rationals as ints or "p/q" strings.
All lists are emitted in canonical order so output is byte-deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .burnside import BurnsideElement, MarksVector
from .errors import GroupSpecError
from .groups import ConjugacyClassTable, group_from_spec, subgroup_conjugacy_classes
from .partitions import DecoratedPartition
from .wreath_power import AAElement, ParksVector


def table_for_spec(spec: str, max_elements=None, subgroup_cap=None) -> ConjugacyClassTable:
    from .groups import DEFAULT_ELEMENT_CAP, DEFAULT_SUBGROUP_CAP
    group = group_from_spec(spec, max_elements=max_elements or DEFAULT_ELEMENT_CAP)
    return subgroup_conjugacy_classes(group, cap=subgroup_cap or DEFAULT_SUBGROUP_CAP)


def frac_to_json(v: Fraction):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def frac_from_json(v) -> Fraction:
    if isinstance(v, str):
        num, _, den = v.partition("/")
        return Fraction(int(num), int(den or 1))
    return Fraction(v)


# ---------------------------------------------------------------------------
# partitions


def partition_to_json(table: ConjugacyClassTable, la: DecoratedPartition) -> dict:
    return {"parts": [{"class": table.class_names[d], "size": s, "mult": m}
                      for (d, s), m in la.items()]}


def partition_from_json(table: ConjugacyClassTable, obj: dict) -> DecoratedPartition:
    parts = []
    for p in obj["parts"]:
        d = table.index_of_name(p["class"])
        parts.append(((d, int(p["size"])), int(p["mult"])))
    return DecoratedPartition(parts)


def partition_to_text(table: ConjugacyClassTable, la: DecoratedPartition) -> str:
    if not la.parts:
        return "()"
    bits = []
    for (d, s), m in la.items():
        head = f"{m}·" if m > 1 else ""
        bits.append(f"{head}([{table.class_names[d]}],{s})")
    return "+".join(bits)


# ---------------------------------------------------------------------------
# Burnside elements and marks


def burnside_to_json(x: BurnsideElement) -> dict:
    spec = x.table.group.spec
    if not spec:
        raise GroupSpecError("cannot serialize an element over a group with no spec string")
    return {"group": spec,
            "coords": [{"class": x.table.class_names[i], "coeff": c}
                       for i, c in enumerate(x.coords) if c]}


def burnside_from_json(obj: dict, table: ConjugacyClassTable | None = None) -> BurnsideElement:
    if table is None:
        table = table_for_spec(obj["group"])
    coords = [0] * table.size
    for entry in obj.get("coords", []):
        coords[table.index_of_name(entry["class"])] += int(entry["coeff"])
    return BurnsideElement(table, coords)


def burnside_to_text(x: BurnsideElement) -> str:
    terms = [f"{c}·[G/{x.table.class_names[i]}]" for i, c in enumerate(x.coords) if c]
    return " + ".join(terms) if terms else "0"


def marks_to_json(m: MarksVector) -> dict:
    return {"group": m.table.group.spec,
            "values": [{"class": nm, "value": frac_to_json(v)}
                       for nm, v in zip(m.table.class_names, m.values)]}


# ---------------------------------------------------------------------------
# elements of the wreath-power subring


def aa_to_json(x: AAElement) -> dict:
    spec = x.table.group.spec
    if not spec:
        raise GroupSpecError("cannot serialize an element over a group with no spec string")
    return {"group": spec, "n": x.n,
            "coords": [{"partition": partition_to_json(x.table, la), "coeff": x.coords[la]}
                       for la in x.support()]}


def aa_from_json(obj: dict, table: ConjugacyClassTable | None = None) -> AAElement:
    if table is None:
        table = table_for_spec(obj["group"])
    n = int(obj["n"])
    coords: dict = {}
    for entry in obj.get("coords", []):
        la = partition_from_json(table, entry["partition"])
        coords[la] = coords.get(la, 0) + int(entry["coeff"])
    return AAElement(table, n, coords)


def aa_to_text(x: AAElement) -> str:
    if not x.coords:
        return "0"
    return " + ".join(f"{x.coords[la]}·{{{partition_to_text(x.table, la)}}}"
                      for la in x.support())


def parks_to_json(f: ParksVector) -> dict:
    return {"group": f.table.group.spec, "n": f.n,
            "values": [{"partition": partition_to_json(f.table, la),
                        "value": frac_to_json(f.values[la])}
                       for la in sorted(f.values, key=DecoratedPartition.sort_key)]}


def parks_from_json(obj: dict, table: ConjugacyClassTable | None = None) -> ParksVector:
    if table is None:
        table = table_for_spec(obj["group"])
    values: dict = {}
    for entry in obj.get("values", []):
        la = partition_from_json(table, entry["partition"])
        values[la] = values.get(la, Fraction(0)) + frac_from_json(entry["value"])
    return ParksVector(table, int(obj["n"]), values)


def parks_matrix_to_json(M, kind: str, from_spec: str, to_spec: str) -> dict:
    entries = sorted(M.entries.items(),
                     key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))
    return {"kind": kind, "from": from_spec, "to": to_spec, "n": M.n,
            "entries": [{"target": partition_to_json(M.tgt_table, ka),
                         "source": partition_to_json(M.src_table, la),
                         "value": frac_to_json(v)}
                        for (ka, la), v in entries]}
