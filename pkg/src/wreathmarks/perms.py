"""Permutations on a fixed finite domain [0, n).

A permutation is a plain tuple of images: p[i] is where point i goes.
Composition is function composition, (p * q)(i) = p(q(i)), i.e. q acts first.
"""

from __future__ import annotations

import re

from .errors import GroupSpecError

Perm = tuple  # tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def mul(p: Perm, q: Perm) -> Perm:
    """Compose: apply q, then p."""
    return tuple(p[i] for i in q)


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conj(p: Perm, g: Perm) -> Perm:
    """p conjugated by g: g^-1 p g."""
    return mul(mul(inv(g), p), g)


def is_perm(p: Perm, degree: int) -> bool:
    return len(p) == degree and sorted(p) == list(range(degree))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Perm:
    """Parse cycle notation like "(1 2 3)(4 5)" with 1-based points.

    If degree is None, the domain is the largest point mentioned.
    """
    body = text.strip()
    if body in ("", "()", "e"):
        if degree is None:
            raise GroupSpecError("identity cycle needs an explicit domain")
        return identity(degree)
    consumed = _CYCLE_RE.sub("", body).strip()
    if consumed:
        raise GroupSpecError(f"malformed cycle notation: {text!r}")
    cycles = []
    for group in _CYCLE_RE.findall(body):
        pts = [s for s in re.split(r"[,\s]+", group.strip()) if s]
        try:
            cyc = [int(s) for s in pts]
        except ValueError:
            raise GroupSpecError(f"non-integer point in cycle: {group!r}") from None
        if any(x < 1 for x in cyc):
            raise GroupSpecError(f"points are 1-based, got {cyc}")
        if len(set(cyc)) != len(cyc):
            raise GroupSpecError(f"repeated point within a cycle: {group!r}")
        cycles.append(cyc)
    maxpt = max((x for cyc in cycles for x in cyc), default=0)
    if degree is None:
        degree = maxpt
    elif maxpt > degree:
        raise GroupSpecError(f"point {maxpt} outside declared domain of size {degree}")
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if images[a - 1] != a - 1:
                raise GroupSpecError(f"point {a} appears in two cycles: {text!r}")
            images[a - 1] = b - 1
    return tuple(images)


def cycle_string(p: Perm) -> str:
    """Render as 1-based disjoint cycles; identity renders as "()"."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) if out else "()"
