"""Isomorphism search for finite translation quivers.

A bijection must preserve arrows with multiplicity and commute with tau.
Candidates are pruned with a joint colour refinement, then a deterministic
backtracking search extends a partial map along arrows and tau links.
"""

from __future__ import annotations

from collections import Counter, deque

from .tquiver import TranslationQuiver, tau_orbits


def _orbit_lengths(Q: TranslationQuiver) -> dict:
    out = {}
    for orbit in tau_orbits(Q):
        for v in orbit:
            out[v] = len(orbit)
    return out


def _refine(Q1: TranslationQuiver, Q2: TranslationQuiver):
    """Stable colouring of both quivers with a shared palette."""
    colours = []
    for Q in (Q1, Q2):
        lengths = _orbit_lengths(Q)
        colours.append({v: (Q.in_degree(v), Q.out_degree(v), lengths[v], Q.arrow_count(v, v),
                            Q.arrow_count(v, Q.tau[v]))
                        for v in Q.vertices})
    palette = {}
    for col in colours:
        for v in col:
            col[v] = palette.setdefault(col[v], len(palette))
    n_classes = len(palette)
    while True:
        palette = {}
        new = []
        for Q, col in zip((Q1, Q2), colours):
            nxt = {}
            for v in Q.vertices:
                sig = (col[v],
                       tuple(sorted((col[w], c) for w, c in Q.out_arrows(v))),
                       tuple(sorted((col[u], c) for u, c in Q.in_arrows(v))),
                       col[Q.tau[v]], col[Q.tau_inv[v]])
                nxt[v] = palette.setdefault(sig, len(palette))
            new.append(nxt)
        colours = new
        if len(palette) == n_classes:
            return colours
        n_classes = len(palette)


def _neighbours(Q: TranslationQuiver, v):
    for w in Q.successors(v):
        yield "succ", w
    for u in Q.predecessors(v):
        yield "pred", u
    yield "tau", Q.tau[v]
    yield "tauinv", Q.tau_inv[v]


def _related(Q: TranslationQuiver, v, relation):
    if relation == "succ":
        return Q.successors(v)
    if relation == "pred":
        return Q.predecessors(v)
    if relation == "tau":
        return [Q.tau[v]]
    return [Q.tau_inv[v]]


def _search_order(Q: TranslationQuiver, rarity):
    """BFS order covering every vertex; each entry is (vertex, anchor, relation)."""
    order = []
    seen = set()
    for root in sorted(Q.vertices, key=lambda v: (rarity[v], v)):
        if root in seen:
            continue
        seen.add(root)
        order.append((root, None, None))
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for relation, w in _neighbours(Q, u):
                if w not in seen:
                    seen.add(w)
                    order.append((w, u, relation))
                    queue.append(w)
    return order


def _consistent(Q1, Q2, v, w, fwd, bwd) -> bool:
    if Q1.arrow_count(v, v) != Q2.arrow_count(w, w):
        return False
    for x in Q1.successors(v):
        if x in fwd and Q1.arrow_count(v, x) != Q2.arrow_count(w, fwd[x]):
            return False
    for x in Q1.predecessors(v):
        if x in fwd and Q1.arrow_count(x, v) != Q2.arrow_count(fwd[x], w):
            return False
    for y in Q2.successors(w):
        if y in bwd and Q2.arrow_count(w, y) != Q1.arrow_count(v, bwd[y]):
            return False
    for y in Q2.predecessors(w):
        if y in bwd and Q2.arrow_count(y, w) != Q1.arrow_count(bwd[y], v):
            return False
    for a, b in ((Q1.tau[v], Q2.tau[w]), (Q1.tau_inv[v], Q2.tau_inv[w])):
        if a == v:
            if b != w:
                return False
            continue
        if a in fwd and fwd[a] != b:
            return False
        if b in bwd and bwd[b] != a:
            return False
    return True


def iso_translation_quivers(Q1: TranslationQuiver, Q2: TranslationQuiver) -> dict | None:
    """Return a vertex bijection Q1 -> Q2 that is a translation quiver iso, or None."""
    if len(Q1) != len(Q2) or sum(Q1.arrows.values()) != sum(Q2.arrows.values()):
        return None
    if not Q1.vertices:
        return {}
    c1, c2 = _refine(Q1, Q2)
    if Counter(c1.values()) != Counter(c2.values()):
        return None
    by_colour = {}
    for w in Q2.vertices:
        by_colour.setdefault(c2[w], []).append(w)
    rarity = {v: len(by_colour[c1[v]]) for v in Q1.vertices}
    order = _search_order(Q1, rarity)

    fwd, bwd = {}, {}
    candidates = [None] * len(order)
    pos = 0
    while 0 <= pos < len(order):
        v, anchor, relation = order[pos]
        if candidates[pos] is None:
            if anchor is None:
                pool = by_colour[c1[v]]
            else:
                pool = sorted(set(_related(Q2, fwd[anchor], relation)))
            candidates[pos] = iter([w for w in pool if c2[w] == c1[v]])
        if v in fwd:
            del bwd[fwd.pop(v)]
        for w in candidates[pos]:
            if w not in bwd and _consistent(Q1, Q2, v, w, fwd, bwd):
                fwd[v], bwd[w] = w, v
                pos += 1
                break
        else:
            candidates[pos] = None
            pos -= 1
    if pos < 0:
        return None
    return fwd


def is_isomorphism(Q1: TranslationQuiver, Q2: TranslationQuiver, f: dict) -> bool:
    """Independent check that ``f`` is a translation quiver isomorphism."""
    if set(f) != set(Q1.vertices) or set(f.values()) != set(Q2.vertices):
        return False
    mapped = Counter()
    for (u, v), c in Q1.arrows.items():
        mapped[(f[u], f[v])] += c
    if mapped != Q2.arrows:
        return False
    return all(f[Q1.tau[v]] == Q2.tau[f[v]] for v in Q1.vertices)
