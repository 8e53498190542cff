"""Exact vertex covers of small hypergraphs.

Hyperedges are sets of vertex indices.  Everything here is exhaustive
branch-and-bound; sizes stay at desk scale (a few dozen vertices).
"""

from __future__ import annotations

from typing import Iterable, Sequence

Hyperedge = frozenset[int]


def _normalize(edges: Iterable[Iterable[int]]) -> list[Hyperedge]:
    out = []
    for e in edges:
        e = frozenset(e)
        if not e:
            raise ValueError("empty hyperedge cannot be covered")
        out.append(e)
    # drop hyperedges that contain another (covering the smaller one covers it)
    out = sorted(set(out), key=lambda e: (len(e), sorted(e)))
    kept: list[Hyperedge] = []
    for e in out:
        if not any(k <= e for k in kept):
            kept.append(e)
    return kept


def _packing_bound(edges: list[Hyperedge]) -> int:
    """Greedy count of pairwise disjoint hyperedges: a lower bound on any cover."""
    used: set[int] = set()
    n = 0
    for e in edges:
        if used.isdisjoint(e):
            used |= e
            n += 1
    return n


def min_cover_size(edges: Iterable[Iterable[int]]) -> int:
    edges = _normalize(edges)
    best = [len({v for e in edges for v in e}) + 1]

    def search(remaining: list[Hyperedge], depth: int) -> None:
        if not remaining:
            best[0] = min(best[0], depth)
            return
        if depth + _packing_bound(remaining) >= best[0]:
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            search([e for e in remaining if v not in e], depth + 1)

    search(edges, 0)
    return best[0] if edges else 0


def _coverable(edges: list[Hyperedge], allowed_min: int, budget: int) -> bool:
    """Can ``edges`` be covered by at most ``budget`` vertices, all >= allowed_min?"""
    restricted = []
    for e in edges:
        r = frozenset(v for v in e if v >= allowed_min)
        if not r:
            return False
        restricted.append(r)
    if not restricted:
        return True
    if budget <= 0:
        return False
    return min_cover_size(restricted) <= budget


def min_vertex_cover(edges: Iterable[Iterable[int]]) -> frozenset[int]:
    """The lexicographically least minimum vertex cover."""
    edges = _normalize(edges)
    k = min_cover_size(edges)
    chosen: list[int] = []
    remaining = edges
    vertices = sorted({v for e in edges for v in e})
    while remaining:
        for v in vertices:
            if chosen and v <= chosen[-1]:
                continue
            rest = [e for e in remaining if v not in e]
            if _coverable(rest, v + 1, k - len(chosen) - 1):
                chosen.append(v)
                remaining = rest
                break
        else:  # pragma: no cover - k is attainable by construction
            raise AssertionError("cover search lost feasibility")
    return frozenset(chosen)


def all_minimum_covers(edges: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    edges = _normalize(edges)
    k = min_cover_size(edges)
    found: set[frozenset[int]] = set()

    def search(remaining: list[Hyperedge], chosen: frozenset[int]) -> None:
        if not remaining:
            if len(chosen) == k:
                found.add(chosen)
            return
        if len(chosen) + _packing_bound(remaining) > k:
            return
        pivot = min(remaining, key=len)
        for v in pivot:
            search([e for e in remaining if v not in e], chosen | {v})

    search(edges, frozenset())
    return sorted(found, key=sorted)


def minimal_covers(edges: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    """All inclusion-minimal covers (minimal transversals), by Berge's method."""
    edges = _normalize(edges)
    covers: set[frozenset[int]] = {frozenset()}
    for e in edges:
        nxt: set[frozenset[int]] = set()
        for t in covers:
            if t & e:
                nxt.add(t)
            else:
                nxt.update(t | {v} for v in e)
        covers = {t for t in nxt if not any(s < t for s in nxt)}
    return sorted(covers, key=lambda t: (len(t), sorted(t)))


def is_cover(edges: Iterable[Iterable[int]], cover: Iterable[int]) -> bool:
    cover = set(cover)
    return all(cover & set(e) for e in edges)


def is_minimal_cover(edges: Sequence[Iterable[int]], cover: Iterable[int]) -> bool:
    cover = set(cover)
    if not is_cover(edges, cover):
        return False
    return all(not is_cover(edges, cover - {v}) for v in cover)
