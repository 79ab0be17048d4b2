"""Exhaustive generation of small connected bounded-degree graphs, one per isomorphism class.

Graphs are grown one vertex at a time: the new vertex attaches to a nonempty
set of existing vertices that still have room under the degree bound, so every
graph on k vertices appears as the induced prefix of its own vertex order.
Each level is deduplicated up to isomorphism, which keeps the search tree at
realistic sizes for orders up to a dozen or so.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CapacityError
from .graphs import Graph, are_isomorphic

# Census sizes beyond this would need hours, not minutes; refuse rather than stall.
MAX_CENSUS_ORDER = 12


def _mask_graph(masks: tuple[int, ...]) -> Graph:
    k = len(masks)
    edges = [
        (i + 1, j + 1)
        for i in range(k)
        for j in range(i + 1, k)
        if (masks[i] >> j) & 1
    ]
    return Graph(k, edges)


def _invariant_key(masks: tuple[int, ...]) -> tuple:
    """Cheap isomorphism invariant: per-vertex (degree, neighbor degrees, triangles), sorted."""
    k = len(masks)
    degs = [m.bit_count() for m in masks]
    profile = []
    for v in range(k):
        nbrs = [u for u in range(k) if (masks[v] >> u) & 1]
        tri = sum((masks[v] & masks[u]).bit_count() for u in nbrs) // 2
        profile.append((degs[v], tuple(sorted(degs[u] for u in nbrs)), tri))
    return (k, sum(degs) // 2, tuple(sorted(profile)))


def _has_saturated_proper_component(masks: tuple[int, ...], max_degree: int) -> bool:
    """True when some connected component is full (no vertex below the bound) but not the whole graph."""
    k = len(masks)
    remaining = (1 << k) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            fresh = masks[v] & remaining & ~seen
            seen |= fresh
            while fresh:
                low = fresh & -fresh
                frontier.append(low.bit_length() - 1)
                fresh ^= low
        if seen != (1 << k) - 1:
            if all(
                masks[v].bit_count() >= max_degree
                for v in range(k)
                if (seen >> v) & 1
            ):
                return True
        remaining &= ~seen
    return False


def _connected(masks: tuple[int, ...]) -> bool:
    k = len(masks)
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        fresh = masks[v] & ~seen
        seen |= fresh
        while fresh:
            low = fresh & -fresh
            frontier.append(low.bit_length() - 1)
            fresh ^= low
    return seen == (1 << k) - 1


def _grow(n_target: int, max_degree: int, regular_final: bool) -> list[Graph]:
    """All connected graphs on ``n_target`` vertices with degrees <= ``max_degree``.

    With ``regular_final`` the result is restricted to ``max_degree``-regular
    graphs, and intermediate levels are pruned by the total remaining degree
    deficiency: adding one vertex can reduce it by at most ``max_degree``, and
    its parity moves in lockstep with the vertex count.
    """
    level: list[tuple[tuple[int, ...], Graph]] = [((0,), Graph(1))]
    for k in range(1, n_target):
        buckets: dict[tuple, list[tuple[tuple[int, ...], Graph]]] = {}
        remaining = n_target - (k + 1)
        for masks, _ in level:
            deficient = [v for v in range(k) if masks[v].bit_count() < max_degree]
            for size in range(1, max_degree + 1):
                for chosen in combinations(deficient, size):
                    if regular_final:
                        deficiency = sum(
                            max_degree - m.bit_count() for m in masks
                        ) + max_degree - 2 * size
                        if deficiency > max_degree * remaining:
                            continue
                        if (deficiency + remaining * max_degree) % 2:
                            continue
                        if remaining == 0 and deficiency != 0:
                            continue
                        if remaining > 0 and deficiency == 0:
                            continue
                    new_bit = 1 << k
                    grown = list(masks) + [0]
                    for v in chosen:
                        grown[v] |= new_bit
                        grown[k] |= 1 << v
                    grown_t = tuple(grown)
                    if remaining > 0 and _has_saturated_proper_component(grown_t, max_degree):
                        continue
                    if remaining == 0 and not _connected(grown_t):
                        continue
                    key = _invariant_key(grown_t)
                    bucket = buckets.setdefault(key, [])
                    candidate = _mask_graph(grown_t)
                    if any(
                        are_isomorphic(candidate, seen_graph) is not None
                        for _, seen_graph in bucket
                    ):
                        continue
                    bucket.append((grown_t, candidate))
        level = [pair for bucket in buckets.values() for pair in bucket]
    return [g for masks, g in level if _connected(masks)]


def connected_graphs_bounded_degree(n: int, max_degree: int) -> list[Graph]:
    """All connected graphs on n vertices with maximum degree <= ``max_degree``, up to isomorphism."""
    if n < 1:
        raise CapacityError(f"need n >= 1, got {n}")
    return _grow(n, max_degree, regular_final=False)


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices, up to isomorphism.

    Raises CapacityError above order ``MAX_CENSUS_ORDER``; the level-wise
    deduplication that makes this exact does not scale past that.
    """
    if n > MAX_CENSUS_ORDER:
        raise CapacityError(
            f"cubic census capped at order {MAX_CENSUS_ORDER}, got {n}"
        )
    if n < 4 or n % 2:
        return []
    return _grow(n, 3, regular_final=True)
