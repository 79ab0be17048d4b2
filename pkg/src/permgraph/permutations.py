"""Permutations, their inversion graphs, and exact permutation-graph recognition.

A permutation pi of 1..n realizes the graph on vertices 1..n in which i and j
are adjacent exactly when the larger of the two appears first in pi (an
inversion).  Reversing pi complements the graph, and every induced subgraph
of a realizable graph is realizable, which is what makes the small-order
searches here exhaustive rather than heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError, MalformedInputError, ParseError
from .graphs import (
    Graph,
    canonical_graph6,
    contains_induced,
    decode_graph6,
    encode_graph6,
    has_large_hole,
    induced_subgraph,
    is_connected,
    is_regular,
)

# Exhaustive realizer search is exponential; keep the default reach small.
DEFAULT_MAX_REALIZER_ORDER = 12

# The forbidden-subgraph catalog is complete once this order has been searched.
CATALOG_ORDER_CEILING = 8


class Permutation:
    """A permutation of 1..n, 1-based: ``p(i)`` is the value at position i."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]) -> None:
        vals = tuple(values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise MalformedInputError(f"not a permutation of 1..{len(vals)}: {vals!r}")
        self.values = vals

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise MalformedInputError(f"position {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"Permutation({list(self.values)})"


def parse_permutation(text: str) -> Permutation:
    """Accepts one-line text: values separated by spaces and/or commas,
    with optional surrounding brackets, e.g. "2 1" or "[2,1]"."""
    stripped = text.strip()
    if stripped.startswith("[") and stripped.endswith("]"):
        stripped = stripped[1:-1]
    toks = stripped.replace(",", " ").split()
    if not toks:
        raise ParseError("empty permutation input", 0)
    vals = []
    for tok in toks:
        if not tok.isdigit():
            raise ParseError(f"bad permutation entry {tok!r}", text.find(tok))
        vals.append(int(tok))
    return Permutation(vals)


def format_permutation(p: Permutation) -> str:
    return "[" + ",".join(str(v) for v in p.values) + "]"


def inversions(p: Permutation) -> frozenset[tuple[int, int]]:
    """All pairs (p(i), p(j)) with i < j and p(i) > p(j)."""
    vals = p.values
    return frozenset(
        (vals[i], vals[j])
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
        if vals[i] > vals[j]
    )


def graph_from_permutation(p: Permutation) -> Graph:
    """The inversion graph of p on vertices 1..n."""
    return Graph(len(p), inversions(p))


def reverse_permutation(p: Permutation) -> Permutation:
    return Permutation(reversed(p.values))


# ---------------------------------------------------------------------------
# Realizer search
# ---------------------------------------------------------------------------


@dataclass
class RealizerCertificate:
    """A realizer for a graph: positions of ``pi`` correspond to graph vertices.

    ``vertex_to_position[v]`` is the pi-position standing for vertex v.  The
    inversion graph lives on values, so renaming each vertex to the value at
    its position, ``pi(vertex_to_position[v])``, gives exactly the inversion
    graph of ``pi``.
    """

    pi: Permutation
    vertex_to_position: dict[int, int]


def certificate_realizes(g: Graph, cert: RealizerCertificate) -> bool:
    """Exact check: does the certificate's renaming turn g into the inversion graph of pi?"""
    if len(cert.pi) != g.n:
        return False
    if sorted(cert.vertex_to_position) != list(g.vertices()):
        return False
    if sorted(cert.vertex_to_position.values()) != list(g.vertices()):
        return False
    to_value = {v: cert.pi(pos) for v, pos in cert.vertex_to_position.items()}
    return g.relabel(to_value) == graph_from_permutation(cert.pi)


def find_realizer(
    g: Graph, max_order: int = DEFAULT_MAX_REALIZER_ORDER
) -> RealizerCertificate | None:
    """A realizer certificate for g, or None when no permutation realizes it.

    Fills pi positions left to right with graph vertices, keeping the placed
    vertices in their relative value order.  A vertex is placeable only if its
    placed neighbors form a suffix of that order (they must all get larger
    values) and its placed non-neighbors the complementary prefix; the
    insertion slot is then forced, so the search is exhaustive over placement
    orders.  Raises CapacityError above ``max_order``.
    """
    if g.n > max_order:
        raise CapacityError(
            f"realizer search capped at order {max_order}, got {g.n}; "
            "pass a larger max_order to override"
        )
    n = g.n
    value_order: list[int] = []  # placed vertices, smallest final value first
    position_of: dict[int, int] = {}

    def place(pos: int) -> bool:
        if pos > n:
            return True
        for w in g.vertices():
            if w in position_of:
                continue
            nb = g.neighbor_mask(w)
            idx = len(value_order)
            while idx > 0 and (nb >> value_order[idx - 1]) & 1:
                idx -= 1
            if any((nb >> u) & 1 for u in value_order[:idx]):
                continue
            value_order.insert(idx, w)
            position_of[w] = pos
            if place(pos + 1):
                return True
            del position_of[w]
            value_order.pop(idx)
        return False

    if not place(1):
        return None
    value_of = {v: k + 1 for k, v in enumerate(value_order)}
    vals = [0] * n
    for v, pos in position_of.items():
        vals[pos - 1] = value_of[v]
    cert = RealizerCertificate(Permutation(vals), dict(position_of))
    assert certificate_realizes(g, cert)
    return cert


def is_permutation_graph(g: Graph, max_order: int = DEFAULT_MAX_REALIZER_ORDER) -> bool:
    return find_realizer(g, max_order=max_order) is not None


# ---------------------------------------------------------------------------
# Twin normal form
# ---------------------------------------------------------------------------


def _twin_pairs(vals: list[int]) -> list[tuple[int, int, bool]]:
    """Twin value pairs (u, v, adjacent) of the inversion graph, u < v ascending."""
    n = len(vals)
    pos = {v: i + 1 for i, v in enumerate(vals)}
    masks = [0] * (n + 1)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if pos[b] < pos[a]:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    pairs = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            both = (1 << u) | (1 << v)
            if (masks[u] & ~both) == (masks[v] & ~both):
                pairs.append((u, v, bool((masks[u] >> v) & 1)))
    return pairs


def _run_intact(vals: list[int], u: int, v: int, adjacent: bool) -> bool:
    """Do the values u..v sit in consecutive positions, ascending (non-adjacent twins) or descending (adjacent)?"""
    pos = {w: i for i, w in enumerate(vals)}
    if adjacent:
        start = pos[v]
        return all(
            start + d < len(vals) and vals[start + d] == v - d for d in range(v - u + 1)
        )
    start = pos[u]
    return all(
        start + d < len(vals) and vals[start + d] == u + d for d in range(v - u + 1)
    )


def normalize_twins(p: Permutation) -> Permutation:
    """Rewrite p so every twin pair of its inversion graph is a consecutive run.

    One rewrite: for a violating twin pair (u, v), delete v, shift the values
    strictly between u and v up by one, and re-insert the freed value u+1 next
    to u (after it when the twins are non-adjacent, before it when adjacent).
    Each rewrite keeps the inversion graph's isomorphism class; iterate to a
    fixed point.
    """
    vals = list(p.values)
    n = len(vals)
    for _ in range(4 * n * n + 4):
        violation = None
        for u, v, adjacent in _twin_pairs(vals):
            if not _run_intact(vals, u, v, adjacent):
                violation = (u, v, adjacent)
                break
        if violation is None:
            return Permutation(vals)
        u, v, adjacent = violation
        out = []
        for w in vals:
            if w == v:
                continue
            out.append(w + 1 if u < w < v else w)
        iu = out.index(u)
        out.insert(iu if adjacent else iu + 1, u + 1)
        vals = out
    raise AssertionError("twin normalization did not reach a fixed point")


# ---------------------------------------------------------------------------
# Forbidden-subgraph catalog
# ---------------------------------------------------------------------------


@dataclass
class ForbiddenCatalog:
    """Minimal non-realizable graphs of maximum degree <= 3, other than long cycles."""

    graphs: tuple[Graph, ...]
    max_order_searched: int


def derive_forbidden_catalog(max_order: int = CATALOG_ORDER_CEILING) -> ForbiddenCatalog:
    """Enumerate the catalog from scratch, searching all orders up to ``max_order``.

    A member is connected, has maximum degree <= 3, is not an inversion graph,
    is not itself a cycle (chordless long cycles are reported separately by
    hole search), and every one-vertex deletion is an inversion graph.
    Completeness above order 8 would need a new argument, hence the cap.
    """
    if max_order > CATALOG_ORDER_CEILING:
        raise CapacityError(
            f"catalog search is only known exhaustive up to order {CATALOG_ORDER_CEILING}"
        )
    from .generation import connected_graphs_bounded_degree

    members = []
    for n in range(5, max_order + 1):
        for g in connected_graphs_bounded_degree(n, 3):
            if is_regular(g, 2):
                continue  # the cycle C_n, reported via hole search instead
            if find_realizer(g, max_order=n) is not None:
                continue
            deletions_fine = all(
                find_realizer(
                    induced_subgraph(g, [u for u in g.vertices() if u != v]),
                    max_order=n,
                )
                is not None
                for v in g.vertices()
            )
            if deletions_fine:
                members.append(g)
    members.sort(key=lambda g: (g.n, len(g.edges), canonical_graph6(g)))
    return ForbiddenCatalog(tuple(members), max_order)


def format_catalog(catalog: ForbiddenCatalog) -> str:
    lines = [f"# max_order_searched={catalog.max_order_searched}"]
    lines += [canonical_graph6(g) for g in catalog.graphs]
    return "\n".join(lines) + "\n"


def parse_catalog(text: str) -> ForbiddenCatalog:
    max_order = None
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            if key.strip() == "max_order_searched":
                if not val.strip().isdigit():
                    raise ParseError(f"bad catalog header line {line!r}")
                max_order = int(val.strip())
            continue
        graphs.append(decode_graph6(line))
    if max_order is None:
        raise ParseError("catalog text lacks a max_order_searched header")
    return ForbiddenCatalog(tuple(graphs), max_order)


_CATALOG_CACHE: ForbiddenCatalog | None = None


def load_forbidden_catalog() -> ForbiddenCatalog:
    """The catalog shipped with the package (derived once, stored as graph6 lines)."""
    global _CATALOG_CACHE
    if _CATALOG_CACHE is None:
        text = (
            resources.files("permgraph").joinpath("data/forbidden_subgraphs.g6").read_text()
        )
        _CATALOG_CACHE = parse_catalog(text)
    return _CATALOG_CACHE


def is_cubic_permutation_graph_fast(g: Graph, catalog: ForbiddenCatalog | None = None) -> bool:
    """Recognition for graphs of maximum degree <= 3, without any realizer search.

    Such a graph is an inversion graph exactly when it has no chordless cycle
    of length >= 5 and no induced catalog member.  Raises DomainError when the
    degree bound fails, since then the catalog argument does not apply.
    """
    if g.max_degree() > 3:
        raise DomainError(
            f"fast recognition needs maximum degree <= 3, got {g.max_degree()}"
        )
    if has_large_hole(g) is not None:
        return False
    if catalog is None:
        catalog = load_forbidden_catalog()
    return all(contains_induced(g, member) is None for member in catalog.graphs)
