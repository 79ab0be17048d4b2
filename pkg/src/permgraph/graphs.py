"""Small-graph core: an immutable graph type plus the exact algorithms used everywhere else.

Vertices are the contiguous integers 1..n.  All searches here are exact
backtracking with cheap invariant pruning; they are written for desk scale
(a few dozen vertices), not for asymptotic cleverness.  Adjacency is kept
as per-vertex bitmasks so the inner loops are integer operations.

Quick start::

    >>> g = build_graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    >>> is_regular(g, 2)
    True
    >>> encode_graph6(complement(g))
    'Cc'
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, MalformedInputError, ParseError

# Default order cap for the isomorphism search; callers may raise it explicitly.
DEFAULT_MAX_ISO_ORDER = 32

# Default order cap for Hamiltonian-path brute force.
DEFAULT_MAX_HAMILTONIAN_ORDER = 16


def _iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable undirected simple graph on vertices 1..n."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(n, int) or n < 1:
            raise MalformedInputError(f"graph order must be a positive integer, got {n!r}")
        adj = [0] * (n + 1)
        normalized = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedInputError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
            if u == v:
                raise MalformedInputError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            normalized.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(normalized)
        self._adj = tuple(adj)

    # -- basic queries ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbor_mask(self, v: int) -> int:
        """Adjacency of ``v`` as a bitmask (bit k set iff k is a neighbor)."""
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex (position 0 unused, kept for 1-based indexing)."""
        return tuple(m.bit_count() for m in self._adj)

    def max_degree(self) -> int:
        return max(m.bit_count() for m in self._adj[1:])

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edge_count(self) -> int:
        return len(self.edges)

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Return the graph with vertex v renamed mapping[v]; mapping must be a bijection onto 1..n."""
        if sorted(mapping) != list(self.vertices()) or sorted(mapping.values()) != list(self.vertices()):
            raise MalformedInputError("relabeling must be a bijection from 1..n onto 1..n")
        return Graph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Validate and build a graph on vertices 1..n from an edge list."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    missing = [
        (u, v)
        for u in g.vertices()
        for v in range(u + 1, g.n + 1)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, missing)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, relabeled 1..k in sorted vertex order."""
    vs = sorted(set(vertices))
    if not vs:
        raise MalformedInputError("induced subgraph needs at least one vertex")
    if vs[0] < 1 or vs[-1] > g.n:
        raise MalformedInputError(f"vertex selection outside 1..{g.n}: {vs}")
    index = {v: i + 1 for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(vs), edges)


def is_connected(g: Graph) -> bool:
    seen = 1 << 1
    frontier = [1]
    while frontier:
        v = frontier.pop()
        fresh = g.neighbor_mask(v) & ~seen
        seen |= fresh
        frontier.extend(_iter_bits(fresh))
    return seen.bit_count() == g.n


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum vertex."""
    remaining = ((1 << (g.n + 1)) - 1) & ~1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            fresh = g.neighbor_mask(v) & remaining & ~seen
            seen |= fresh
            frontier.extend(_iter_bits(fresh))
        comps.append(tuple(_iter_bits(seen)))
        remaining &= ~seen
    return comps


def is_regular(g: Graph, r: int) -> bool:
    return all(m.bit_count() == r for m in g._adj[1:])


# ---------------------------------------------------------------------------
# Constructors for the named graphs used throughout
# ---------------------------------------------------------------------------


def empty_graph(k: int) -> Graph:
    return Graph(k)


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(1, k)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise MalformedInputError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, i + 1) for i in range(1, k)] + [(k, 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def ladder_graph(rungs: int) -> Graph:
    """The k-rung ladder: rails u_1..u_k = 1..k and v_1..v_k = k+1..2k, rungs (u_i, v_i)."""
    if rungs < 1:
        raise MalformedInputError(f"ladder needs at least 1 rung, got {rungs}")
    k = rungs
    edges = [(i, k + i) for i in range(1, k + 1)]
    edges += [(i, i + 1) for i in range(1, k)]
    edges += [(k + i, k + i + 1) for i in range(1, k)]
    return Graph(2 * k, edges)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _triangle_counts(g: Graph) -> list[int]:
    counts = [0] * (g.n + 1)
    for v in g.vertices():
        t = 0
        for u in _iter_bits(g.neighbor_mask(v)):
            t += (g.neighbor_mask(v) & g.neighbor_mask(u)).bit_count()
        counts[v] = t // 2
    return counts


def _joint_refine(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Stable vertex colors for g and h, interned jointly so colors are comparable.

    Initial color is (degree, local triangle count); each round appends the
    sorted multiset of neighbor colors.  Fresh color ids are assigned by
    sorted signature order, so the result is label-independent.
    """
    tg, th = _triangle_counts(g), _triangle_counts(h)
    sig_g = {v: (g.degree(v), tg[v]) for v in g.vertices()}
    sig_h = {v: (h.degree(v), th[v]) for v in h.vertices()}

    def intern(sg: dict, sh: dict) -> tuple[dict[int, int], dict[int, int]]:
        table = {s: i for i, s in enumerate(sorted(set(sg.values()) | set(sh.values())))}
        return {v: table[s] for v, s in sg.items()}, {v: table[s] for v, s in sh.items()}

    col_g, col_h = intern(sig_g, sig_h)
    for _ in range(max(g.n, h.n)):
        sig_g = {
            v: (col_g[v], tuple(sorted(col_g[u] for u in _iter_bits(g.neighbor_mask(v)))))
            for v in g.vertices()
        }
        sig_h = {
            v: (col_h[v], tuple(sorted(col_h[u] for u in _iter_bits(h.neighbor_mask(v)))))
            for v in h.vertices()
        }
        new_g, new_h = intern(sig_g, sig_h)
        if len(set(new_g.values())) == len(set(col_g.values())) and new_g == col_g and new_h == col_h:
            break
        col_g, col_h = new_g, new_h
    return [0] + [col_g[v] for v in g.vertices()], [0] + [col_h[v] for v in h.vertices()]


def are_isomorphic(
    g: Graph, h: Graph, max_order: int = DEFAULT_MAX_ISO_ORDER
) -> dict[int, int] | None:
    """A vertex bijection g -> h preserving adjacency both ways, or None.

    Backtracking over color-compatible candidates after joint refinement.
    Raises CapacityError when either graph exceeds ``max_order``.
    """
    if max(g.n, h.n) > max_order:
        raise CapacityError(
            f"isomorphism search capped at order {max_order}, got {max(g.n, h.n)}; "
            "pass a larger max_order to override"
        )
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    col_g, col_h = _joint_refine(g, h)
    if sorted(col_g[1:]) != sorted(col_h[1:]):
        return None

    by_color: dict[int, list[int]] = {}
    for w in h.vertices():
        by_color.setdefault(col_h[w], []).append(w)
    # Place rare colors first; ties by label keep the result deterministic.
    order = sorted(g.vertices(), key=lambda v: (len(by_color[col_g[v]]), col_g[v], v))

    image = [0] * (g.n + 1)
    placed: list[int] = []
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for w in by_color[col_g[v]]:
            if (used >> w) & 1:
                continue
            if any(g.has_edge(v, u) != h.has_edge(w, image[u]) for u in placed):
                continue
            image[v] = w
            used |= 1 << w
            placed.append(v)
            if extend(i + 1):
                return True
            placed.pop()
            used &= ~(1 << w)
            image[v] = 0
        return False

    if not extend(0):
        return None
    return {v: image[v] for v in g.vertices()}


# ---------------------------------------------------------------------------
# Induced-subgraph search
# ---------------------------------------------------------------------------


def contains_induced(g: Graph, h: Graph) -> frozenset[int] | None:
    """A vertex set of g inducing a copy of h, or None.

    The mapping is exact: edges and non-edges of h must both be preserved.
    """
    if h.n > g.n:
        return None
    # Place h's vertices so each new one touches as many placed ones as possible.
    order: list[int] = []
    placed_set: set[int] = set()
    for _ in h.vertices():
        best = max(
            (v for v in h.vertices() if v not in placed_set),
            key=lambda v: (
                sum(1 for u in placed_set if h.has_edge(u, v)),
                h.degree(v),
                -v,
            ),
        )
        order.append(best)
        placed_set.add(best)

    image = [0] * (h.n + 1)
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        for x in g.vertices():
            if (used >> x) & 1 or g.degree(x) < h.degree(v):
                continue
            if any(g.has_edge(x, image[u]) != h.has_edge(v, u) for u in order[:i]):
                continue
            image[v] = x
            used |= 1 << x
            if extend(i + 1):
                return True
            used &= ~(1 << x)
            image[v] = 0
        return False

    if not extend(0):
        return None
    return frozenset(image[1:])


# ---------------------------------------------------------------------------
# Holes (induced cycles of length >= 5)
# ---------------------------------------------------------------------------


def has_large_hole(g: Graph) -> frozenset[int] | None:
    """A vertex set inducing a chordless cycle of length >= 5, or None.

    DFS over induced paths rooted at the smallest hole vertex: the path may
    only close back to its root, and only once it already has 4 vertices.
    """
    full = ((1 << (g.n + 1)) - 1) & ~1
    for s in g.vertices():
        allowed = full & ~((1 << (s + 1)) - 1)  # vertices > s keep s minimal
        s_mask = 1 << s

        def extend(path: list[int], path_mask: int, internal_mask: int) -> list[int] | None:
            last = path[-1]
            for w in _iter_bits(g.neighbor_mask(last) & allowed & ~path_mask):
                wmask = g.neighbor_mask(w)
                if wmask & internal_mask:
                    continue  # chord back into the path
                if wmask & s_mask:
                    if len(path) >= 4:
                        return path + [w]
                    continue  # closing now would make a short cycle; any extension has a chord
                found = extend(path + [w], path_mask | (1 << w), internal_mask | (1 << last))
                if found is not None:
                    return found
            return None

        for a in _iter_bits(g.neighbor_mask(s) & allowed):
            found = extend([s, a], s_mask | (1 << a), 0)
            if found is not None:
                return frozenset(found)
    return None


# ---------------------------------------------------------------------------
# Ladder subgraphs (not necessarily induced)
# ---------------------------------------------------------------------------


def has_ladder_subgraph(g: Graph, rungs: int) -> list[tuple[int, int]] | None:
    """Rung pairs (u_i, v_i) of an embedded k-rung ladder subgraph, or None.

    The embedding is as a subgraph: rung, and rail edges must exist in g,
    extra adjacencies are allowed.  Swapping the two rails gives the same
    ladder, so the first rung is normalized to u_1 < v_1.
    """
    if rungs < 2:
        raise MalformedInputError(f"ladder subgraph search needs rungs >= 2, got {rungs}")
    if g.n < 2 * rungs:
        return None

    def extend(chain: list[tuple[int, int]], used: int) -> list[tuple[int, int]] | None:
        if len(chain) == rungs:
            return chain
        u, v = chain[-1]
        for x in _iter_bits(g.neighbor_mask(u) & ~used):
            for y in _iter_bits(g.neighbor_mask(v) & ~used & g.neighbor_mask(x)):
                if y == x:
                    continue
                found = extend(chain + [(x, y)], used | (1 << x) | (1 << y))
                if found is not None:
                    return found
        return None

    for u in g.vertices():
        for v in _iter_bits(g.neighbor_mask(u)):
            if v <= u:
                continue
            found = extend([(u, v)], (1 << u) | (1 << v))
            if found is not None:
                return found
    return None


# ---------------------------------------------------------------------------
# Planarity (Demoucron-Malgrange-Pertuiset on biconnected blocks)
# ---------------------------------------------------------------------------


def _biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected blocks (bridges come out as 1-edge blocks)."""
    visited = set()
    depth = {}
    low = {}
    blocks: list[list[tuple[int, int]]] = []
    for root in g.vertices():
        if root in visited:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, 0, iter(g.neighbors(root)))]
        visited.add(root)
        depth[root] = 0
        low[root] = 0
        edge_stack: list[tuple[int, int]] = []
        parent = {root: 0}
        while stack:
            v, d, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent[v]:
                    continue
                if w not in visited:
                    visited.add(w)
                    parent[w] = v
                    depth[w] = d + 1
                    low[w] = d + 1
                    edge_stack.append((v, w))
                    stack.append((w, d + 1, iter(g.neighbors(w))))
                    advanced = True
                    break
                if depth[w] < d:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], depth[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= depth[p]:
                    block = []
                    while edge_stack and edge_stack[-1] != (p, v):
                        block.append(edge_stack.pop())
                    block.append(edge_stack.pop())
                    blocks.append(block)
    return blocks


def _find_cycle(vs: list[int], adj: dict[int, set[int]]) -> list[int]:
    # BFS tree; the first non-tree edge closes a cycle through the common ancestor.
    start = vs[0]
    parent: dict[int, int] = {start: 0}
    depth = {start: 0}
    queue = [start]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for w in sorted(adj[v]):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
            elif w != parent[v] and depth[w] <= depth[v]:
                up_v, up_w = [v], [w]
                a, b = v, w
                while depth[a] > depth[b]:
                    a = parent[a]
                    up_v.append(a)
                while depth[b] > depth[a]:
                    b = parent[b]
                    up_w.append(b)
                while a != b:
                    a = parent[a]
                    up_v.append(a)
                    b = parent[b]
                    up_w.append(b)
                return up_v + list(reversed(up_w[:-1]))
    raise AssertionError("biconnected block with >= 3 edges must contain a cycle")


def _demoucron_planar(vs: list[int], adj: dict[int, set[int]]) -> bool:
    nv = len(vs)
    ne = sum(len(a) for a in adj.values()) // 2
    if ne > 3 * nv - 6:
        return False
    cycle = _find_cycle(vs, adj)
    faces: list[list[int]] = [list(cycle), list(cycle)]
    embedded = set(cycle)
    emb_edges = {
        frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))
    }

    while len(emb_edges) < ne:
        # fragments: chords between embedded vertices, and bridges through the rest
        fragments: list[tuple[frozenset[int], list[int] | None]] = []
        for u in sorted(embedded):
            for v in sorted(adj[u]):
                if v > u and v in embedded and frozenset((u, v)) not in emb_edges:
                    fragments.append((frozenset((u, v)), None))
        left = sorted(set(vs) - embedded)
        assigned: set[int] = set()
        for r in left:
            if r in assigned:
                continue
            comp = {r}
            queue = [r]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y not in embedded and y not in comp:
                        comp.add(y)
                        queue.append(y)
            assigned |= comp
            attach = frozenset(w for x in comp for w in adj[x] if w in embedded)
            fragments.append((attach, sorted(comp)))

        face_sets = [set(f) for f in faces]
        admissible: list[list[int]] = []
        for attach, _ in fragments:
            adm = [i for i, fs in enumerate(face_sets) if attach <= fs]
            if not adm:
                return False
            admissible.append(adm)
        pick = next((i for i, adm in enumerate(admissible) if len(adm) == 1), 0)
        attach, comp = fragments[pick]
        face_idx = admissible[pick][0]

        if comp is None:
            a, b = sorted(attach)
            path = [a, b]
        else:
            # shortest attachment-to-attachment path through the fragment
            a = min(attach)
            prev: dict[int, int] = {}
            inside = set(comp)
            queue = [x for x in sorted(adj[a]) if x in inside]
            for x in queue:
                prev[x] = a
            end = 0
            while queue and not end:
                nxt: list[int] = []
                for x in queue:
                    hit = sorted(w for w in adj[x] if w in attach and w != a)
                    if hit:
                        end = hit[0]
                        prev[end] = x
                        break
                    for y in sorted(adj[x]):
                        if y in inside and y not in prev:
                            prev[y] = x
                            nxt.append(y)
                queue = nxt
            if not end:
                raise AssertionError("fragment of a biconnected block has >= 2 attachments")
            path = [end]
            while path[-1] != a:
                path.append(prev[path[-1]])
            path.reverse()

        f = faces[face_idx]
        i, j = f.index(path[0]), f.index(path[-1])
        if i < j:
            arc1, arc2 = f[i : j + 1], f[j:] + f[: i + 1]
        else:
            arc1, arc2 = f[i:] + f[: j + 1], f[j : i + 1]
        interior = path[1:-1]
        faces[face_idx] = arc1 + list(reversed(interior))
        faces.append(arc2 + interior)
        embedded |= set(path)
        for x, y in zip(path, path[1:]):
            emb_edges.add(frozenset((x, y)))
    return True


def is_planar(g: Graph) -> bool:
    """Planarity by face-by-face embedding of each biconnected block."""
    if g.n >= 3 and len(g.edges) > 3 * g.n - 6:
        return False
    for block in _biconnected_blocks(g):
        if len(block) < 3:
            continue
        vs = sorted({v for e in block for v in e})
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in block:
            adj[u].add(v)
            adj[v].add(u)
        if not _demoucron_planar(vs, adj):
            return False
    return True


# ---------------------------------------------------------------------------
# Hamiltonian paths
# ---------------------------------------------------------------------------


def hamiltonian_path_bruteforce(
    g: Graph, max_order: int = DEFAULT_MAX_HAMILTONIAN_ORDER
) -> list[int] | None:
    """A Hamiltonian path as a vertex list, or None; exhaustive backtracking.

    Raises CapacityError above ``max_order``.
    """
    if g.n > max_order:
        raise CapacityError(
            f"Hamiltonian brute force capped at order {max_order}, got {g.n}; "
            "pass a larger max_order to override"
        )
    if g.n == 1:
        return [1]
    if not is_connected(g):
        return None
    deg_one = [v for v in g.vertices() if g.degree(v) == 1]
    if len(deg_one) > 2:
        return None
    starts = [deg_one[0]] if deg_one else list(g.vertices())
    target = ((1 << (g.n + 1)) - 1) & ~1

    def extend(path: list[int], seen: int) -> list[int] | None:
        if seen == target:
            return path
        for w in _iter_bits(g.neighbor_mask(path[-1]) & ~seen):
            found = extend(path + [w], seen | (1 << w))
            if found is not None:
                return found
        return None

    for s in starts:
        found = extend([s], 1 << s)
        if found is not None:
            return found
    return None


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Standard graph6 encoding: order, then the upper triangle column by column."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise CapacityError(f"graph6 encoding supported up to order 258047, got {n}")
    bits = []
    for j in range(2, n + 1):
        for i in range(1, j):
            bits.append(1 if g.has_edge(i, j) else 0)
    data = []
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        data.append(val + 63)
    return "".join(chr(c) for c in head + data)


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    base = 0
    header = ">>graph6<<"
    if s.startswith(header):
        base = len(header)
        s = s[len(header) :]
    if not s:
        raise ParseError("empty graph6 input", base)
    for k, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise ParseError(f"invalid graph6 byte {ord(ch)}", base + k)
    if ord(s[0]) == 126:
        if len(s) >= 2 and ord(s[1]) == 126:
            raise ParseError("graph6 orders beyond 258047 are not supported", base)
        if len(s) < 4:
            raise ParseError("truncated graph6 order field", base + len(s))
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    if n < 1:
        raise ParseError(f"graph6 order must be >= 1, got {n}", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - pos < need:
        raise ParseError("graph6 data shorter than the order requires", base + len(s))
    if len(s) - pos > need:
        raise ParseError("trailing bytes after graph6 data", base + pos + need)
    bits = []
    for k in range(need):
        val = ord(s[pos + k]) - 63
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    for extra in bits[nbits:]:
        if extra:
            raise ParseError("nonzero padding bits in graph6 data", base + len(s) - 1)
    edges = []
    idx = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def canonical_graph6(g: Graph, max_order: int = 10) -> str:
    """Lexicographically smallest graph6 string over all relabelings.

    Exhaustive over vertex orders with prefix pruning; intended for the small
    catalog graphs, hence the low default cap.
    """
    if g.n > max_order:
        raise CapacityError(f"canonical form search capped at order {max_order}, got {g.n}")
    n = g.n
    best: list[int] | None = None

    def extend(seq: list[int], rows: list[int]) -> None:
        nonlocal best
        if best is not None and rows > best[: len(rows)]:
            return
        if len(seq) == n:
            if best is None or rows < best:
                best = list(rows)
            return
        for v in g.vertices():
            if v in seq:
                continue
            new_col = [1 if g.has_edge(u, v) else 0 for u in seq]
            extend(seq + [v], rows + new_col)

    extend([], [])
    assert best is not None
    relabeled: list[tuple[int, int]] = []
    idx = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if best[idx]:
                relabeled.append((i, j))
            idx += 1
    return encode_graph6(Graph(n, relabeled))


# ---------------------------------------------------------------------------
# Plain-text interchange
# ---------------------------------------------------------------------------


def format_edgelist(g: Graph) -> str:
    """Header line ``n m`` then one ``u v`` line per edge, sorted."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge-list input", 0)
    head = lines[0].split()
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise ParseError(f"edge-list header must be 'n m', got {lines[0]!r}", 0)
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ParseError(f"edge-list header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2 or not all(t.lstrip("-").isdigit() for t in toks):
            raise ParseError(f"bad edge line {ln!r}")
        edges.append((int(toks[0]), int(toks[1])))
    return Graph(n, edges)


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in g.vertices()]
    lines += [f"  {u} -- {v};" for u, v in sorted(g.edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"
