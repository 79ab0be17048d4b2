"""Graph composition, clique/independent-set blow-ups, and twin quotients.

A blow-up replaces each base vertex by a clique (Kk) or an independent set
(Ik) and joins two groups completely exactly when their base vertices are
adjacent.  Groups of a blow-up are twin classes, so the construction can be
inverted: the twin quotient of a graph is the unique smallest base it is a
blow-up of.  Realizers lift through composition by stacking value blocks in
the order the outer permutation prescribes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import MalformedInputError, ParseError
from .graphs import (
    Graph,
    complete_graph,
    decode_graph6,
    empty_graph,
    encode_graph6,
    is_connected,
    path_graph,
)
from .permutations import Permutation


@dataclass(frozen=True)
class BlowupPart:
    """One group of a blow-up: kind "K" (clique) or "I" (independent set), size >= 1.

    A group of size 1 is both at once; it is normalized to "K" so equal
    groups compare equal.
    """

    kind: str
    size: int

    def __post_init__(self) -> None:
        if self.kind not in ("K", "I"):
            raise MalformedInputError(f"part kind must be 'K' or 'I', got {self.kind!r}")
        if not isinstance(self.size, int) or self.size < 1:
            raise MalformedInputError(f"part size must be a positive integer, got {self.size!r}")
        if self.size == 1:
            object.__setattr__(self, "kind", "K")

    def token(self) -> str:
        return f"{self.kind}{self.size}"

    def materialize(self) -> Graph:
        return complete_graph(self.size) if self.kind == "K" else empty_graph(self.size)


def parse_part(token: str) -> BlowupPart:
    if len(token) < 2 or token[0] not in ("K", "I") or not token[1:].isdigit():
        raise ParseError(f"bad blow-up part token {token!r}")
    return BlowupPart(token[0], int(token[1:]))


@dataclass(frozen=True)
class BlowupSpec:
    """A base graph together with one part per base vertex."""

    base: Graph
    parts: tuple[BlowupPart, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != self.base.n:
            raise MalformedInputError(
                f"need one part per base vertex: base order {self.base.n}, "
                f"{len(self.parts)} parts"
            )

    def order(self) -> int:
        return sum(p.size for p in self.parts)


def format_blowup_spec(spec: BlowupSpec) -> str:
    """Two lines: the base in graph6, then the part tokens in base-vertex order."""
    return encode_graph6(spec.base) + "\n" + " ".join(p.token() for p in spec.parts) + "\n"


def parse_blowup_spec(text: str) -> BlowupSpec:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if len(lines) != 2:
        raise ParseError(f"blow-up spec needs exactly 2 nonempty lines, got {len(lines)}")
    base = decode_graph6(lines[0])
    parts = tuple(parse_part(tok) for tok in lines[1].split())
    return BlowupSpec(base, parts)


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------


def compose(base: Graph, factors: Sequence[Graph]) -> Graph:
    """Substitute ``factors[i-1]`` for base vertex i; join groups of adjacent base vertices.

    Group i occupies the labels right after group i-1, so the result's vertex
    order is the base order with each vertex expanded in place.
    """
    if len(factors) != base.n:
        raise MalformedInputError(
            f"need one factor per base vertex: base order {base.n}, {len(factors)} factors"
        )
    offsets = [0]
    for f in factors:
        offsets.append(offsets[-1] + f.n)
    edges: list[tuple[int, int]] = []
    for i, f in enumerate(factors):
        off = offsets[i]
        edges.extend((off + u, off + v) for u, v in f.edges)
    for i, j in base.edges:
        for u in range(offsets[i - 1] + 1, offsets[i - 1] + factors[i - 1].n + 1):
            for v in range(offsets[j - 1] + 1, offsets[j - 1] + factors[j - 1].n + 1):
                edges.append((u, v))
    return Graph(offsets[-1], edges)


def apply_blowup(spec: BlowupSpec) -> Graph:
    return compose(spec.base, [p.materialize() for p in spec.parts])


def blowup_realizer(sigma: Permutation, taus: Sequence[Permutation]) -> Permutation:
    """Realizer of the composed graph from realizers of the base and the factors.

    ``taus[a-1]`` realizes the factor substituted for base vertex a (a vertex
    of sigma's inversion graph, so a value of sigma).  The block at position p
    carries the factor of base vertex sigma(p), shifted by the sizes of all
    factors of smaller base vertices: blocks then invert exactly when sigma
    does, and each factor keeps its own inversions, so the result's inversion
    graph equals compose() of the factor inversion graphs label for label.
    """
    if len(taus) != len(sigma):
        raise MalformedInputError(
            f"need one inner permutation per base vertex: outer length {len(sigma)}, "
            f"got {len(taus)}"
        )
    n = len(sigma)
    sizes = [len(t) for t in taus]
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    vals: list[int] = []
    for p in range(1, n + 1):
        a = sigma(p)
        vals.extend(taus[a - 1](x) + starts[a - 1] for x in range(1, sizes[a - 1] + 1))
    return Permutation(vals)


# ---------------------------------------------------------------------------
# Twin classes and the minimal base
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwinPartition:
    """Twin classes (each a clique or an independent set), ordered by smallest member."""

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]


def twin_partition(g: Graph) -> TwinPartition:
    """Partition vertices into twin classes: u, v are twins when N(u)-{v} = N(v)-{u}.

    Twinness is transitive here, and a class never mixes adjacent with
    non-adjacent pairs, so each class is a clique ("K") or independent ("I").
    """
    rep: dict[int, int] = {}
    classes: list[list[int]] = []
    for v in g.vertices():
        placed = False
        for ci, members in enumerate(classes):
            u = members[0]
            both = (1 << u) | (1 << v)
            if (g.neighbor_mask(u) & ~both) == (g.neighbor_mask(v) & ~both):
                members.append(v)
                rep[v] = ci
                placed = True
                break
        if not placed:
            rep[v] = len(classes)
            classes.append([v])
    kinds = []
    for members in classes:
        if len(members) == 1:
            kinds.append("K")
        else:
            kinds.append("K" if g.has_edge(members[0], members[1]) else "I")
    return TwinPartition(tuple(tuple(m) for m in classes), tuple(kinds))


def minimal_base(g: Graph) -> tuple[Graph, BlowupSpec]:
    """The smallest graph g is a blow-up of, with the spec rebuilding g.

    One quotient by twin classes suffices: a second round could only merge
    two quotient vertices whose classes in g were mutually twin vertex-wise,
    and those already landed in one class.  (Re-quotienting the *base* can
    shrink it further, but then g is no longer a blow-up of the result; the
    4-cycle, whose quotient is K2, shows why iterating would overshoot.)
    """
    tp = twin_partition(g)
    k = len(tp.classes)
    reps = [members[0] for members in tp.classes]
    base_edges = [
        (i + 1, j + 1)
        for i in range(k)
        for j in range(i + 1, k)
        if g.has_edge(reps[i], reps[j])
    ]
    base = Graph(k, base_edges)
    parts = tuple(
        BlowupPart(tp.kinds[i], len(tp.classes[i])) for i in range(k)
    )
    return base, BlowupSpec(base, parts)


def is_blowup_of_path(g: Graph) -> tuple[Graph, BlowupSpec] | None:
    """If g's minimal base is a path, that path and the spec with parts in path order.

    The spec's base is the standard path 1-2-...-k, its parts listed along
    the walk; of the two walk directions the one with the lexicographically
    smaller token sequence is returned.
    """
    base, spec = minimal_base(g)
    k = base.n
    if k == 1:
        return base, spec
    if len(base.edges) != k - 1 or base.max_degree() > 2 or not is_connected(base):
        return None
    ends = [v for v in base.vertices() if base.degree(v) == 1]
    walk = [ends[0]]
    while len(walk) < k:
        nxt = [w for w in base.neighbors(walk[-1]) if w not in walk[-2:]]
        walk.append(nxt[0])
    forward = tuple(spec.parts[v - 1] for v in walk)
    backward = tuple(reversed(forward))
    ordered = min(forward, backward, key=lambda ps: [p.token() for p in ps])
    return path_graph(k), BlowupSpec(path_graph(k), ordered)
