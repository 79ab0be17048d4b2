"""Boxcar graphs and the classification of connected 3-regular inversion graphs.

A boxcar is a blow-up of a path assembled from four gadgets: a left cap
G1 = P3[K2, I2, K1], interior cars G2 = P4[K1, K1, K2, K1] and
G3 = P5[K1, K1, I2, I2, K1], and a right cap G4 = P4[K1, K1, I2, K2],
consecutive gadgets sharing one terminal vertex.  A boxcar is described by
its sequence of interior car widths (2 for G2, 3 for G3), read left to
right; the empty sequence is the bare 10-vertex caps-only graph, and each
car adds twice its width to the order.  Up to reversal the sequence
determines the graph, and every connected 3-regular inversion graph is K4,
K3,3, or exactly one boxcar.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .blowups import (
    BlowupPart,
    BlowupSpec,
    apply_blowup,
    blowup_realizer,
    is_blowup_of_path,
)
from .errors import DomainError, MalformedInputError, ParseError
from .graphs import (
    Graph,
    are_isomorphic,
    canonical_graph6,
    complete_bipartite_graph,
    complete_graph,
    contains_induced,
    has_large_hole,
    is_connected,
    is_regular,
    path_graph,
)
from .permutations import (
    ForbiddenCatalog,
    Permutation,
    RealizerCertificate,
    certificate_realizes,
    load_forbidden_catalog,
)

GADGET_TOKENS: dict[str, tuple[str, ...]] = {
    "G1": ("K2", "I2", "K1"),
    "G2": ("K1", "K1", "K2", "K1"),
    "G3": ("K1", "K1", "I2", "I2", "K1"),
    "G4": ("K1", "K1", "I2", "K2"),
}


def gadget_graph(gadget_id: str) -> Graph:
    """One gadget as a path blow-up; blocks are labeled left to right."""
    if gadget_id not in GADGET_TOKENS:
        raise MalformedInputError(f"unknown gadget {gadget_id!r}; expected G1..G4")
    tokens = GADGET_TOKENS[gadget_id]
    parts = tuple(BlowupPart(t[0], int(t[1:])) for t in tokens)
    return apply_blowup(BlowupSpec(path_graph(len(parts)), parts))


def gadget_terminals(gadget_id: str) -> tuple[int | None, int | None]:
    """The (left, right) terminal vertices used to chain gadgets; caps lack one side."""
    if gadget_id not in GADGET_TOKENS:
        raise MalformedInputError(f"unknown gadget {gadget_id!r}; expected G1..G4")
    n = gadget_graph(gadget_id).n
    left = 1 if gadget_id != "G1" else None
    right = n if gadget_id != "G4" else None
    return left, right


# ---------------------------------------------------------------------------
# Sequences
# ---------------------------------------------------------------------------


def check_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    out = tuple(seq)
    if any(p not in (2, 3) for p in out):
        raise MalformedInputError(f"boxcar sequence entries must be 2 or 3, got {out!r}")
    return out


def canonicalize_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    """The lexicographically smaller of the sequence and its reversal."""
    fwd = check_sequence(seq)
    return min(fwd, tuple(reversed(fwd)))


def parse_sequence(text: str) -> tuple[int, ...]:
    s = text.strip()
    if s == "-":
        return ()
    if not s:
        raise ParseError("empty boxcar sequence; use '-' for the caps-only boxcar", 0)
    out = []
    for tok in s.split(","):
        if tok.strip() not in ("2", "3"):
            raise ParseError(f"bad boxcar sequence entry {tok.strip()!r}", text.find(tok))
        out.append(int(tok))
    return tuple(out)


def format_sequence(seq: Sequence[int]) -> str:
    out = check_sequence(seq)
    return ",".join(str(p) for p in out) if out else "-"


def _sequence_parts(seq: tuple[int, ...]) -> tuple[BlowupPart, ...]:
    parts = [BlowupPart("K", 2), BlowupPart("I", 2), BlowupPart("K", 1)]
    for p in seq:
        if p == 2:
            parts += [BlowupPart("K", 1), BlowupPart("K", 2), BlowupPart("K", 1)]
        else:
            parts += [
                BlowupPart("K", 1),
                BlowupPart("I", 2),
                BlowupPart("I", 2),
                BlowupPart("K", 1),
            ]
    parts += [BlowupPart("K", 1), BlowupPart("I", 2), BlowupPart("K", 2)]
    return tuple(parts)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def boxcar_graph(seq: Sequence[int]) -> Graph:
    """Assemble the boxcar by chaining gadget graphs at shared terminals.

    Labels run left to right: each gadget's vertices get fresh labels in
    block order, except its left terminal, which reuses the previous
    gadget's right terminal.
    """
    cars = check_sequence(seq)
    ids = ["G1"] + ["G2" if p == 2 else "G3" for p in cars] + ["G4"]
    edges: list[tuple[int, int]] = []
    total = 0
    prev_right = 0
    for gid in ids:
        g = gadget_graph(gid)
        left, right = gadget_terminals(gid)
        mapping = {}
        for v in g.vertices():
            if v == left:
                mapping[v] = prev_right
            else:
                total += 1
                mapping[v] = total
        edges.extend((mapping[u], mapping[v]) for u, v in g.edges)
        if right is not None:
            prev_right = mapping[right]
    return Graph(total, edges)


def boxcar_blowup_spec(seq: Sequence[int]) -> BlowupSpec:
    """The same graph as one path blow-up: caps' parts, then each car's parts.

    apply_blowup of this spec reproduces boxcar_graph(seq) label for label.
    """
    parts = _sequence_parts(check_sequence(seq))
    return BlowupSpec(path_graph(len(parts)), parts)


def boxcar_order(seq: Sequence[int]) -> int:
    return 10 + 2 * sum(check_sequence(seq))


def _boxcar_blocks(seq: tuple[int, ...]) -> list[tuple[str, tuple[int, ...]]]:
    blocks = []
    label = 0
    for part in _sequence_parts(seq):
        vs = tuple(range(label + 1, label + 1 + part.size))
        label += part.size
        blocks.append((part.token(), vs))
    return blocks


def boxcar_hamiltonian_path(seq: Sequence[int]) -> list[int]:
    """A Hamiltonian path of boxcar_graph(seq), written down without search.

    Enter through the left I2, sweep the left K2, then walk the chain left to
    right; a K2 car is crossed directly, an I2-I2 car by alternating between
    its two groups, and the right cap is closed through its K2.
    """
    blocks = _boxcar_blocks(check_sequence(seq))
    left_k2 = blocks[0][1]
    left_i2 = blocks[1][1]
    path = [left_i2[0], left_k2[0], left_k2[1], left_i2[1]]
    i = 2
    while i < len(blocks) - 2:
        token, vs = blocks[i]
        if token == "K1":
            path.append(vs[0])
            i += 1
        elif token == "K2":
            path.extend(vs)
            i += 1
        else:
            partner = blocks[i + 1][1]
            path.extend([vs[0], partner[0], vs[1], partner[1]])
            i += 2
    right_i2 = blocks[-2][1]
    right_k2 = blocks[-1][1]
    path.extend([right_i2[0], right_k2[0], right_k2[1], right_i2[1]])
    return path


# ---------------------------------------------------------------------------
# Realizers for path blow-ups
# ---------------------------------------------------------------------------


def _path_realizer(k: int) -> tuple[Permutation, list[int]]:
    """A permutation whose inversion graph is a k-vertex path, with the path's vertex order.

    Zig-zag values: position 1 holds 2, odd positions i hold i-2, even
    positions i hold i+2 (clamped to the largest unused value at the end).
    """
    if k == 1:
        return Permutation([1]), [1]
    vals = []
    for i in range(1, k + 1):
        if i == 1:
            vals.append(2)
        elif i % 2 == 1:
            vals.append(i - 2)
        else:
            vals.append(i + 2 if i + 2 <= k else (k if k % 2 else k - 1))
    sigma = Permutation(vals)
    from .permutations import graph_from_permutation

    g = graph_from_permutation(sigma)
    assert len(g.edges) == k - 1 and g.max_degree() <= 2 and is_connected(g)
    walk = [min(v for v in g.vertices() if g.degree(v) == 1)]
    while len(walk) < k:
        walk.append(next(w for w in g.neighbors(walk[-1]) if w not in walk[-2:]))
    return sigma, walk


def realizer_for_path_spec(parts: Sequence[BlowupPart]) -> RealizerCertificate:
    """A constructed (not searched) realizer for the blow-up of a path by ``parts``.

    The path realizer's traversal order says which base vertex carries which
    part; cliques get descending inner permutations, independent sets
    ascending ones, and the lifted permutation then realizes the blow-up of
    the standard path exactly, block against block.
    """
    parts = tuple(parts)
    k = len(parts)
    sigma, walk = _path_realizer(k)
    slot_of = {v: t for t, v in enumerate(walk)}  # base vertex -> path slot
    taus = []
    for a in range(1, k + 1):
        part = parts[slot_of[a]]
        inner = range(part.size, 0, -1) if part.kind == "K" else range(1, part.size + 1)
        taus.append(Permutation(inner))
    pi = blowup_realizer(sigma, taus)

    sizes_by_slot = [p.size for p in parts]
    slot_offsets = [0]
    for s in sizes_by_slot:
        slot_offsets.append(slot_offsets[-1] + s)
    vertex_to_position: dict[int, int] = {}
    pos = 0
    for p in range(1, k + 1):
        a = sigma(p)
        t = slot_of[a]
        for x in range(sizes_by_slot[t]):
            vertex_to_position[slot_offsets[t] + 1 + x] = pos + 1 + x
        pos += sizes_by_slot[t]
    cert = RealizerCertificate(pi, vertex_to_position)
    spec_graph = apply_blowup(BlowupSpec(path_graph(k), parts))
    assert certificate_realizes(spec_graph, cert)
    return cert


def boxcar_realizer(seq: Sequence[int]) -> Permutation:
    """A permutation realizing boxcar_graph(seq), built from the path spec."""
    return realizer_for_path_spec(_sequence_parts(check_sequence(seq))).pi


# ---------------------------------------------------------------------------
# Regular families
# ---------------------------------------------------------------------------


def regular_family_spec(r: int, n: int) -> BlowupSpec:
    """Path blow-up spec of the r-regular family member with parameter n.

    The base path has 4n+2 vertices: K2 on the left, K_{r-1} on the right,
    and interior parts cycling I_{r-1}, I_{r-2}, I_1, I_2 by position mod 4.
    The order works out to 2nr + r + 1.
    """
    if not isinstance(r, int) or r < 3:
        raise DomainError(f"family needs integer degree r >= 3, got {r!r}")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"family needs integer parameter n >= 0, got {n!r}")
    k = 4 * n + 2
    interior = {2: ("I", r - 1), 3: ("I", r - 2), 0: ("I", 1), 1: ("I", 2)}
    parts: list[BlowupPart] = [BlowupPart("K", 2)]
    for i in range(2, k):
        kind, size = interior[i % 4]
        parts.append(BlowupPart(kind, size))
    parts.append(BlowupPart("K", r - 1))
    return BlowupSpec(path_graph(k), tuple(parts))


def regular_family(r: int, n: int) -> Graph:
    return apply_blowup(regular_family_spec(r, n))


def regular_family_realizer(r: int, n: int) -> RealizerCertificate:
    """A verified realizer of regular_family(r, n)."""
    return realizer_for_path_spec(regular_family_spec(r, n).parts)


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CubicClassification:
    """Outcome for a connected 3-regular graph.

    kind is "K4", "K33", "boxcar", or "not-permutation"; a boxcar carries its
    canonical sequence, a rejection carries a witness description plus the
    vertices exhibiting it (when the witness is a subgraph).
    """

    kind: str
    sequence: tuple[int, ...] | None = None
    witness: str | None = None
    witness_vertices: frozenset[int] | None = None


def _parse_boxcar_tokens(parts: Sequence[BlowupPart]) -> tuple[int, ...] | None:
    toks = [p.token() for p in parts]

    def read(ts: list[str]) -> tuple[int, ...] | None:
        if len(ts) < 6 or ts[:3] != ["K2", "I2", "K1"] or ts[-3:] != ["K1", "I2", "K2"]:
            return None
        seq = []
        i = 3
        while i < len(ts) - 3:
            if ts[i : i + 3] == ["K1", "K2", "K1"]:
                seq.append(2)
                i += 3
            elif ts[i : i + 4] == ["K1", "I2", "I2", "K1"]:
                seq.append(3)
                i += 4
            else:
                return None
        if i != len(ts) - 3:
            return None
        return tuple(seq)

    forward = read(toks)
    return forward if forward is not None else read(list(reversed(toks)))


def classify_cubic(g: Graph, catalog: ForbiddenCatalog | None = None) -> CubicClassification:
    """Decide which connected 3-regular inversion graph g is, or why it is none.

    Raises DomainError unless g is connected and 3-regular.
    """
    if not is_regular(g, 3):
        raise DomainError("classification applies to 3-regular graphs only")
    if not is_connected(g):
        raise DomainError("classification applies to connected graphs only")
    if g.n == 4:
        return CubicClassification(kind="K4")
    if g.n == 6 and are_isomorphic(g, complete_bipartite_graph(3, 3)) is not None:
        return CubicClassification(kind="K33")
    found = is_blowup_of_path(g)
    if found is not None:
        seq = _parse_boxcar_tokens(found[1].parts)
        if seq is not None:
            return CubicClassification(kind="boxcar", sequence=canonicalize_sequence(seq))
    hole = has_large_hole(g)
    if hole is not None:
        return CubicClassification(
            kind="not-permutation",
            witness="chordless cycle of length >= 5",
            witness_vertices=hole,
        )
    if catalog is None:
        catalog = load_forbidden_catalog()
    for member in catalog.graphs:
        hit = contains_induced(g, member)
        if hit is not None:
            return CubicClassification(
                kind="not-permutation",
                witness=f"induced forbidden subgraph {canonical_graph6(member)}",
                witness_vertices=hit,
            )
    return CubicClassification(
        kind="not-permutation",
        witness="no decomposition into a blown-up path and no small witness found",
    )
