"""Counting and generating connected 3-regular inversion graphs by order.

Three independent routes are kept side by side on purpose: a closed
recurrence on the order, explicit generation of boxcar sequences, and (for
small orders) a census of all connected cubic graphs filtered by realizer
search.  crosscheck() runs all of them and reports every disagreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .boxcars import boxcar_graph, boxcar_order, canonicalize_sequence
from .errors import MalformedInputError
from .generation import MAX_CENSUS_ORDER, connected_cubic_graphs
from .graphs import Graph, complete_bipartite_graph, complete_graph
from .permutations import find_realizer, is_cubic_permutation_graph_fast

JSON_SCHEMA = "permgraph/1"

# Orders whose count is pinned directly; the recurrence takes over above 20.
_BASE_COUNTS = {4: 1, 6: 1, 10: 1, 14: 1, 16: 1, 18: 1, 20: 1}


def count_compositions_23(x: int) -> int:
    """t(x): the number of ways to write x as an ordered sum of 2s and 3s.

    t(x) = t(x-2) + t(x-3) by first summand, with t(0) = 1 and t(x) = 0
    for x < 0 (hence t(1) = 0).
    """
    if not isinstance(x, int):
        raise MalformedInputError(f"need an integer, got {x!r}")
    if x < 0:
        return 0
    table = [0] * (x + 3)
    table[0] = 1
    for y in range(2, x + 1):
        table[y] = table[y - 2] + table[y - 3]
    return table[x]


def count_cubic(n: int) -> int:
    """a(n): connected 3-regular inversion graphs of order n, up to isomorphism.

    Zero for odd or tiny orders (and for 8 and 12, where no boxcar fits);
    above 20 the boxcar sequences give a(n) = a(n-4) + a(n-6), minus an
    overcount of t((n-20)/4) when n is divisible by 4: extending by a 2-car
    on either side or a 3-car on either side double-counts exactly the
    palindromic-to-be sequences, which exist only at those orders.
    """
    if not isinstance(n, int):
        raise MalformedInputError(f"need an integer, got {n!r}")
    if n < 4 or n % 2:
        return 0
    if n <= 20:
        return _BASE_COUNTS.get(n, 0)
    value = count_cubic(n - 4) + count_cubic(n - 6)
    if n % 4 == 0:
        value -= count_compositions_23((n - 20) // 4)
    return value


def compositions_23(total: int) -> list[tuple[int, ...]]:
    """All ordered (2|3)-compositions of ``total``, in lexicographic order."""
    if total < 0:
        return []
    if total == 0:
        return [()]
    out = []
    for head in (2, 3):
        out.extend((head,) + rest for rest in compositions_23(total - head))
    return sorted(out)


def generate_sequences(n: int) -> list[tuple[int, ...]]:
    """Canonical boxcar sequences of total order n, sorted; empty when none fit.

    A boxcar of order n needs n even, n >= 10, with cars summing to
    (n - 10) / 2; sequences equal up to reversal collapse to one entry.
    """
    if n % 2 or n < 10:
        return []
    seen = {canonicalize_sequence(c) for c in compositions_23((n - 10) // 2)}
    return sorted(seen)


def generate_graphs(n: int) -> list[Graph]:
    """All connected 3-regular inversion graphs of order n, one per class.

    K4 at order 4, K3,3 at order 6, otherwise one boxcar per canonical
    sequence; the list length always equals count_cubic(n).
    """
    if n == 4:
        return [complete_graph(4)]
    if n == 6:
        return [complete_bipartite_graph(3, 3)]
    return [boxcar_graph(seq) for seq in generate_sequences(n)]


def census_cubic(n: int) -> list[Graph]:
    """All connected cubic graphs of order n up to isomorphism (capped at order 12)."""
    return connected_cubic_graphs(n)


# ---------------------------------------------------------------------------
# Count tables
# ---------------------------------------------------------------------------


@dataclass
class CountTable:
    """a(n) for even orders up to n_max and t(x) for 0..x_max."""

    a_values: dict[int, int]
    t_values: dict[int, int]


def build_count_table(n_max: int, x_max: int) -> CountTable:
    a_values = {n: count_cubic(n) for n in range(4, n_max + 1, 2)}
    t_values = {x: count_compositions_23(x) for x in range(0, x_max + 1)}
    return CountTable(a_values, t_values)


def format_counts_tsv(table: CountTable) -> str:
    lines = ["n\ta(n)"]
    lines += [f"{n}\t{table.a_values[n]}" for n in sorted(table.a_values)]
    return "\n".join(lines) + "\n"


def format_compositions_tsv(table: CountTable) -> str:
    lines = ["x\tt(x)"]
    lines += [f"{x}\t{table.t_values[x]}" for x in sorted(table.t_values)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Crosscheck
# ---------------------------------------------------------------------------


@dataclass
class CrosscheckRecord:
    """One order's counts from every route that was run (None when skipped)."""

    n: int
    recurrence: int
    sequences: int
    materialized: int | None = None
    census_total: int | None = None
    census_realizable: int | None = None

    def agree(self) -> bool:
        counts = [self.recurrence, self.sequences]
        if self.materialized is not None:
            counts.append(self.materialized)
        if self.census_realizable is not None:
            counts.append(self.census_realizable)
        return len(set(counts)) == 1


@dataclass
class CrosscheckReport:
    n_max: int
    census_max: int
    materialize_max: int
    records: list[CrosscheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(rec.agree() for rec in self.records)

    def discrepancies(self) -> list[int]:
        return [rec.n for rec in self.records if not rec.agree()]


def crosscheck(
    n_max: int,
    census_max: int = MAX_CENSUS_ORDER,
    materialize_max: int = 40,
    use_catalog: bool = False,
) -> CrosscheckReport:
    """Run every counting route up to its own ceiling and collect the results.

    The recurrence and the sequence count run for every even order; graphs
    are materialized (and recounted) up to ``materialize_max``; a full cubic
    census runs up to ``census_max``, filtered by realizer search or, with
    ``use_catalog``, by the forbidden-subgraph recognizer.  Both filters must
    produce identical verdicts.
    """
    census_max = min(census_max, MAX_CENSUS_ORDER, n_max)
    report = CrosscheckReport(n_max, census_max, materialize_max)
    for n in range(4, n_max + 1, 2):
        seq_route = len(generate_sequences(n)) if n >= 10 else (1 if n in (4, 6) else 0)
        rec = CrosscheckRecord(n=n, recurrence=count_cubic(n), sequences=seq_route)
        if n <= materialize_max:
            rec.materialized = len(generate_graphs(n))
        if n <= census_max:
            census = census_cubic(n)
            rec.census_total = len(census)
            if use_catalog:
                rec.census_realizable = sum(
                    1 for g in census if is_cubic_permutation_graph_fast(g)
                )
            else:
                rec.census_realizable = sum(
                    1 for g in census if find_realizer(g, max_order=n) is not None
                )
        report.records.append(rec)
    return report


def format_crosscheck_text(report: CrosscheckReport) -> str:
    header = f"{'n':>4}  {'recurrence':>10}  {'sequences':>9}  {'graphs':>6}  {'census':>6}  {'realizable':>10}  ok"
    lines = [header, "-" * len(header)]
    for rec in report.records:
        mat = "-" if rec.materialized is None else str(rec.materialized)
        tot = "-" if rec.census_total is None else str(rec.census_total)
        rea = "-" if rec.census_realizable is None else str(rec.census_realizable)
        lines.append(
            f"{rec.n:>4}  {rec.recurrence:>10}  {rec.sequences:>9}  {mat:>6}  {tot:>6}  {rea:>10}  "
            + ("yes" if rec.agree() else "NO")
        )
    verdict = "all routes agree" if report.ok else (
        "DISAGREEMENT at n = " + ", ".join(str(n) for n in report.discrepancies())
    )
    lines.append(verdict)
    return "\n".join(lines) + "\n"


def crosscheck_to_json(report: CrosscheckReport) -> str:
    payload = {
        "schema": JSON_SCHEMA,
        "n_max": report.n_max,
        "census_max": report.census_max,
        "materialize_max": report.materialize_max,
        "ok": report.ok,
        "discrepancies": report.discrepancies(),
        "records": [
            {
                "n": rec.n,
                "recurrence": rec.recurrence,
                "sequences": rec.sequences,
                "materialized": rec.materialized,
                "census_total": rec.census_total,
                "census_realizable": rec.census_realizable,
                "agree": rec.agree(),
            }
            for rec in report.records
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
