"""Cospectral/coinvariant mate counting over graph streams.

A graph's fingerprint for a matrix kind is either its characteristic
polynomial coefficients (spectral mode) or its invariant factors plus
zero count (invariant mode), serialised to length-prefixed bytes.  Both
are exact, so two graphs share a fingerprint iff they are genuinely
cospectral/coinvariant for that matrix; no hashing, no tolerances.

A census buckets a stream of same-order, pairwise non-isomorphic graphs
by fingerprint and counts the graphs lying in buckets of size >= 2, i.e.
the graphs that have at least one mate.  Isomorphism dedup is the
generator's or ingester's contract, never re-tested here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Sequence

from .exact import charpoly, snf
from .generators import generate_connected_graphs, generate_trees
from .graphs import Graph, complete_graph, distance_profile
from .matrices import KIND_ORDER, MatrixKind, build

MODES = ("spectral", "invariant")


def _encode_ints(values: Iterable[int]) -> bytes:
    out = bytearray()
    for v in values:
        blob = v.to_bytes((v.bit_length() + 8) // 8, "big", signed=True)
        out += len(blob).to_bytes(2, "big")
        out += blob
    return bytes(out)


@dataclass(frozen=True)
class Fingerprint:
    kind: MatrixKind
    mode: str
    payload: bytes


def fingerprint(g: Graph, kind: MatrixKind, mode: str, profile=None) -> Fingerprint:
    """Deterministic, isomorphism-invariant certificate of g for one
    (matrix kind, mode) pair."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if profile is None:
        profile = distance_profile(g)  # also rejects disconnected input
    m = build(g, kind, profile)
    if mode == "spectral":
        payload = _encode_ints(charpoly(m).coeffs)
    else:
        result = snf(m)
        payload = _encode_ints(result.factors + (result.zeros,))
    return Fingerprint(kind, mode, payload)


@dataclass(frozen=True)
class CensusEntry:
    kind: MatrixKind
    mode: str
    mate_count: int
    total: int

    @property
    def uncertainty(self) -> Fraction:
        return Fraction(self.mate_count, self.total)


@dataclass(frozen=True)
class CensusReport:
    n: int
    total: int
    entries: tuple[CensusEntry, ...]

    def get(self, kind: MatrixKind, mode: str) -> CensusEntry:
        for e in self.entries:
            if e.kind is kind and e.mode == mode:
                return e
        raise KeyError((kind, mode))


def _graph_payloads(args) -> tuple[int, list[tuple[MatrixKind, str, bytes]]]:
    g, kinds, modes = args
    profile = distance_profile(g)
    out = []
    for kind in kinds:
        m = build(g, kind, profile)
        for mode in modes:
            if mode == "spectral":
                payload = _encode_ints(charpoly(m).coeffs)
            else:
                result = snf(m)
                payload = _encode_ints(result.factors + (result.zeros,))
            out.append((kind, mode, payload))
    return g.n, out


def bucket_counts(
    graphs: Iterable[Graph],
    kinds: Sequence[MatrixKind],
    modes: Sequence[str] = MODES,
    jobs: int = 1,
) -> tuple[int, int, dict[tuple[MatrixKind, str], dict[bytes, int]]]:
    """Fingerprint every graph and tally bucket sizes.

    Returns (n, total, buckets) where buckets maps (kind, mode) to a
    payload -> count table.  Raises on an empty stream or mixed orders.
    """
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
    buckets: dict[tuple[MatrixKind, str], dict[bytes, int]] = {
        (kind, mode): {} for kind in kinds for mode in modes
    }
    n = -1
    total = 0
    tasks = ((g, tuple(kinds), tuple(modes)) for g in graphs)
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.imap_unordered(_graph_payloads, tasks, chunksize=64)
            for gn, payloads in results:
                if n < 0:
                    n = gn
                elif gn != n:
                    raise ValueError("census stream mixes vertex counts")
                total += 1
                for kind, mode, payload in payloads:
                    table = buckets[(kind, mode)]
                    table[payload] = table.get(payload, 0) + 1
    else:
        for task in tasks:
            gn, payloads = _graph_payloads(task)
            if n < 0:
                n = gn
            elif gn != n:
                raise ValueError("census stream mixes vertex counts")
            total += 1
            for kind, mode, payload in payloads:
                table = buckets[(kind, mode)]
                table[payload] = table.get(payload, 0) + 1
    if total == 0:
        raise ValueError("census stream is empty")
    return n, total, buckets


def _report_from_buckets(n, total, buckets, kinds, modes) -> CensusReport:
    ordered_kinds = [k for k in KIND_ORDER if k in set(kinds)]
    entries = []
    for kind in ordered_kinds:
        for mode in MODES:
            if mode not in modes:
                continue
            table = buckets[(kind, mode)]
            mates = sum(c for c in table.values() if c >= 2)
            entries.append(CensusEntry(kind, mode, mates, total))
    return CensusReport(n, total, tuple(entries))


def run_census(
    graphs: Iterable[Graph],
    kinds: Sequence[MatrixKind],
    modes: Sequence[str] = MODES,
    jobs: int = 1,
) -> CensusReport:
    """Count graphs with a cospectral/coinvariant mate, per kind and mode."""
    n, total, buckets = bucket_counts(graphs, kinds, modes, jobs)
    return _report_from_buckets(n, total, buckets, kinds, modes)


def tree_census(
    n: int,
    kinds: Sequence[MatrixKind],
    modes: Sequence[str] = MODES,
    jobs: int = 1,
) -> CensusReport:
    """Census over all free trees on n vertices (2 <= n <= 16)."""
    if not 2 <= n <= 16:
        raise ValueError("tree census supports 2 <= n <= 16")
    return run_census(generate_trees(n), kinds, modes, jobs)


def completeness_check(n: int, kind: MatrixKind) -> bool:
    """True iff the complete graph's invariant fingerprint occurs exactly
    once in the full connected-graph corpus on n vertices (n <= 8)."""
    target = fingerprint(complete_graph(n), kind, "invariant").payload
    hits = 0
    for g in generate_connected_graphs(n):
        if fingerprint(g, kind, "invariant").payload == target:
            hits += 1
    return hits == 1


def report_tsv(report: CensusReport) -> str:
    """Render a census as TSV, one row per (kind, mode), spectral first."""
    lines = ["n\tmatrix\tmode\tmate_count\ttotal\tuncertainty_decimal\tuncertainty_rational"]
    for e in report.entries:
        u = e.uncertainty
        lines.append(
            f"{report.n}\t{e.kind.value}\t{e.mode}\t{e.mate_count}\t{e.total}"
            f"\t{float(u):.6f}\t{u.numerator}/{u.denominator}"
        )
    return "\n".join(lines) + "\n"
