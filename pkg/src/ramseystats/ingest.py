"""Turn raw datasets into two-colored complete graphs.

Three routes in:
  * categorical vote records -> Hamming distance matrix -> threshold
    colorings (red at or below the threshold, blue above), swept over a
    threshold range with optional party subgroups;
  * directed weighted trade flows -> blue edges to each country's top-k
    import and export partners, red elsewhere;
  * a seeded random coloring for simulation baselines.

Parsing is strict: wrong field counts and unknown tokens fail with the
offending line number rather than being papered over.
"""

from __future__ import annotations

import csv
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .bounds import GoodmanBound, goodman_fraction
from .census import (
    TriangleCensus,
    TransitivityReport,
    transitivity_from_census,
    triangle_census,
)
from .coloring import TwoColoring, from_blue_edges
from .errors import InputError, ParseError

UCI_FORMAT = "uci-house-votes-84"
GENERIC_FORMAT = "generic-csv"

_UCI_FIELDS = 17
_VOTE_TOKENS = {"y": "Y", "n": "N", "?": "A", "a": "A"}
_PARTIES = {"republican": "R", "democrat": "D"}


@dataclass(frozen=True)
class VoterRecord:
    """One categorical record: an id, a party token, and a vote string
    over the alphabet {Y, N, A} (yea, nay, anything else)."""

    id: str
    party: str
    votes: str

    def __post_init__(self):
        bad = set(self.votes) - {"Y", "N", "A"}
        if bad:
            raise InputError(f"vote string may only contain Y/N/A, got {sorted(bad)}")


@dataclass(frozen=True)
class TradeFlow:
    """One directed flow: exporter ships `volume` worth to importer."""

    exporter: str
    importer: str
    volume: float

    def __post_init__(self):
        if not self.exporter or not self.importer:
            raise InputError("country labels must be non-empty")
        if self.exporter == self.importer:
            raise InputError(f"self-flow for {self.exporter!r}")
        if not math.isfinite(self.volume) or self.volume < 0:
            raise InputError(f"volume must be finite and >= 0, got {self.volume}")


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric nonnegative integer distances with a zero diagonal."""

    n: int
    d: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __init__(self, d, labels=None):
        rows = tuple(tuple(row) for row in d)
        object.__setattr__(self, "n", len(rows))
        object.__setattr__(self, "d", rows)
        object.__setattr__(
            self, "labels", tuple(labels) if labels is not None else None
        )
        for i, row in enumerate(rows):
            if len(row) != self.n:
                raise InputError(f"row {i} has {len(row)} entries, expected {self.n}")
            if row[i] != 0:
                raise InputError(f"diagonal entry ({i},{i}) must be 0")
            for j in range(i):
                if not isinstance(row[j], int) or row[j] < 0:
                    raise InputError(f"entry ({i},{j}) must be a nonnegative integer")
                if row[j] != rows[j][i]:
                    raise InputError(f"matrix not symmetric at ({i},{j})")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError(f"{len(self.labels)} labels for {self.n} rows")

    def submatrix(self, indices: Sequence[int]) -> "DistanceMatrix":
        """Induced distance matrix on the given distinct vertex indices."""
        idx = list(indices)
        if not idx:
            raise InputError("submatrix needs at least one index")
        if len(set(idx)) != len(idx):
            raise InputError("submatrix indices must be distinct")
        for v in idx:
            if not 0 <= v < self.n:
                raise InputError(f"index {v} out of range for n={self.n}")
        rows = [[self.d[i][j] for j in idx] for i in idx]
        labels = None if self.labels is None else [self.labels[i] for i in idx]
        return DistanceMatrix(rows, labels=labels)


def parse_votes(lines: Iterable[str], fmt: str = UCI_FORMAT) -> list[VoterRecord]:
    """Parse vote records from CSV lines.

    The house-votes format has 17 comma-separated fields per line: a
    party name followed by 16 vote tokens in {y, n, ?}. Tokens
    normalize to Y/N/A and parties to R/D (anything else is kept
    verbatim); ids are 1-based line ordinals. The generic format reads
    a header instead: an optional `id` column, a required `party`
    column, and one column per vote position.
    """
    if fmt == UCI_FORMAT:
        return _parse_uci(lines)
    if fmt == GENERIC_FORMAT:
        return _parse_generic(lines)
    raise InputError(f"unknown votes format {fmt!r}")


def _normalize_votes(tokens: Sequence[str], lineno: int) -> str:
    out = []
    for tok in tokens:
        ch = _VOTE_TOKENS.get(tok.strip().lower())
        if ch is None:
            raise ParseError(f"unknown vote token {tok.strip()!r}", line=lineno)
        out.append(ch)
    return "".join(out)


def _parse_uci(lines: Iterable[str]) -> list[VoterRecord]:
    records = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != _UCI_FIELDS:
            raise ParseError(
                f"expected {_UCI_FIELDS} fields, got {len(fields)}", line=lineno
            )
        party_tok = fields[0].strip()
        party = _PARTIES.get(party_tok.lower(), party_tok)
        records.append(
            VoterRecord(
                id=str(lineno),
                party=party,
                votes=_normalize_votes(fields[1:], lineno),
            )
        )
    return records


def _parse_generic(lines: Iterable[str]) -> list[VoterRecord]:
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        return []
    cols = [h.strip().lower() for h in header]
    if "party" not in cols:
        raise ParseError("header must declare a 'party' column", line=1)
    party_at = cols.index("party")
    id_at = cols.index("id") if "id" in cols else None
    vote_at = [i for i in range(len(cols)) if i not in (party_at, id_at)]
    if not vote_at:
        raise ParseError("header declares no vote columns", line=1)
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(cols):
            raise ParseError(
                f"expected {len(cols)} fields, got {len(row)}", line=lineno
            )
        party_tok = row[party_at].strip()
        records.append(
            VoterRecord(
                id=row[id_at].strip() if id_at is not None else str(lineno - 1),
                party=_PARTIES.get(party_tok.lower(), party_tok),
                votes=_normalize_votes([row[i] for i in vote_at], lineno),
            )
        )
    return records


def party_indices(records: Sequence[VoterRecord], party: str) -> list[int]:
    """Vertex indices of the records carrying exactly this party token."""
    return [i for i, r in enumerate(records) if r.party == party]


def hamming_matrix(records: Sequence[VoterRecord]) -> DistanceMatrix:
    """Pairwise count of differing vote positions.

    A is an ordinary third symbol: it matches only another A. Each
    record becomes three bitmasks (positions voting Y, N, A), and the
    distance is the string length minus the agreeing positions.
    """
    n = len(records)
    if n == 0:
        return DistanceMatrix(())
    length = len(records[0].votes)
    masks = []
    for r in records:
        if len(r.votes) != length:
            raise InputError(
                f"record {r.id!r} has length {len(r.votes)}, expected {length}"
            )
        y = nay = a = 0
        for pos, ch in enumerate(r.votes):
            bit = 1 << pos
            if ch == "Y":
                y |= bit
            elif ch == "N":
                nay |= bit
            else:
                a |= bit
        masks.append((y, nay, a))
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        yi, ni, ai = masks[i]
        for j in range(i + 1, n):
            yj, nj, aj = masks[j]
            same = (yi & yj).bit_count() + (ni & nj).bit_count() + (ai & aj).bit_count()
            d[i][j] = d[j][i] = length - same
    return DistanceMatrix(d, labels=[r.id for r in records])


def threshold_coloring(d: DistanceMatrix, t: int) -> TwoColoring:
    """Color edges red at distance <= t, blue at distance > t."""
    if t < 0:
        raise InputError(f"threshold must be >= 0, got {t}")
    rows = []
    for i in range(d.n):
        di = d.d[i]
        row = 0
        for j in range(d.n):
            if j != i and di[j] > t:
                row |= 1 << j
        rows.append(row)
    return TwoColoring(n=d.n, blue_rows=tuple(rows), labels=d.labels)


@dataclass(frozen=True)
class SweepRow:
    """Census of one threshold graph in a sweep."""

    t: int
    census: TriangleCensus
    transitivity: TransitivityReport

    @property
    def mono_fraction(self) -> Fraction:
        return self.census.mono_fraction

    @property
    def red_fraction(self) -> Fraction:
        return Fraction(self.census.red_triangles, self.census.total)

    @property
    def blue_fraction(self) -> Fraction:
        return Fraction(self.census.blue_triangles, self.census.total)

    @property
    def completion_ratio(self) -> Fraction:
        return self.transitivity.completion_ratio


@dataclass(frozen=True)
class SweepTable:
    """Sweep rows ordered by threshold plus the floor they sit above."""

    n: int
    rows: tuple[SweepRow, ...]
    goodman: GoodmanBound


def sweep(
    d: DistanceMatrix,
    t_range: tuple[int, int],
    subgroup: Sequence[int] | None = None,
    threads: int = 1,
) -> SweepTable:
    """Census every threshold graph for t in the inclusive range.

    With a subgroup, the distance matrix is first restricted to those
    indices. Thresholds are independent, so they may be evaluated in
    parallel; rows always come back ordered by t.
    """
    t_min, t_max = t_range
    if t_min > t_max:
        raise InputError(f"empty threshold range [{t_min}, {t_max}]")
    if subgroup is not None:
        if len(subgroup) == 0:
            raise InputError("subgroup must not be empty")
        d = d.submatrix(subgroup)

    def row_at(t: int) -> SweepRow:
        census = triangle_census(threshold_coloring(d, t))
        return SweepRow(
            t=t, census=census, transitivity=transitivity_from_census(census)
        )

    ts = range(t_min, t_max + 1)
    if threads > 1 and len(ts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = tuple(pool.map(row_at, ts))
    else:
        rows = tuple(row_at(t) for t in ts)
    return SweepTable(n=d.n, rows=rows, goodman=goodman_fraction(d.n))


def parse_trade_flows(lines: Iterable[str]) -> list[TradeFlow]:
    """Read directed flows from CSV with header exporter,importer,volume."""
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        return []
    if [h.strip().lower() for h in header] != ["exporter", "importer", "volume"]:
        raise ParseError("expected header 'exporter,importer,volume'", line=1)
    flows = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise ParseError(f"expected 3 fields, got {len(row)}", line=lineno)
        try:
            volume = float(row[2])
        except ValueError:
            raise ParseError(f"bad volume {row[2].strip()!r}", line=lineno) from None
        try:
            flows.append(TradeFlow(row[0].strip(), row[1].strip(), volume))
        except InputError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return flows


def build_trade_graph(flows: Sequence[TradeFlow], k: int) -> TwoColoring:
    """Blue edges to each country's top-k partners, red everywhere else.

    Duplicate (exporter, importer) rows are summed before ranking.
    Import and export rankings are separate, ties break alphabetically,
    and a country with fewer than k partners keeps them all. The blue
    set is the union over countries, so a popular country's blue degree
    can far exceed 2k. Vertices are the alphabetically sorted labels.
    """
    if k < 1:
        raise InputError(f"partner count must be >= 1, got {k}")
    if not flows:
        raise InputError("no flows supplied")
    volume: dict[tuple[str, str], float] = {}
    for f in flows:
        pair = (f.exporter, f.importer)
        volume[pair] = volume.get(pair, 0.0) + f.volume
    outgoing: dict[str, list[tuple[float, str]]] = {}
    incoming: dict[str, list[tuple[float, str]]] = {}
    for (exp, imp), v in volume.items():
        outgoing.setdefault(exp, []).append((v, imp))
        incoming.setdefault(imp, []).append((v, exp))
    countries = sorted({c for pair in volume for c in pair})
    index = {c: i for i, c in enumerate(countries)}
    edges = set()
    for c in countries:
        for partner_list in (outgoing.get(c, []), incoming.get(c, [])):
            ranked = sorted(partner_list, key=lambda p: (-p[0], p[1]))
            for _, partner in ranked[:k]:
                a, b = index[c], index[partner]
                edges.add((min(a, b), max(a, b)))
    return from_blue_edges(len(countries), sorted(edges), labels=countries)


def random_coloring(n: int, t: float, seed: int) -> TwoColoring:
    """Each unordered pair independently blue with probability t.

    Randomness comes from CPython's Mersenne Twister (random.Random)
    seeded as given, drawing once per pair in ascending (i, j) order,
    so a seed pins the exact coloring on every platform.
    """
    if n < 1:
        raise InputError(f"vertex count must be >= 1, got {n}")
    if not 0 <= t <= 1:
        raise InputError(f"blue probability must be in [0, 1], got {t}")
    rng = random.Random(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < t:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return TwoColoring(n=n, blue_rows=tuple(rows))
