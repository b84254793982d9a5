"""Heterogeneous-arc binary-state network: model, file format, arc reduction.

File format (line oriented, `#` starts a comment):

    nodes <n>
    source <id>
    sink <id>
    arc <i> <j> <p_fwd> <p_bwd>

`p_fwd` is the success probability of the direction i->j, `p_bwd` of j->i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .errors import NetworkFileError, NetworkFormatError, NetworkValidationError

HEADERS = ("nodes", "source", "sink")


@dataclass(frozen=True)
class UndirectedArc:
    i: int
    j: int
    p_fwd: float
    p_bwd: float

    @property
    def key(self):
        return (self.i, self.j)

    def prob(self, tail, head):
        """Success probability of the direction tail->head."""
        if (tail, head) == (self.i, self.j):
            return self.p_fwd
        if (tail, head) == (self.j, self.i):
            return self.p_bwd
        raise NetworkValidationError(f"direction {tail}->{head} does not belong to arc {self.key}")


@dataclass(frozen=True)
class Network:
    """Validated network. Arcs are kept in canonical (min, max) lexicographic order;
    that order defines the augmented-vector coordinates."""

    n: int
    source: int
    sink: int
    arcs: tuple[UndirectedArc, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise NetworkValidationError(f"need at least 2 nodes, got {self.n}")
        for name in ("source", "sink"):
            v = getattr(self, name)
            if not 1 <= v <= self.n:
                raise NetworkValidationError(f"{name} {v} outside 1..{self.n}")
        if self.source == self.sink:
            raise NetworkValidationError(f"source and sink are both {self.source}")

        index = {}
        for pos, arc in enumerate(self.arcs):
            if arc.i == arc.j:
                raise NetworkValidationError(f"self-loop at node {arc.i}")
            if arc.i > arc.j:
                raise NetworkValidationError(f"arc {arc.key} is not normalized (need i < j)")
            if not (1 <= arc.i <= self.n and 1 <= arc.j <= self.n):
                raise NetworkValidationError(f"arc {arc.key} has an endpoint outside 1..{self.n}")
            for p in (arc.p_fwd, arc.p_bwd):
                if not 0.0 <= p <= 1.0:
                    raise NetworkValidationError(f"arc {arc.key} probability {p!r} outside [0, 1]")
            if arc.key in index:
                raise NetworkValidationError(f"duplicate arc {arc.key}")
            if pos and self.arcs[pos - 1].key > arc.key:
                raise NetworkValidationError("arcs are not in canonical order")
            index[arc.key] = pos
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(cls, n, source, sink, arcs):
        """Normalize (i, j, p_fwd, p_bwd) tuples so i < j, sort them, and validate."""
        normalized = []
        for i, j, p_fwd, p_bwd in arcs:
            if i > j:
                i, j, p_fwd, p_bwd = j, i, p_bwd, p_fwd
            normalized.append(UndirectedArc(i, j, float(p_fwd), float(p_bwd)))
        normalized.sort(key=lambda a: a.key)
        return cls(n=n, source=source, sink=sink, arcs=tuple(normalized))

    @property
    def arc_count(self):
        return len(self.arcs)

    @property
    def homogeneous(self):
        return all(a.p_fwd == a.p_bwd for a in self.arcs)

    def has_arc(self, i, j):
        return (min(i, j), max(i, j)) in self._index

    def coordinate(self, i, j):
        try:
            return self._index[(min(i, j), max(i, j))]
        except KeyError:
            raise NetworkValidationError(f"no arc between {i} and {j}") from None

    def direction_prob(self, tail, head):
        return self.arcs[self.coordinate(tail, head)].prob(tail, head)

    @cached_property
    def direction_probs(self):
        """Per-bit probabilities for packed augmented vectors: bit 2c is the
        forward direction of coordinate c, bit 2c+1 the backward one."""
        probs = []
        for arc in self.arcs:
            probs.append(arc.p_fwd)
            probs.append(arc.p_bwd)
        return tuple(probs)

    @cached_property
    def _adjacency(self):
        adj = {v: [] for v in range(1, self.n + 1)}
        for arc in self.arcs:
            adj[arc.i].append(arc.j)
            adj[arc.j].append(arc.i)
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    def neighbors(self, v):
        """Adjacent nodes of v in ascending id order."""
        return self._adjacency[v]


@dataclass(frozen=True)
class ReducedNetwork:
    """Network with directions into the source and out of the sink removed.

    `usable[c]` is (forward usable, backward usable) for coordinate c.
    """

    base: Network
    usable: tuple[tuple[bool, bool], ...]

    @property
    def m_star(self):
        return sum(fwd + bwd for fwd, bwd in self.usable)

    def directions(self):
        """Usable directed arcs as (tail, head, probability), forward before backward."""
        out = []
        for arc, (fwd, bwd) in zip(self.base.arcs, self.usable):
            if fwd:
                out.append((arc.i, arc.j, arc.p_fwd))
            if bwd:
                out.append((arc.j, arc.i, arc.p_bwd))
        return out

    def is_usable(self, tail, head):
        c = self.base.coordinate(tail, head)
        fwd, bwd = self.usable[c]
        return fwd if (tail, head) == self.base.arcs[c].key else bwd


def reduce_arcs(net):
    src, snk = net.source, net.sink
    usable = tuple(
        (arc.j != src and arc.i != snk, arc.i != src and arc.j != snk)
        for arc in net.arcs
    )
    return ReducedNetwork(base=net, usable=usable)


def arc_coordinate(net, i, j):
    return net.coordinate(i, j)


def _int_token(token, what, lineno):
    try:
        return int(token)
    except ValueError:
        raise NetworkFormatError(f"{what} must be an integer, got {token!r}", lineno) from None


def _prob_token(token, lineno):
    try:
        return float(token)
    except ValueError:
        raise NetworkFormatError(f"probability must be a decimal literal, got {token!r}", lineno) from None


def parse_network(text):
    """Parse the network file format into a validated Network."""
    headers = {}
    raw_arcs = []
    seen = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0].lower()

        if keyword in HEADERS:
            if len(tokens) != 2:
                raise NetworkFormatError(f"'{keyword}' takes exactly one value", lineno)
            if keyword in headers:
                raise NetworkFormatError(f"'{keyword}' declared twice", lineno)
            if raw_arcs:
                raise NetworkFormatError(f"'{keyword}' must precede the arc lines", lineno)
            headers[keyword] = _int_token(tokens[1], keyword, lineno)
        elif keyword == "arc":
            if len(tokens) != 5:
                raise NetworkFormatError("'arc' takes <i> <j> <p_fwd> <p_bwd>", lineno)
            i = _int_token(tokens[1], "arc endpoint", lineno)
            j = _int_token(tokens[2], "arc endpoint", lineno)
            p_fwd = _prob_token(tokens[3], lineno)
            p_bwd = _prob_token(tokens[4], lineno)
            if i == j:
                raise NetworkValidationError(f"self-loop at node {i}", lineno)
            key = (min(i, j), max(i, j))
            if key in seen:
                raise NetworkValidationError(f"duplicate arc {key} (first declared on line {seen[key]})", lineno)
            seen[key] = lineno
            for p in (p_fwd, p_bwd):
                if not 0.0 <= p <= 1.0:
                    raise NetworkValidationError(f"probability {p!r} outside [0, 1]", lineno)
            raw_arcs.append((lineno, (i, j, p_fwd, p_bwd)))
        else:
            raise NetworkFormatError(f"unknown keyword {tokens[0]!r}", lineno)

    missing = [h for h in HEADERS if h not in headers]
    if missing:
        raise NetworkValidationError(f"missing header: {', '.join(missing)}")

    n = headers["nodes"]
    for lineno, (i, j, _, _) in raw_arcs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise NetworkValidationError(f"arc ({i}, {j}) has an endpoint outside 1..{n}", lineno)

    return Network.build(n, headers["source"], headers["sink"], [a for _, a in raw_arcs])


def format_network(net, comment=None):
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"nodes {net.n}")
    lines.append(f"source {net.source}")
    lines.append(f"sink {net.sink}")
    for arc in net.arcs:
        lines.append(f"arc {arc.i} {arc.j} {arc.p_fwd!r} {arc.p_bwd!r}")
    return "\n".join(lines) + "\n"


def load_network(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise NetworkFileError(path, e.strerror if isinstance(e, OSError) and e.strerror else e) from e
    return parse_network(text)
