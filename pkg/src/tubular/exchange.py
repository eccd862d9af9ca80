"""Clusters of real Schur roots, flips, and bounded exchange-graph search.

A cluster is a set of six pairwise compatible roots.  A seed orders the
cluster and carries a 6x6 exchange matrix; flipping at a position swaps that
root for its unique other complement and mutates the matrix there.

Every cluster is the class of a tilting object, so the Gram matrix ``G`` of
the Euler form on its six vectors is unimodular.  The exchange matrix read
off from it is ``G^{-1} - G^{-T}``, the antisymmetrised Euler form in the dual
basis; :func:`gram_exchange_matrix` computes it and exploration checks it
against mutation on every flip.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Sequence

from . import quiver
from .lattice import euler, exact_inverse
from .quiver import Matrix
from .roots import (
    H,
    RootIndex,
    compatible,
    enumerate_schur,
    pairwise_compatible,
    parse_root_index,
    vector_of,
)
from .slopes import INF, MINUS_ONE, ONE, ZERO, Slope, normalize

DEFAULT_SEARCH_HEIGHT = 64
RANK = 6
JSON_SCHEMA = "tubular.exchange-graph/1"


class BoundedSearchError(RuntimeError):
    """No complement was found within the current height bound."""


class InvariantError(AssertionError):
    """A structural property that must hold was violated."""


Cluster = tuple[RootIndex, ...]


@dataclass(frozen=True)
class Seed:
    positions: tuple[RootIndex, ...]
    matrix: Matrix

    def __post_init__(self) -> None:
        if len(self.positions) != RANK or len(set(self.positions)) != RANK:
            raise InvariantError("a seed needs six distinct roots")
        if not quiver.is_skew_symmetric(self.matrix) or len(self.matrix) != RANK:
            raise InvariantError("seed matrix must be a skew-symmetric 6x6 matrix")

    @property
    def cluster(self) -> Cluster:
        return tuple(sorted(self.positions))

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.positions)


def aligned(s: Seed, t: Seed) -> bool:
    """Whether two seeds on the same cluster have matching matrices."""
    if s.cluster != t.cluster:
        return False
    where = {r: k for k, r in enumerate(t.positions)}
    perm = [where[r] for r in s.positions]
    return quiver.permute(s.matrix, perm) == t.matrix


def gram_matrix(roots: Sequence[RootIndex]) -> list[list[int]]:
    vs = [vector_of(r) for r in roots]
    return [[euler(a, b) for b in vs] for a in vs]


def gram_exchange_matrix(roots: Sequence[RootIndex]) -> Matrix:
    inv = exact_inverse(gram_matrix(roots))
    out = []
    for i in range(len(roots)):
        row = []
        for j in range(len(roots)):
            x = inv[i][j] - inv[j][i]
            if x.denominator != 1:
                raise InvariantError("Gram matrix of a cluster is not unimodular")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


_INITIAL_SLOPES = (MINUS_ONE, ZERO, ONE, INF)


def initial_cluster() -> Seed:
    """Lexicographically first compatible 6-set among the 32 low roots.

    The matrix is ``bt_sphere`` relabeled onto the cluster's positions; the
    labeling is the one making it agree with the Gram-derived matrix.
    """
    pool = sorted(r for r in enumerate_schur(2) if r.q in _INITIAL_SLOPES)
    roots = next(c for c in itertools.combinations(pool, RANK) if pairwise_compatible(c))
    target = gram_exchange_matrix(roots)
    perm = quiver.iso_quivers(quiver.BT_SPHERE, target)
    if perm is None:
        raise InvariantError("initial cluster matrix is not in the bt_sphere pattern")
    return Seed(tuple(roots), quiver.permute(quiver.BT_SPHERE, perm))


def _solve(p1: Slope, p2: Slope, s1: int, s2: int) -> Slope | None:
    # a*b_k - b*a_k = s_k for k = 1, 2
    det = p1.a * p2.b - p2.a * p1.b
    a = Fraction(s1 * p2.a - s2 * p1.a, -det)
    b = Fraction(s1 * p2.b - s2 * p1.b, -det)
    if a.denominator != 1 or b.denominator != 1 or (a == 0 and b == 0):
        return None
    a, b = int(a), int(b)
    if gcd(a, b) != 1:
        return None
    return normalize(a, b)


def candidate_slopes(slopes: Sequence[Slope]) -> set[Slope]:
    """Slopes that may carry a root compatible with roots of all ``slopes``.

    A root of slope ``q`` compatible with one of slope ``p != q`` has
    ``dist(p, q)`` in ``{1, 2}``; two distinct slopes pin ``q`` by a 2x2
    linear system.
    """
    distinct = sorted(set(slopes))
    if len(distinct) < 2:
        raise BoundedSearchError("need two distinct slopes to bound the complement search")
    p1, p2 = distinct[0], distinct[1]
    out = set(distinct)
    for s1, s2 in itertools.product(range(-2, 3), repeat=2):
        q = _solve(p1, p2, s1, s2)
        if q is not None:
            out.add(q)
    return out


def complements(rest: Sequence[RootIndex], search_height: int) -> list[RootIndex]:
    """All roots of height at most ``search_height`` compatible with ``rest``."""
    out = []
    for q in sorted(candidate_slopes([r.q for r in rest])):
        if q.height > search_height:
            continue
        for x in H:
            r = RootIndex(q, x)
            if r not in rest and all(compatible(r, s) for s in rest):
                out.append(r)
    return out


def complements_bruteforce(rest: Sequence[RootIndex], search_height: int) -> list[RootIndex]:
    """Reference scan over every root up to the height bound."""
    return [r for r in enumerate_schur(search_height)
            if r not in rest and all(compatible(r, s) for s in rest)]


def flip(s: Seed, i: int, search_height: int = DEFAULT_SEARCH_HEIGHT) -> Seed:
    """Exchange the root at 1-based position ``i``."""
    if not 1 <= i <= RANK:
        raise ValueError(f"position {i} out of range 1..{RANK}")
    old = s.positions[i - 1]
    rest = s.positions[: i - 1] + s.positions[i:]
    others = [r for r in complements(rest, search_height) if r != old]
    if not others:
        raise BoundedSearchError(
            f"no second complement for position {i} of [{s}] within height {search_height}")
    if len(others) > 1:
        raise InvariantError(f"more than two complements for position {i} of [{s}]")
    new = others[0]
    if compatible(old, new):
        raise InvariantError(f"exchanged roots {old} and {new} are compatible")
    positions = rest[: i - 1] + (new,) + rest[i - 1:]
    return Seed(positions, quiver.mutate(s.matrix, i))


def is_maximal(s: Seed, search_height: int) -> bool:
    return not [r for r in complements(s.positions, search_height) if r not in s.positions]


# --------------------------------------------------------------------------
# exploration

@dataclass(frozen=True, order=True)
class Edge:
    source: int
    target: int
    position: int  # position flipped in the source seed
    removed: RootIndex
    added: RootIndex


@dataclass
class GraphFragment:
    seeds: list[Seed] = field(default_factory=list)
    depths: list[int] = field(default_factory=list)
    expanded: list[bool] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    depth: int = 0
    search_height: int = DEFAULT_SEARCH_HEIGHT
    revisits: int = 0

    def degree(self, node: int) -> int:
        return sum(node in (e.source, e.target) for e in self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphFragment):
            return NotImplemented
        return to_json_dict(self) == to_json_dict(other)


def explore(depth: int, search_height: int = DEFAULT_SEARCH_HEIGHT,
            check_involution: bool = True, check_gram: bool = True) -> GraphFragment:
    """Breadth-first exchange graph around the initial seed.

    Nodes are root sets; on every revisit the stored seed and the incoming
    one must agree up to relabeling.  With ``check_involution`` each flip is
    also undone and compared; with ``check_gram`` each matrix is compared
    with the one read off the Euler form.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    g = GraphFragment(depth=depth, search_height=search_height)
    index: dict[Cluster, int] = {}

    def add(seed: Seed, d: int) -> int:
        if check_gram and not aligned(seed, Seed(seed.positions, gram_exchange_matrix(seed.positions))):
            raise InvariantError(f"matrix of [{seed}] disagrees with its Euler form")
        if max(abs(x) for row in seed.matrix for x in row) > 2:
            raise InvariantError(f"matrix entry above 2 at [{seed}]")
        index[seed.cluster] = len(g.seeds)
        g.seeds.append(seed)
        g.depths.append(d)
        g.expanded.append(False)
        return index[seed.cluster]

    add(initial_cluster(), 0)
    queue = deque([0])
    seen_edges: set[frozenset] = set()
    while queue:
        node = queue.popleft()
        if g.depths[node] >= depth:
            continue
        seed = g.seeds[node]
        for i in range(1, RANK + 1):
            nxt = flip(seed, i, search_height)
            if check_involution and flip(nxt, i, search_height) != seed:
                raise InvariantError(f"flip at {i} of [{seed}] is not an involution")
            key = nxt.cluster
            if key in index:
                other = index[key]
                g.revisits += 1
                if not aligned(nxt, g.seeds[other]):
                    raise InvariantError(f"inconsistent matrices on revisiting [{g.seeds[other]}]")
            else:
                other = add(nxt, g.depths[node] + 1)
                queue.append(other)
            pair = frozenset((node, other))
            if pair not in seen_edges:
                seen_edges.add(pair)
                g.edges.append(Edge(node, other, i, seed.positions[i - 1], nxt.positions[i - 1]))
        g.expanded[node] = True
    return g


# --------------------------------------------------------------------------
# export

def to_json_dict(g: GraphFragment) -> dict:
    return {
        "schema": JSON_SCHEMA,
        "depth": g.depth,
        "search_height": g.search_height,
        "nodes": [
            {
                "id": k,
                "roots": [str(r) for r in s.positions],
                "matrix": [list(row) for row in s.matrix],
                "depth": g.depths[k],
                "expanded": g.expanded[k],
            }
            for k, s in enumerate(g.seeds)
        ],
        "edges": [
            {"source": e.source, "target": e.target, "position": e.position,
             "removed": str(e.removed), "added": str(e.added)}
            for e in g.edges
        ],
    }


def from_json_dict(doc: dict) -> GraphFragment:
    if doc.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    g = GraphFragment(depth=doc["depth"], search_height=doc["search_height"])
    for node in doc["nodes"]:
        roots = tuple(parse_root_index(r) for r in node["roots"])
        g.seeds.append(Seed(roots, tuple(tuple(row) for row in node["matrix"])))
        g.depths.append(node["depth"])
        g.expanded.append(node["expanded"])
    g.edges = [Edge(e["source"], e["target"], e["position"],
                    parse_root_index(e["removed"]), parse_root_index(e["added"]))
               for e in doc["edges"]]
    return g


def to_json(g: GraphFragment) -> str:
    return json.dumps(to_json_dict(g), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> GraphFragment:
    return from_json_dict(json.loads(text))


def to_dot(g: GraphFragment) -> str:
    lines = ["graph exchange {"]
    for k, s in enumerate(g.seeds):
        label = ",".join(str(r) for r in s.cluster)
        lines.append(f'  n{k} [label="{label}"];')
    for e in g.edges:
        lines.append(f'  n{e.source} -- n{e.target} [label="{e.removed} / {e.added}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(g: GraphFragment, fmt: str, path: str | Path | None = None) -> str:
    if fmt == "json":
        text = to_json(g)
    elif fmt == "dot":
        text = to_dot(g)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        Path(path).write_text(text)
    return text
