"""Skew-symmetric exchange matrices, mutation, and quiver isomorphism.

Matrices are tuples of integer tuples.  Vertices are numbered from 1 in the
public API, matching the usual ``mu_k`` notation; ``B[i][j] = m > 0`` means
``m`` arrows ``i -> j``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal, Sequence

Matrix = tuple[tuple[int, ...], ...]
Order = Literal["rl", "lr"]


class QuiverError(ValueError):
    pass


def from_arrows(n: int, arrows: Iterable[tuple[int, int]]) -> Matrix:
    """Build ``B`` from 1-based arrows ``(i, j)``; repeats add multiplicity."""
    b = [[0] * n for _ in range(n)]
    for i, j in arrows:
        if i == j:
            raise QuiverError("loops are not allowed")
        b[i - 1][j - 1] += 1
        b[j - 1][i - 1] -= 1
    return tuple(tuple(r) for r in b)


def arrows(b: Matrix) -> list[tuple[int, int, int]]:
    """``(i, j, multiplicity)`` for every ``i -> j`` with positive entry."""
    return [(i + 1, j + 1, b[i][j]) for i in range(len(b)) for j in range(len(b)) if b[i][j] > 0]


def is_skew_symmetric(b: Sequence[Sequence[int]]) -> bool:
    n = len(b)
    return all(len(r) == n for r in b) and all(b[i][j] == -b[j][i] for i in range(n) for j in range(n))


def mutate(b: Matrix, k: int) -> Matrix:
    """Fomin-Zelevinsky mutation at the 1-based vertex ``k``."""
    n = len(b)
    if not 1 <= k <= n:
        raise QuiverError(f"vertex {k} out of range 1..{n}")
    k -= 1
    bk = b[k]
    out = []
    for i in range(n):
        bi = b[i]
        bik = bi[k]
        if i == k:
            out.append(tuple(-x for x in bi))
            continue
        row = list(bi)
        row[k] = -bik
        if bik:
            sgn = 1 if bik > 0 else -1
            for j in range(n):
                if j != k and bik * bk[j] > 0:
                    row[j] += sgn * bik * bk[j]
        out.append(tuple(row))
    return tuple(out)


def mutate_seq(b: Matrix, ks: Sequence[int], order: Order = "rl") -> Matrix:
    """Apply a written product ``mu_{k1} ... mu_{km}``.

    With ``order="rl"`` the rightmost mutation acts first, as for a
    composition of maps; ``"lr"`` applies them left to right.
    """
    seq = list(reversed(ks)) if order == "rl" else list(ks)
    for k in seq:
        b = mutate(b, k)
    return b


def permute(b: Matrix, perm: Sequence[int]) -> Matrix:
    """Relabel: vertex ``i`` (0-based) of ``b`` becomes vertex ``perm[i]``."""
    n = len(b)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = b[i][j]
    return tuple(tuple(r) for r in out)


def _vertex_signature(b: Matrix, v: int) -> tuple:
    row = b[v]
    return (sorted(x for x in row if x > 0), sorted(x for x in row if x < 0))


def iso_quivers(b1: Matrix, b2: Matrix) -> tuple[int, ...] | None:
    """A permutation ``perm`` with ``permute(b1, perm) == b2``, or ``None``.

    Backtracking over vertex images, pruned by in/out-degree signatures.
    """
    n = len(b1)
    if len(b2) != n:
        raise QuiverError("size mismatch")
    sig1 = [_vertex_signature(b1, v) for v in range(n)]
    sig2 = [_vertex_signature(b2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    # most constrained vertices first
    order = sorted(range(n), key=lambda v: sum(s == sig1[v] for s in sig1))
    image = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            if all(b1[v][u] == b2[w][image[u]] for u in order[:pos]):
                image[v], used[w] = w, True
                if extend(pos + 1):
                    return True
                image[v], used[w] = -1, False
        return False

    return tuple(image) if extend(0) else None


def _refine(b: Matrix, colors: list[int]) -> list[int]:
    n = len(b)
    while True:
        sigs = [(colors[v], tuple(sorted((b[v][w], colors[w]) for w in range(n) if b[v][w])))
                for v in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_labeling(b: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Canonical form of ``b`` under relabeling, with a labeling reaching it.

    Colour refinement followed by individualisation; among all leaves of the
    search tree the lexicographically least relabeled matrix is kept, which
    makes the result independent of the input labels.
    """
    n = len(b)
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(b, colors)
        if len(set(colors)) == n:
            perm = tuple(colors)
            cand = permute(b, perm)
            if best[0] is None or cand < best[0]:
                best[0], best[1] = cand, perm
            return
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = min((c for c, vs in cells.items() if len(vs) > 1), key=lambda c: (len(cells[c]), c))
        for v in cells[target]:
            # individualise v: it precedes the rest of its cell
            search([2 * c + (0 if (u == v or c != target) else 1) for u, c in enumerate(colors)])

    search(_refine(b, [0] * n))
    return best[0], best[1]


def canonical_form(b: Matrix) -> Matrix:
    return canonical_labeling(b)[0]


@dataclass
class ClassResult:
    forms: set
    finite: bool
    cap: int

    @property
    def size(self) -> int:
        return len(self.forms)


def mutation_class(b: Matrix, cap: int = 100_000) -> ClassResult:
    """Breadth-first search of the mutation class modulo relabeling."""
    start = canonical_form(b)
    seen = {start}
    queue = deque([start])
    n = len(b)
    while queue:
        cur = queue.popleft()
        for k in range(1, n + 1):
            nxt = canonical_form(mutate(cur, k))
            if nxt not in seen:
                if len(seen) >= cap:
                    return ClassResult(seen, False, cap)
                seen.add(nxt)
                queue.append(nxt)
    return ClassResult(seen, True, cap)


def is_mutation_finite(b: Matrix, cap: int = 100_000) -> bool:
    return mutation_class(b, cap).finite


# --------------------------------------------------------------------------
# fixtures

def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in text.split():
        i, j = tok.split(">")
        out.append((int(i), int(j)))
    return out


# Elliptic diagrams.  D4: bottom row 1,2,3, top row 4,5,6, double arrow 5 => 2.
DELTA_D4 = from_arrows(6, _pairs("2>1 6>5 4>5 2>3 5>2 5>2 1>5 2>6 2>4 3>5"))
# E-types: a double arrow Q0 => P0 inside three oriented triangles, with
# pendant arms.
DELTA_E6 = from_arrows(8, _pairs(
    # A=1 B=2 P0=3 P1=4 P2=5 Q0=6 Q1=7 Q2=8
    "7>6 8>7 3>4 4>5 1>2 6>3 6>3 3>2 3>7 2>6 4>6"))
DELTA_E7 = from_arrows(9, _pairs(
    # A=1 P0..P3=2..5 Q0..Q3=6..9
    "7>6 8>7 9>8 2>3 3>4 4>5 6>2 6>2 2>1 2>7 1>6 3>6"))
DELTA_E8 = from_arrows(10, _pairs(
    # A=1 P0..P2=2..4 Q0..Q5=5..10
    "6>5 7>6 8>7 9>8 10>9 2>3 3>4 5>2 5>2 2>1 2>6 1>5 3>5"))

# The 8-arrow Gabriel quiver of the tilting bundle on the (2,2,2,2) line.  As
# a bare quiver it is wild and acyclic, hence mutation-infinite.
GABRIEL_2222 = from_arrows(6, _pairs("1>3 1>4 2>3 2>4 3>5 3>6 4>5 4>6"))
# Its cluster-tilted completion: one extra arrow j -> i per minimal relation
# from i to j (the four length-2 commutativity relations 1,2 ~> 5,6).  This
# equals E^T - E for the Euler matrix and is the exchange matrix of the
# all-plain triangulation.
BT_SPHERE = from_arrows(6, _pairs("1>3 1>4 2>3 2>4 3>5 3>6 4>5 4>6 5>1 5>2 6>1 6>2"))

# Endomorphism quivers of the terminal modules plus the translation arrows.
QHAT_E6 = from_arrows(8, _pairs("1>2 1>3 1>4 2>5 3>5 4>5 5>6 5>7 5>8" " 5>1 6>2 7>3 8>4"))
QHAT_E7 = from_arrows(9, _pairs(
    "1>2 1>3 2>4 2>5 3>5 3>6 4>7 5>7 5>8 6>8 7>9 8>9" " 5>1 7>2 8>3 9>5"))
QHAT_E8 = from_arrows(10, _pairs(
    "1>4 2>4 2>5 3>5 4>6 4>7 5>7 5>8 6>9 7>9 7>10 8>10" " 6>1 7>2 8>3 9>4 10>5"))

FIXTURES: dict[str, Matrix] = {
    "delta_d4": DELTA_D4,
    "delta_e6": DELTA_E6,
    "delta_e7": DELTA_E7,
    "delta_e8": DELTA_E8,
    "bt_sphere": BT_SPHERE,
    "gabriel_2222": GABRIEL_2222,
    "qhat_e6": QHAT_E6,
    "qhat_e7": QHAT_E7,
    "qhat_e8": QHAT_E8,
}

SEQUENCES: dict[str, tuple[str, str, tuple[int, ...]]] = {
    "e6": ("qhat_e6", "delta_e6", (2, 3, 4)),
    "e7": ("qhat_e7", "delta_e7", (5, 2, 8, 1, 9, 5, 7, 3)),
    "e8": ("qhat_e8", "delta_e8", (2, 5, 4, 10, 9, 8, 3, 5, 7, 5, 9, 8, 3, 6, 1)),
}


def pendant_vertices(b: Matrix) -> list[int]:
    """1-based vertices attached to the rest by exactly one single arrow."""
    return [v + 1 for v, row in enumerate(b) if sorted(map(abs, row))[-2:] == [0, 1] and sum(map(abs, row)) == 1]


def iso_up_to_pendants(b1: Matrix, b2: Matrix) -> tuple[int, ...] | None:
    """Iso test after reorienting any subset of pendant arrows of ``b2``.

    Mutation at a pendant vertex only reverses its one arrow, so this is
    isomorphism modulo source/sink reflections at leaves.
    """
    leaves = pendant_vertices(b2)
    for r in range(len(leaves) + 1):
        for subset in itertools.combinations(leaves, r):
            perm = iso_quivers(b1, mutate_seq(b2, subset, "lr"))
            if perm is not None:
                return perm
    return None


@dataclass(frozen=True)
class SequenceCheck:
    name: str
    orders: tuple[str, ...]  # composition orders reaching the target exactly
    orders_up_to_pendants: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return bool(self.orders)


def verify_sequence(name: str) -> SequenceCheck:
    """Mutate ``qhat_*`` along the recorded word and compare with ``delta_*``."""
    src, dst, ks = SEQUENCES[name]
    results = {order: mutate_seq(FIXTURES[src], ks, order) for order in ("rl", "lr")}
    exact = tuple(o for o, m in results.items() if iso_quivers(m, FIXTURES[dst]) is not None)
    loose = tuple(o for o, m in results.items() if iso_up_to_pendants(m, FIXTURES[dst]) is not None)
    return SequenceCheck(name, exact, loose)


# --------------------------------------------------------------------------
# text formats

def dumps(b: Matrix) -> str:
    lines = [f"n={len(b)}"]
    lines += [" ".join(str(x) for x in row) for row in b]
    return "\n".join(lines) + "\n"


def loads(text: str) -> Matrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise QuiverError("quiver file must start with a line 'n=<int>'")
    n = int(lines[0][2:])
    rows = [tuple(int(x) for x in ln.split()) for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise QuiverError(f"expected {n} rows of {n} integers")
    b = tuple(rows)
    if not is_skew_symmetric(b):
        raise QuiverError("matrix is not skew-symmetric")
    return b


def load(path: str | Path) -> Matrix:
    return loads(Path(path).read_text())


def save(b: Matrix, path: str | Path) -> None:
    Path(path).write_text(dumps(b))


def to_dot(b: Matrix, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {i};" for i in range(1, len(b) + 1)]
    for i, j, m in arrows(b):
        label = f' [label="{m}"]' if m > 1 else ""
        lines.append(f"  {i} -> {j}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"

