"""The ten acceptance criteria as callable checks.

Each check returns a :class:`Criterion` with a verdict and a short detail
string.  Bounds live in :class:`AcceptanceConfig`; the defaults are the
pinned ones.  Shared by ``tests/test_acceptance.py`` and ``tubular selftest``.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from . import arcs, exchange, lattice, quiver, roots, slopes
from .lattice import H0, HINF, euler
from .roots import H, basic_vector
from .slopes import BASE_SLOPES, SlopeType, UnfoldStep

# D4 elliptic class size, frozen from the first closed BFS run.
D4_CLASS_SIZE = 4

EULER_REFERENCE = (
    (1, 0, -1, -1, 1, 1),
    (0, 1, -1, -1, 1, 1),
    (0, 0, 1, 0, -1, -1),
    (0, 0, 0, 1, -1, -1),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 1),
)


@dataclass(frozen=True)
class AcceptanceConfig:
    parametrization_height: int = 20
    box_radius: int = 4
    compat_height: int = 10
    crossing_complexity: int = 13
    connectivity_complexity: int = 25
    unfold_height: int = 40
    class_cap: int = 100_000
    explore_depth: int = 3
    search_height: int = exchange.DEFAULT_SEARCH_HEIGHT


@dataclass
class Criterion:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] #{self.number} {self.title}: {self.detail} ({self.seconds:.1f}s)"


def euler_anchors(cfg: AcceptanceConfig) -> tuple[bool, str]:
    a, b = euler(H0, HINF), euler(HINF, H0)
    ok = a == 2 and b == -2 and lattice.EULER_MATRIX == EULER_REFERENCE
    return ok, f"<h0,hinf>={a}, <hinf,h0>={b}, matrix match={lattice.EULER_MATRIX == EULER_REFERENCE}"


def coset_pairings(cfg: AcceptanceConfig) -> tuple[bool, str]:
    Z, O, I = SlopeType.ZERO, SlopeType.ONE, SlopeType.INF
    good1 = total1 = 0
    for x in H:
        for h in H:
            want = 1 if h.positive else 0
            hx = h * x
            for val in (
                euler(basic_vector(Z, x), basic_vector(O, hx)),
                euler(basic_vector(O, x), basic_vector(I, hx)),
                euler(basic_vector(Z, -hx), basic_vector(I, x)),
            ):
                total1 += 1
                good1 += val == want
    good2 = total2 = 0
    for x in H:
        for val in (
            euler(basic_vector(Z, x), HINF),
            euler(basic_vector(O, x), HINF),
            euler(H0, basic_vector(O, x)),
            euler(H0, basic_vector(I, x)),
        ):
            total2 += 1
            good2 += val == 1
    ok = (good1, total1, good2, total2) == (192, 192, 32, 32)
    return ok, f"coset pairings {good1}/{total1}, unit pairings {good2}/{total2}"


def parametrization(cfg: AcceptanceConfig) -> tuple[bool, str]:
    qs = slopes.slopes_up_to_height(cfg.parametrization_height)
    bad = 0
    for q in qs:
        vs = set()
        hq = roots.h_vector(q)
        for x in H:
            v = roots.root_vector(q, x)
            vs.add(v)
            ok = (lattice.slope_of(v) == q
                  and lattice.add(v, roots.root_vector(q, -x)) == hq
                  and roots.recognize(v) == roots.RootIndex(q, x))
            bad += not ok
        bad += len(vs) != 8
    return bad == 0, f"{len(qs)} slopes x 8 units, {bad} failures"


def schur_box(cfg: AcceptanceConfig) -> tuple[bool, str]:
    r = cfg.box_radius
    box = itertools.product(range(-r, r + 1), repeat=6)
    recognized, oracle = set(), set()
    for v in box:
        if roots.recognize(v) is not None:
            recognized.add(v)
        if lattice.is_positive(v) and euler(v, v) == 1 and roots.is_real_schur(v):
            oracle.add(v)
    ok = recognized == oracle
    return ok, f"{(2 * r + 1) ** 6} vectors, recognized {len(recognized)}, oracle {len(oracle)}, equal={ok}"


def compat_agreement(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rs = roots.enumerate_schur(cfg.compat_height)
    disagree = prop_bad = 0
    for a in rs:
        for b in rs:
            c1 = roots.compatible(a, b)
            if not (c1 == roots.compatible_table(a, b) == roots.compatible_vectors(a, b)):
                disagree += 1
            va, vb = roots.vector_of(a), roots.vector_of(b)
            if euler(va, vb) == 0 and euler(vb, va) == 0 and not (a.q == b.q and b.x not in (a.x, -a.x)):
                prop_bad += 1
    ok = disagree == 0 and prop_bad == 0
    return ok, f"{len(rs) ** 2} pairs, {disagree} disagreements, {prop_bad} two-sided-orthogonality violations"


def bijection(cfg: AcceptanceConfig) -> tuple[bool, str]:
    rs = roots.enumerate_schur(cfg.compat_height)
    tagged = [arcs.from_root(r) for r in rs]
    bad = sum(arcs.to_root(a) != r for a, r in zip(tagged, rs))
    bad += sum(arcs.arcs_compatible(a, b) != roots.compatible(arcs.to_root(a), arcs.to_root(b))
               for a in tagged for b in tagged)
    return bad == 0, f"{len(rs) ** 2} pairs, {bad} mismatches"


def geometry(cfg: AcceptanceConfig) -> tuple[bool, str]:
    base = {(t, s): arcs.render(t, s) for t in BASE_SLOPES for s in arcs.Sign}
    mism = checked = 0
    for p in slopes.slopes_up_to_complexity(cfg.crossing_complexity):
        for e in arcs.Sign:
            d = arcs.render(p, e)
            for (t, f), b in base.items():
                checked += 1
                mism += arcs.crossings(d, b) != arcs.intersection_number(p, e, t, f)
    broken = drawn = 0
    for p in slopes.slopes_up_to_complexity(cfg.connectivity_complexity):
        for e in arcs.Sign:
            drawn += 1
            try:
                d = arcs.render(p, e)
                ok = d.ends == arcs.endpoints(p, e) and arcs.is_simple(d)
            except arcs.ArcError:
                ok = False
            broken += not ok
    return mism == 0 and broken == 0, f"{checked} crossing counts ({mism} off), {drawn} drawings ({broken} broken)"


def unfolding(cfg: AcceptanceConfig) -> tuple[bool, str]:
    qs = slopes.slopes_up_to_height(cfg.unfold_height)
    bad = 0
    images = {f: [slopes.unfold(p, f) for p in qs] for f in UnfoldStep}
    for f, img in images.items():
        for p, fp in zip(qs, img):
            bad += slopes.unfold(fp, f) != p
            bad += slopes.arc_type(fp) != slopes.arc_type(p)
        pairs = list(zip(qs, img))
        for p, fp in pairs:
            for q, fq in pairs:
                if slopes.dist(fp, fq) != slopes.dist(p, q):
                    bad += 1
    for p in qs:
        step = slopes.dictated_step(p)
        if step is not None and slopes.complexity(slopes.unfold(p, step)) >= slopes.complexity(p):
            bad += 1
        base, steps = slopes.reduce(p)
        bad += base != slopes.arc_type(p) or slopes.replay(base, steps) != p
    return bad == 0, f"{len(qs)} slopes, 3 maps, {bad} failures"


def quiver_sequences(cfg: AcceptanceConfig) -> tuple[bool, str, list[str]]:
    notes, summary = [], []
    seq_ok = True
    for name in ("e6", "e7", "e8"):
        chk = quiver.verify_sequence(name)
        seq_ok &= chk.ok
        exact = ",".join(chk.orders) or "none"
        loose = ",".join(chk.orders_up_to_pendants) or "none"
        summary.append(f"{name} order={exact}")
        notes.append(f"{name}: exact orders={exact}; up to pendant reorientation={loose}")
    cls = quiver.mutation_class(quiver.DELTA_D4, cfg.class_cap)
    has_bt = quiver.canonical_form(quiver.BT_SPHERE) in cls.forms
    bounded = all(abs(x) <= 2 for f in cls.forms for row in f for x in row)
    class_ok = cls.finite and has_bt and bounded and cls.size == D4_CLASS_SIZE
    notes.append(f"d4 class: closed={cls.finite}, size={cls.size}, contains bt_sphere={has_bt}, "
                 f"|entries|<=2={bounded}")
    summary.append(f"d4 class size={cls.size}")
    return seq_ok and class_ok, ", ".join(summary), notes


def exchange_graph(cfg: AcceptanceConfig) -> tuple[bool, str]:
    try:
        g = exchange.explore(cfg.explore_depth, cfg.search_height)
    except (exchange.BoundedSearchError, exchange.InvariantError) as exc:
        return False, f"{type(exc).__name__}: {exc}"
    regular = all(g.degree(k) == 6 for k in range(len(g.seeds)) if g.expanded[k])
    maximal = all(exchange.is_maximal(s, cfg.search_height) for s in g.seeds)
    ok = regular and maximal
    return ok, (f"{len(g.seeds)} nodes, {len(g.edges)} edges, {g.revisits} consistent revisits, "
                f"6-regular={regular}, maximal={maximal}")


CHECKS: list[tuple[int, str, Callable]] = [
    (1, "Euler-form anchors", euler_anchors),
    (2, "coset-pairing identities", coset_pairings),
    (3, "root parametrization", parametrization),
    (4, "Schur-criterion box oracle", schur_box),
    (5, "compatibility triple agreement", compat_agreement),
    (6, "arc/root bijection", bijection),
    (7, "geometry oracle", geometry),
    (8, "unfolding maps", unfolding),
    (9, "quiver sequences and D4 class", quiver_sequences),
    (10, "exchange graph depth 3", exchange_graph),
]


def run_one(number: int, cfg: AcceptanceConfig | None = None) -> Criterion:
    cfg = cfg or AcceptanceConfig()
    _, title, fn = CHECKS[number - 1]
    t = time.perf_counter()
    out = fn(cfg)
    notes = list(out[2]) if len(out) > 2 else []
    return Criterion(number, title, bool(out[0]), out[1], time.perf_counter() - t, notes)


def run_all(cfg: AcceptanceConfig | None = None, echo: Callable[[str], None] | None = None) -> list[Criterion]:
    results = []
    for number, _, _ in CHECKS:
        c = run_one(number, cfg)
        if echo:
            echo(c.line())
            for n in c.notes:
                echo(f"       {n}")
        results.append(c)
    return results
