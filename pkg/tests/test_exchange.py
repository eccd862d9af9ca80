import pytest

from tubular import exchange, quiver
from tubular.exchange import BoundedSearchError, Seed, explore, flip, initial_cluster
from tubular.roots import compatible, parse_root_index, pairwise_compatible


def R(*texts):
    return tuple(parse_root_index(t) for t in texts)


INITIAL = R("-1:1", "-1:i", "0:1", "0:-j", "inf:i", "inf:j")
# replacement at each initial position, checked against the brute-force scan
REPLACEMENTS = R("1:i", "1:1", "-2:-j", "-2:1", "-1/2:j", "-1/2:i")


@pytest.fixture(scope="module")
def seed():
    return initial_cluster()


@pytest.fixture(scope="module")
def depth2():
    return explore(2)


def test_initial_cluster(seed):
    assert seed.positions == INITIAL
    assert pairwise_compatible(seed.positions)
    assert quiver.iso_quivers(seed.matrix, quiver.BT_SPHERE) is not None
    assert seed.matrix == exchange.gram_exchange_matrix(seed.positions)


def test_gram_unimodular(seed):
    g = exchange.gram_matrix(seed.positions)
    inv = exchange.exact_inverse(g)
    assert all(x.denominator == 1 for row in inv for x in row)


@pytest.mark.parametrize("i", range(1, 7))
def test_flip_replacements(seed, i):
    t = flip(seed, i)
    assert t.positions[i - 1] == REPLACEMENTS[i - 1]
    assert not compatible(seed.positions[i - 1], t.positions[i - 1])
    assert flip(t, i) == seed


@pytest.mark.parametrize("i", range(1, 7))
def test_complements_match_bruteforce(seed, i):
    rest = seed.positions[: i - 1] + seed.positions[i:]
    fast = sorted(exchange.complements(rest, 12))
    slow = sorted(exchange.complements_bruteforce(rest, 12))
    assert fast == slow
    assert len(fast) == 2


def test_flip_bad_position(seed):
    with pytest.raises(ValueError):
        flip(seed, 7)


def test_search_bound_exhausted(seed):
    with pytest.raises(BoundedSearchError):
        flip(seed, 5, search_height=1)


def test_seed_validation():
    with pytest.raises(exchange.InvariantError):
        Seed(INITIAL[:5], quiver.BT_SPHERE)


@pytest.mark.parametrize("depth,nodes,edges", [(0, 1, 0), (1, 7, 6), (2, 34, 36)])
def test_explore_counts(depth, nodes, edges):
    g = explore(depth)
    assert (len(g.seeds), len(g.edges)) == (nodes, edges)


def test_explore_regular_and_maximal(depth2):
    for k, s in enumerate(depth2.seeds):
        if depth2.expanded[k]:
            assert depth2.degree(k) == 6
        assert exchange.is_maximal(s, 32)
        assert pairwise_compatible(s.positions)


def test_json_round_trip(depth2, tmp_path):
    text = exchange.export_graph(depth2, "json", tmp_path / "g.json")
    assert exchange.from_json(text) == depth2
    assert (tmp_path / "g.json").read_text() == text


def test_json_schema_checked():
    with pytest.raises(ValueError):
        exchange.from_json_dict({"schema": "other"})


def test_dot_export(depth2):
    pydot = pytest.importorskip("pydot")
    (g,) = pydot.graph_from_dot_data(exchange.to_dot(depth2))
    assert len(g.get_nodes()) == len(depth2.seeds)
    assert len(g.get_edges()) == len(depth2.edges)


def test_unknown_format(depth2):
    with pytest.raises(ValueError):
        exchange.export_graph(depth2, "yaml")
