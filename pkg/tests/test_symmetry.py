import networkx as nx
import pytest
from conftest import RANDOM_ORDERS, automorphism_count, to_nx

from snarkforge import (
    GenSpec,
    are_isomorphic,
    canonical_form,
    from_graph6,
    generate,
    relabel,
)


@pytest.mark.parametrize(
    "name, order", [("k4", 24), ("k33", 72), ("prism", 12), ("petersen", 120), ("two_k4", 1152)]
)
def test_automorphism_orders(name, order, request):
    g = request.getfixturevalue(name)
    assert canonical_form(g).automorphism_order == order


def test_key_is_a_relabeling(petersen):
    key = canonical_form(petersen).key
    assert nx.is_isomorphic(to_nx(petersen), to_nx(from_graph6(key)))


def test_key_ignores_labels(petersen, k4_pair, rng):
    for g in (petersen, k4_pair):
        key = canonical_form(g).key
        for _ in range(10):
            assert canonical_form(relabel(g, rng.permutation(g.n))).key == key


def test_are_isomorphic(k33, prism, k4, rng):
    assert not are_isomorphic(k33, prism)
    assert not are_isomorphic(k4, prism)
    assert are_isomorphic(prism, relabel(prism, rng.permutation(6)))


@pytest.mark.parametrize("n", RANDOM_ORDERS)
def test_against_networkx(n, random_cubic, rng):
    graphs = [random_cubic(n, 17 * n + seed) for seed in range(4)]
    for g in graphs:
        form = canonical_form(g)
        assert form.automorphism_order == automorphism_count(g)
        assert canonical_form(relabel(g, rng.permutation(n))) == form
    for a in graphs:
        for b in graphs:
            assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_are_isomorphic_on_every_pair(n, rng):
    classes = list(generate(GenSpec(n)))
    graphs = [relabel(g, rng.permutation(n)) for g in classes for _ in range(3)]
    for a in graphs:
        for b in graphs:
            assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))
