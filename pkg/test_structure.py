"""
Tests for support-2 profiles, weightings, polarization and graph analysis
"""
import numpy as np
import pytest
from algebra.decomposition import PrimeSupport, minimal_primes
from algebra.ideal import from_generators, is_squarefree, render_ideal
from algebra.monomial import RingContext
from structure.graphs import (
    SimpleGraph,
    cover_separates_edge,
    cycle_order,
    distance,
    girth,
    graph_of,
    is_bipartite,
    is_triangle_free,
    leaves,
    minimal_vertex_covers,
    recognize_cycle,
    recognize_whisker,
    shape,
)
from structure.support2 import (
    StandardWeighting,
    analyze,
    apply_weighting,
    artinian_fold,
    depolarize,
    detect_standard_weighting,
    polarization_identity_holds,
    polarize,
    whisker_condition,
)
from tools.ideal_loader import IdealLoader
from utils.errors import CoverBoundError, DomainError, NotSupport2Error


def ideal(text, n=None):
    header = f"vars: {n};\n" if n is not None else ""
    return IdealLoader.parse_text(header + text).to_ideal()


# ---------------------------------------------------------------- profiles

def test_profile_of_the_introductory_triangle():
    p = analyze(ideal("x1*x2^2, x2^3*x3, x2^2*x3^2, x2*x3^3, x1*x3^2"))
    assert p.edge_keys() == [(1, 2), (1, 3), (2, 3)]
    assert p.alpha(1, 2) == 1
    assert p.alpha(1, 3) == 1
    assert p.alpha(2, 3) == 3
    assert p.edge(2, 3).pairs == ((3, 1), (2, 2), (1, 3))
    assert p.w(2, 3, 1) == 3
    assert p.w(3, 2, 1) == 1
    assert p.mu(2, 3) == 3
    assert p.nu(3, 2) == 1
    assert p.max_alpha() == 3


def test_profile_rejects_other_supports():
    with pytest.raises(NotSupport2Error) as err:
        analyze(ideal("x1*x2*x3, x1*x4"))
    assert err.value.support_size == 3
    with pytest.raises(NotSupport2Error):
        analyze(ideal("x1^2, x1*x2"))


def test_profile_round_trips_generators():
    I = ideal("x1*x2^4, x2^4*x3, x2*x3^4, x3^4*x4")
    assert analyze(I).generators() == list(I.generators)


def test_standard_weighting_detection():
    p = analyze(ideal("x1*x2^2, x2^2*x3", 4))
    weighting = detect_standard_weighting(p)
    assert weighting.d == (1, 2, 1, 1)
    assert weighting.defaulted == (4,)
    assert detect_standard_weighting(analyze(ideal("x1^2*x2, x1*x3"))) is None
    assert detect_standard_weighting(analyze(ideal("x1*x2^4, x2^4*x3, x2*x3^4, x3^4*x4"))) is None


def test_apply_weighting():
    J = ideal("x1*x2, x2*x3, x1*x3")
    assert apply_weighting(J, StandardWeighting((2, 1, 3))) == ideal("x1^2*x2, x2*x3^3, x1^2*x3^3")
    with pytest.raises(DomainError):
        apply_weighting(ideal("x1^2*x2"), StandardWeighting((1, 1)))
    with pytest.raises(DomainError):
        StandardWeighting((1, 0))


def test_polarize_and_back():
    I = ideal("x1*x2^2, x2*x3")
    P, pmap = polarize(I)
    assert pmap.blocks == (1, 2, 1)
    assert pmap.index(2, 2) == 3
    assert pmap.source_of(4) == (3, 1)
    assert is_squarefree(P)
    assert render_ideal(P) == "x2*x4, x1*x2*x3"
    assert depolarize(P, pmap) == I


def test_whisker_fold_and_polarization_identity():
    p = analyze(ideal("x1^3*x3, x1^2*x2, x2^2*x4"))
    whisker = recognize_whisker(graph_of(p))
    assert whisker.cores == (1, 2)
    assert whisker.whiskers == (3, 4)
    assert whisker_condition(p, whisker)
    assert artinian_fold(p, whisker) == ideal("x1^4, x1^2*x2, x2^3")
    assert polarization_identity_holds(p, whisker)


def test_artinian_fold_needs_the_whisker_condition():
    p = analyze(ideal("x1*x3, x1^2*x2, x2*x4"))
    whisker = recognize_whisker(graph_of(p))
    assert not whisker_condition(p, whisker)
    with pytest.raises(DomainError):
        artinian_fold(p, whisker)


# ---------------------------------------------------------------- graphs

def test_graph_basics():
    G = SimpleGraph(5, ((2, 1), (2, 3), (3, 4), (4, 5), (5, 1)))
    assert G.edges == ((1, 2), (1, 5), (2, 3), (3, 4), (4, 5))
    assert girth(G) == 5
    assert not is_bipartite(G)
    assert is_triangle_free(G)
    assert recognize_cycle(G) == 5
    assert cycle_order(G) == [1, 2, 3, 4, 5]
    assert shape(G) == "cycle C5"
    with pytest.raises(DomainError):
        SimpleGraph(2, ((1, 1),))


def test_forest_facts():
    G = SimpleGraph(5, ((1, 2), (2, 3), (3, 4)))
    assert girth(G) is None
    assert leaves(G) == [1, 4]
    assert distance(G, 1, 4) == 3
    assert distance(G, 1, 5) is None
    assert shape(G) == "path P4"
    assert recognize_cycle(G) is None


def test_minimal_vertex_covers():
    G = SimpleGraph(4, ((1, 2), (2, 3), (3, 4)))
    assert minimal_vertex_covers(G) == [
        PrimeSupport((1, 3)), PrimeSupport((2, 3)), PrimeSupport((2, 4)),
    ]
    assert cover_separates_edge(G, 1, 2)
    assert not cover_separates_edge(G, 2, 3)
    assert minimal_vertex_covers(SimpleGraph(3, ())) == []


def test_cover_bound(monkeypatch):
    monkeypatch.setenv("SIMISCALC_COVER_BOUND", "3")
    with pytest.raises(CoverBoundError):
        minimal_vertex_covers(SimpleGraph(4, ((1, 2), (3, 4))))


def test_recognize_whisker_on_paths():
    P4 = SimpleGraph(4, ((1, 2), (2, 3), (3, 4)))
    w = recognize_whisker(P4)
    assert w.cores == (2, 3)
    assert w.whiskers == (1, 4)
    assert w.mapping() == {2: 1, 1: 3, 3: 2, 4: 4}
    K2 = SimpleGraph(3, ((1, 2),))
    w = recognize_whisker(K2)
    assert w.cores == (1,)
    assert w.ambiguous == ((1, 2),)
    assert w.mapping()[3] == 3
    assert recognize_whisker(SimpleGraph(3, ((1, 2), (2, 3)))) is None


def test_triangle_and_isolated_vertex():
    G = SimpleGraph(4, ((1, 2), (2, 3), (1, 3)))
    assert recognize_cycle(G) == 3
    assert girth(G) == 3
    assert not is_triangle_free(G)


# ---------------------------------------------------------------- properties at scale

def random_graph(rng, n, p):
    return [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]


def assert_covers_are_minimal_primes(seed, count):
    rng = np.random.default_rng(seed)
    checked = 0
    while checked < count:
        n = int(rng.integers(2, 11))
        edges = random_graph(rng, n, float(rng.uniform(0.2, 0.6)))
        if not edges:
            continue
        ring = RingContext(n)
        I = from_generators(ring, [ring.from_powers({a: 1, b: 1}) for a, b in edges])
        covers = set(minimal_vertex_covers(SimpleGraph(n, tuple(edges))))
        assert set(minimal_primes(I)) == covers, str(I)
        assert set(minimal_vertex_covers(graph_of(analyze(I)))) == covers
        checked += 1


def test_squarefree_minimal_primes_are_minimal_vertex_covers():
    assert_covers_are_minimal_primes(seed=41, count=40)


@pytest.mark.slow
def test_squarefree_minimal_primes_are_minimal_vertex_covers_on_200_graphs():
    assert_covers_are_minimal_primes(seed=43, count=200)


def test_depolarize_inverts_polarize_on_random_ideals():
    rng = np.random.default_rng(47)
    checked = 0
    while checked < 300:
        n = int(rng.integers(1, 5))
        ring = RingContext(n)
        gens = []
        for _ in range(int(rng.integers(1, 5))):
            exps = [int(e) for e in rng.integers(0, 4, size=n)]
            if sum(exps):
                gens.append(ring.monomial(exps))
        if not gens:
            continue
        I = from_generators(ring, gens)
        P, pmap = polarize(I)
        assert is_squarefree(P)
        assert depolarize(P, pmap) == I, str(I)
        checked += 1
