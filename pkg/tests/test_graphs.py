import itertools
import random

import pytest

from edgeprim import (
    ScaleLimitError,
    arc_kernel,
    automorphism_group,
    build_graph,
    build_group,
    complete_graph,
    count_s_arcs,
    cycle_graph,
    diameter,
    enumerate_s_arcs,
    from_cycles,
    girth,
    heawood,
    is_connected,
    local_action,
    petersen,
    valency,
)
from edgeprim.graphs import first_s_arc, is_automorphism, is_complete_bipartite, is_star
from brute import brute_automorphisms


def test_build_graph_validation():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        build_graph(3, [(0, 4)])


def test_k4_basics():
    k4 = complete_graph(4)
    assert valency(k4) == 3
    assert is_connected(k4)
    assert girth(k4) == 3


def test_petersen_basics():
    p = petersen()
    assert valency(p) == 3
    assert girth(p) == 5
    assert diameter(p) == 2


def test_irregular_and_forest():
    path = build_graph(3, [(0, 1), (1, 2)])
    assert valency(path) is None
    assert girth(path) == float("inf")


def test_star_and_complete_bipartite_detection():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert is_star(star)
    from edgeprim import complete_bipartite

    assert is_complete_bipartite(complete_bipartite(3))
    assert not is_complete_bipartite(petersen())


def test_s_arc_counts_on_cycles():
    c7 = cycle_graph(7)
    for s in range(1, 6):
        assert count_s_arcs(c7, s) == 14
        assert len(enumerate_s_arcs(c7, s)) == 14


def test_k4_two_arcs():
    assert count_s_arcs(complete_graph(4), 2) == 24


def test_s_arc_formula_on_regular_fixtures():
    fixtures = [complete_graph(4), complete_graph(5), petersen(), heawood()]
    for g in fixtures:
        d = valency(g)
        for s in range(1, 5):
            assert count_s_arcs(g, s) == g.n * d * (d - 1) ** (s - 1)
            assert len(enumerate_s_arcs(g, s)) == count_s_arcs(g, s)


def test_s_arc_validity():
    for arc in enumerate_s_arcs(petersen(), 3):
        vs = arc.vertices
        assert len(vs) == 4
        for a, b in zip(vs, vs[1:]):
            assert b in petersen().adjacency[a]
        for a, b in zip(vs, vs[2:]):
            assert a != b


def test_s_arc_cap():
    with pytest.raises(ValueError):
        enumerate_s_arcs(complete_graph(4), 9)
    with pytest.raises(ValueError):
        count_s_arcs(complete_graph(4), 0)


def test_hs_three_arc_count(hs_graph):
    assert count_s_arcs(hs_graph, 3) == 12600


def test_automorphism_groups_of_named_graphs():
    assert automorphism_group(complete_graph(5)).order == 120
    assert automorphism_group(cycle_graph(6)).order == 12
    assert automorphism_group(petersen()).order == 120
    assert automorphism_group(heawood()).order == 336


def test_every_returned_generator_preserves_edges():
    for g in (petersen(), heawood()):
        group = automorphism_group(g)
        for gen in group.generators:
            assert is_automorphism(g, gen)


def test_vertex_transitive_aut_order_divisible_by_n():
    for g in (complete_graph(6), petersen(), heawood(), cycle_graph(9)):
        assert automorphism_group(g).order % g.n == 0


def test_automorphism_group_matches_brute_force_on_random_graphs():
    rng = random.Random(424242)
    for _ in range(30):
        n = rng.randint(1, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        g = build_graph(n, edges)
        assert automorphism_group(g).order == len(brute_automorphisms(n, edges))


def test_automorphism_scale_gate():
    big = build_graph(1001, [(i, i + 1) for i in range(1000)])
    with pytest.raises(ScaleLimitError):
        automorphism_group(big)


def test_local_action_k5():
    k5 = complete_graph(5)
    g = automorphism_group(k5)
    la = local_action(g, k5, 0)
    assert la.action.image.order == 24
    assert la.kernel.order == 1
    stab = g.point_stabilizer(0)
    assert stab.order == la.action.image.order * la.kernel.order


def test_local_action_heawood():
    hw = heawood()
    g = automorphism_group(hw)
    la = local_action(g, hw, 0)
    assert la.action.image.order == 6
    assert la.kernel.order == 4


def test_local_action_rejects_non_automorphisms():
    k5 = complete_graph(5)
    not_aut = build_group([from_cycles(5, [(0, 1)])])
    path = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    with pytest.raises(ValueError):
        local_action(build_group([from_cycles(5, [(0, 4)])]), path, 0)


def test_arc_kernel_examples():
    k5 = complete_graph(5)
    g5 = automorphism_group(k5)
    assert arc_kernel(g5, k5, 0, 1).order == 1
    hw = heawood()
    gh = automorphism_group(hw)
    u, v = hw.edges[0]
    k = arc_kernel(gh, hw, u, v)
    assert k.order == 2
    with pytest.raises(ValueError):
        arc_kernel(gh, hw, 0, 1)  # not an edge


def test_local_action_identity_across_fixtures(hs_graph, hs_aut):
    fixtures = [
        (complete_graph(5), automorphism_group(complete_graph(5))),
        (heawood(), automorphism_group(heawood())),
        (petersen(), automorphism_group(petersen())),
        (hs_graph, hs_aut),
    ]
    for graph, group in fixtures:
        la = local_action(group, graph, 0)
        assert group.point_stabilizer(0).order == la.action.image.order * la.kernel.order


def test_first_s_arc_is_lexicographically_least():
    p = petersen()
    arc = first_s_arc(p, 2)
    assert arc.vertices == (0, 1, 2)


def brute_girth(n, edges):
    # Independent oracle: for each edge, remove it and BFS the endpoint
    # distance; the girth is the best distance plus one.
    best = float("inf")
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for u, v in edges:
        adj[u].discard(v)
        adj[v].discard(u)
        dist = {u: 0}
        queue = [u]
        while queue:
            x = queue.pop(0)
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if v in dist:
            best = min(best, dist[v] + 1)
        adj[u].add(v)
        adj[v].add(u)
    return best


def test_girth_matches_edge_removal_oracle():
    rng = random.Random(99)
    for _ in range(150):
        n = rng.randint(3, 10)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.35]
        g = build_graph(n, edges)
        assert girth(g) == brute_girth(n, edges)
