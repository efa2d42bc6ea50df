"""Finite simple graphs, s-arcs, local actions and automorphism search.

The automorphism search is a partition-refinement backtrack over ordered
partitions: the canonical (left-most) descent fixes a base sequence, and
for every other candidate in each target cell the search either finds one
automorphism realizing it or exhaustively refutes it.  The transversal
elements found this way generate the full group level by level, exactly as
in a stabilizer-chain construction, so the returned group is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perms import Permutation, _identity_t
from .groups import Group, ScaleLimitError, build_group
from .actions import Action, restrict_to_invariant_set

S_ARC_CAP = 8
AUTOMORPHISM_VERTEX_CAP = 1000


@dataclass(frozen=True, eq=False)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree_of(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


@dataclass(frozen=True)
class SArc:
    """An s-arc: consecutive vertices adjacent, no immediate backtracking."""

    vertices: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True, eq=False)
class LocalAction:
    """The stabilizer of a vertex acting on its neighborhood, with kernel."""

    vertex: int
    action: Action
    kernel: Group


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    seen: set[tuple[int, int]] = set()
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise ValueError(f"duplicate edge ({pair[0]}, {pair[1]})")
        seen.add(pair)
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def valency(graph: Graph) -> int | None:
    """The common valency, or None for an irregular graph."""
    degrees = {len(nbrs) for nbrs in graph.adjacency}
    return degrees.pop() if len(degrees) == 1 else None


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    seen = {0}
    queue = [0]
    while queue:
        v = queue.pop()
        for w in graph.adjacency[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == graph.n


def girth(graph: Graph) -> int | float:
    """Length of a shortest cycle; infinity for forests (BFS per vertex)."""
    best: int | float = float("inf")
    for root in range(graph.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in graph.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def diameter(graph: Graph) -> int | float:
    """Largest eccentricity; infinity when disconnected."""
    best = 0
    for root in range(graph.n):
        dist = {root: 0}
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in graph.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if len(dist) != graph.n:
            return float("inf")
        best = max(best, max(dist.values()))
    return best


def is_bipartition(graph: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """A 2-coloring as (part0, part1), or None if the graph is not bipartite."""
    color: dict[int, int] = {}
    for root in range(graph.n):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            x = queue.pop()
            for y in graph.adjacency[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    part0 = tuple(v for v in range(graph.n) if color[v] == 0)
    part1 = tuple(v for v in range(graph.n) if color[v] == 1)
    return part0, part1


def is_complete_bipartite(graph: Graph) -> bool:
    """Structural K_{d,d} detection: balanced bipartition, complete across."""
    d = valency(graph)
    if d is None or d < 1 or graph.n != 2 * d:
        return False
    parts = is_bipartition(graph)
    if parts is None:
        return False
    part0, part1 = parts
    return (
        len(part0) == len(part1) == d
        and graph.num_edges == d * d
        and is_connected(graph)
    )


def is_complete(graph: Graph) -> bool:
    return graph.num_edges == graph.n * (graph.n - 1) // 2


def is_star(graph: Graph) -> bool:
    if graph.n < 2 or graph.num_edges != graph.n - 1:
        return False
    degrees = sorted(len(nbrs) for nbrs in graph.adjacency)
    return degrees[-1] == graph.n - 1 and all(d == 1 for d in degrees[:-1])


def iter_s_arcs(graph: Graph, s: int) -> Iterator[SArc]:
    if not 1 <= s <= S_ARC_CAP:
        raise ValueError(f"s must be between 1 and {S_ARC_CAP}")
    adjacency = graph.adjacency

    def extend(path: list[int]) -> Iterator[SArc]:
        if len(path) == s + 1:
            yield SArc(tuple(path))
            return
        last, prev = path[-1], path[-2]
        for w in adjacency[last]:
            if w != prev:
                path.append(w)
                yield from extend(path)
                path.pop()

    for v in range(graph.n):
        for u in adjacency[v]:
            yield from extend([v, u])


def enumerate_s_arcs(graph: Graph, s: int) -> list[SArc]:
    return list(iter_s_arcs(graph, s))


def count_s_arcs(graph: Graph, s: int) -> int:
    """Exact s-arc count by dynamic programming over terminal arcs."""
    if not 1 <= s <= S_ARC_CAP:
        raise ValueError(f"s must be between 1 and {S_ARC_CAP}")
    counts = {
        (u, v): 1 for u in range(graph.n) for v in graph.adjacency[u]
    }
    for _ in range(s - 1):
        nxt: dict[tuple[int, int], int] = {}
        for (u, v), c in counts.items():
            for w in graph.adjacency[v]:
                if w != u:
                    key = (v, w)
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return sum(counts.values())


def first_s_arc(graph: Graph, s: int) -> SArc | None:
    """Lexicographically smallest s-arc, or None."""
    for arc in iter_s_arcs(graph, s):
        return arc
    return None


def is_automorphism(graph: Graph, p: Permutation) -> bool:
    if p.degree != graph.n:
        return False
    edge_set = set(graph.edges)
    for u, v in graph.edges:
        a, b = p(u), p(v)
        if ((a, b) if a < b else (b, a)) not in edge_set:
            return False
    return True


def check_preserves_edges(graph: Graph, group: Group) -> None:
    """Generators-only check that a group acts by graph automorphisms;
    sound because automorphisms form a group."""
    if group.degree != graph.n:
        raise ValueError("group degree must equal the vertex count")
    for g in group.generators:
        if not is_automorphism(graph, g):
            raise ValueError("a generator of the group is not a graph automorphism")


def local_action(group: Group, graph: Graph, v: int) -> LocalAction:
    """The vertex stabilizer on the neighborhood, with its kernel."""
    check_preserves_edges(graph, group)
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex {v} out of range")
    nbrs = graph.adjacency[v]
    stab = group.point_stabilizer(v)
    action = restrict_to_invariant_set(stab, nbrs)
    kernel = group.pointwise_stabilizer((v,) + nbrs)
    if stab.order != action.image.order * kernel.order:
        raise AssertionError("local action orders are inconsistent")
    return LocalAction(vertex=v, action=action, kernel=kernel)


def arc_kernel(group: Group, graph: Graph, u: int, v: int) -> Group:
    """Elements fixing both neighborhoods of an edge pointwise."""
    check_preserves_edges(graph, group)
    pair = (u, v) if u < v else (v, u)
    if pair not in set(graph.edges):
        raise ValueError(f"{{{u}, {v}}} is not an edge")
    points = sorted(set(graph.adjacency[u]) | set(graph.adjacency[v]))
    return group.pointwise_stabilizer(points)


# ---------------------------------------------------------------------------
# Automorphism search


def _refine(cells: tuple[tuple[int, ...], ...], adjacency) -> tuple[tuple[int, ...], ...]:
    """Equitable refinement of an ordered partition.

    Each pass recolors vertices by (cell index, multiset of neighbor cell
    indices) and splits cells in place, subcells ordered by signature.  The
    ordering depends only on the colored-graph isomorphism class, so two
    states related by an automorphism refine in lockstep.
    """
    n = sum(len(c) for c in cells)
    while True:
        color = [0] * n
        for idx, cell in enumerate(cells):
            for v in cell:
                color[v] = idx
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[tuple[int, int], ...], list[int]] = {}
            for v in cell:
                counts: dict[int, int] = {}
                for w in adjacency[v]:
                    c = color[w]
                    counts[c] = counts.get(c, 0) + 1
                sig = tuple(sorted(counts.items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(tuple(sorted(groups[sig])))
        if not changed:
            return tuple(new_cells)
        cells = tuple(new_cells)


def _individualize(
    cells: tuple[tuple[int, ...], ...], pos: int, v: int, adjacency
) -> tuple[tuple[int, ...], ...]:
    cell = cells[pos]
    rest = tuple(x for x in cell if x != v)
    new = cells[:pos] + ((v,), rest) + cells[pos + 1 :]
    return _refine(new, adjacency)


def _shape(cells: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    return tuple(len(c) for c in cells)


def _target_pos(cells: tuple[tuple[int, ...], ...]) -> int | None:
    """Index of the first smallest non-singleton cell, None when discrete."""
    best = None
    best_size = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best_size is None or len(cell) < best_size):
            best, best_size = i, len(cell)
    return best


def automorphism_group(graph: Graph) -> Group:
    """Generators of the full automorphism group, as a built Group.

    Per level of the canonical descent, every non-canonical candidate in the
    target cell is either reached by a found automorphism (orbit check) or
    exhaustively refuted, so the per-level orbits are exact and the found
    transversal elements generate the group.
    """
    n = graph.n
    if n > AUTOMORPHISM_VERTEX_CAP:
        raise ScaleLimitError(
            f"automorphism search capped at {AUTOMORPHISM_VERTEX_CAP} vertices"
        )
    adjacency = graph.adjacency
    edge_set = set(graph.edges)

    root = _refine((tuple(range(n)),), adjacency)

    # Canonical (left-most) descent.
    canon_states: list[tuple[tuple[int, ...], ...]] = [root]
    positions: list[int] = []
    base: list[int] = []
    while True:
        pos = _target_pos(canon_states[-1])
        if pos is None:
            break
        positions.append(pos)
        b = canon_states[-1][pos][0]
        base.append(b)
        canon_states.append(_individualize(canon_states[-1], pos, b, adjacency))
    canon_shapes = [_shape(st) for st in canon_states]
    canon_leaf = tuple(c[0] for c in canon_states[-1])
    depth_count = len(positions)

    def leaf_automorphism(leaf_cells) -> tuple[int, ...] | None:
        leaf = tuple(c[0] for c in leaf_cells)
        images = [0] * n
        for a, b in zip(canon_leaf, leaf):
            images[a] = b
        if len(set(images)) != n:
            return None
        for u, v in graph.edges:
            a, b = images[u], images[v]
            if ((a, b) if a < b else (b, a)) not in edge_set:
                return None
        return tuple(images)

    def search(depth: int, cells) -> tuple[int, ...] | None:
        """First automorphism whose descent reaches this state, or None."""
        if _shape(cells) != canon_shapes[depth]:
            return None
        if depth == depth_count:
            return leaf_automorphism(cells)
        pos = positions[depth]
        for w in cells[pos]:
            result = search(depth + 1, _individualize(cells, pos, w, adjacency))
            if result is not None:
                return result
        return None

    gens: list[Permutation] = []
    level_orbits: list[int] = []
    for depth in reversed(range(depth_count)):
        cell = canon_states[depth][positions[depth]]
        b = base[depth]
        # Generators found so far all fix base[:depth] (deeper levels fix
        # more), so they witness orbit membership at this level.
        orbit = {b}
        _grow_orbit(orbit, gens)
        for w in cell:
            if w in orbit:
                continue
            found = search(
                depth + 1,
                _individualize(canon_states[depth], positions[depth], w, adjacency),
            )
            if found is not None:
                gens.append(Permutation(found))
                _grow_orbit(orbit, gens)
                if w not in orbit:
                    raise AssertionError("found automorphism does not reach target")
        level_orbits.append(len(orbit))

    group = build_group(
        gens or [Permutation(_identity_t(n))], base_prefix=tuple(base)
    )
    expected = 1
    for size in level_orbits:
        expected *= size
    if group.order != expected:
        raise AssertionError("chain order disagrees with search orbits")
    for g in group.generators:
        if not is_automorphism(graph, g):
            raise AssertionError("search produced a non-automorphism")
    return group


def _grow_orbit(orbit: set[int], gens: list[Permutation]) -> None:
    queue = list(orbit)
    while queue:
        x = queue.pop()
        for g in gens:
            y = g(x)
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
