"""Machine-checkable certificates for symmetry properties of graphs.

Every check returns a :class:`Certificate` with a verdict in
{pass, fail, scale-limit, not-applicable} and a flat evidence map of exact
integers and booleans.  Checks are pure functions of (groups, graph,
config): re-running a pass certificate from its recorded inputs reproduces
identical evidence bit for bit.  Hypothesis failures yield not-applicable,
never a vacuous pass.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from pathlib import Path

from .perms import from_cycles
from .groups import (
    DEFAULT_ENUMERATION_CUTOFF,
    Group,
    ScaleLimitError,
    build_group,
    is_abelian,
    is_normal,
    perfect_core,
    reduce_generators,
    same_subgroup,
)
from .structure import (
    GroupFingerprint,
    centralizer,
    fingerprint,
    is_cyclic,
    is_p_group,
    is_simple,
    is_soluble,
    normal_subgroups,
    normalizer,
    prime_factors,
    sylow_subgroup,
)
from .actions import (
    Action,
    act_on_pairs,
    is_k_transitive,
    is_primitive,
    is_frobenius,
    is_transitive,
    restrict_to_invariant_set,
)
from .graphs import (
    Graph,
    check_preserves_edges,
    count_s_arcs,
    first_s_arc,
    is_complete,
    is_complete_bipartite,
    is_connected,
    is_star,
    valency,
)
from .version import CERTIFICATE_SCHEMA_VERSION, TOOL_VERSION

PASS = "pass"
FAIL = "fail"
SCALE_LIMIT = "scale-limit"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class RunConfig:
    enumeration_cutoff: int = DEFAULT_ENUMERATION_CUTOFF
    s_cap: int = 8
    output_format: str = "json"
    fixture_dir: Path = Path("fixtures")

    def __post_init__(self) -> None:
        if self.s_cap > 8 or self.s_cap < 1:
            raise ValueError("s_cap must be between 1 and 8")
        if self.enumeration_cutoff < 10**3:
            raise ValueError("enumeration cutoff must be at least 1000")
        if self.output_format not in ("json", "text"):
            raise ValueError("output format must be 'json' or 'text'")
        object.__setattr__(self, "fixture_dir", Path(self.fixture_dir))


DEFAULT_CONFIG = RunConfig()


@dataclass
class Certificate:
    check_name: str
    inputs: dict
    verdict: str
    evidence: dict
    config: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "config": self.config,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _config_snapshot(config: RunConfig) -> dict:
    return {
        "enumeration_cutoff": config.enumeration_cutoff,
        "s_cap": config.s_cap,
        "schema_version": CERTIFICATE_SCHEMA_VERSION,
        "tool_version": TOOL_VERSION,
    }


def _cert(
    name: str,
    verdict: str,
    evidence: dict,
    inputs: dict | None,
    config: RunConfig,
) -> Certificate:
    return Certificate(
        check_name=name,
        inputs=dict(inputs or {}),
        verdict=verdict,
        evidence=evidence,
        config=_config_snapshot(config),
    )


def _not_applicable(
    name: str, gate: str, evidence: dict, inputs: dict | None, config: RunConfig
) -> Certificate:
    evidence = dict(evidence)
    evidence["violated_hypothesis"] = gate
    return _cert(name, NOT_APPLICABLE, evidence, inputs, config)


def _blocks_as_labels(action: Action, system) -> list[list[list[int]]]:
    return sorted(
        sorted(list(action.domain_labels[i]) for i in block) for block in system.blocks
    )


def _is_vertex_transitive(group: Group, graph: Graph) -> bool:
    return len(group.orbit(0)) == graph.n


def _arc_count(graph: Graph) -> int:
    return 2 * graph.num_edges


def _is_arc_transitive(group: Group, graph: Graph) -> bool:
    if graph.num_edges == 0:
        return False
    u, v = graph.edges[0]
    stab = group.pointwise_stabilizer((u, v))
    return group.order == _arc_count(graph) * stab.order


def _is_edge_transitive(group: Group, graph: Graph) -> bool:
    if graph.num_edges == 0:
        return False
    u, v = graph.edges[0]
    stab = group.setwise_stabilizer((u, v))
    return group.order == graph.num_edges * stab.order


# ---------------------------------------------------------------------------
# Graph-level checks


def is_edge_primitive(
    group: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Primitivity of the edge action, with a block witness on failure."""
    name = "edge-primitive"
    check_preserves_edges(graph, group)
    if graph.num_edges == 0:
        raise ValueError("graph has no edges")
    evidence: dict = {"edge_count": graph.num_edges, "group_order": group.order}
    if not _is_edge_transitive(group, graph):
        return _not_applicable(name, "group is not edge-transitive", evidence, inputs, config)
    u, v = graph.edges[0]
    edge_stab = group.setwise_stabilizer((u, v))
    evidence["edge_stabilizer_order"] = edge_stab.order
    action = act_on_pairs(group, graph.edges)
    evidence["edge_action_kernel_order"] = action.kernel_order
    primitive, witness = is_primitive(action)
    evidence["primitive"] = primitive
    if primitive:
        star = is_star(graph)
        evidence["graph_is_star"] = star
        if not star:
            evidence["arc_transitive"] = _is_arc_transitive(group, graph)
        return _cert(name, PASS, evidence, inputs, config)
    evidence["witness_block_size"] = witness.block_size
    evidence["witness_num_blocks"] = witness.num_blocks
    evidence["witness_blocks"] = _blocks_as_labels(action, witness)
    return _cert(name, FAIL, evidence, inputs, config)


def s_transitivity_degree(
    group: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Largest s <= s_cap with the group transitive on s-arcs.

    Transitivity at each s is decided by exact counting: the group is
    transitive on s-arcs iff its order equals the s-arc count times the
    order of one s-arc stabilizer.  No induced group on arcs is built.
    """
    name = "s-degree"
    check_preserves_edges(graph, group)
    evidence: dict = {"group_order": group.order}
    d = valency(graph)
    if not is_connected(graph):
        return _not_applicable(name, "graph is disconnected", evidence, inputs, config)
    if d is None:
        return _not_applicable(name, "graph is irregular", evidence, inputs, config)
    evidence["valency"] = d
    if d < 3:
        return _not_applicable(name, "valency < 3", evidence, inputs, config)
    evidence["vertex_transitive"] = _is_vertex_transitive(group, graph)
    evidence["arc_transitive"] = _is_arc_transitive(group, graph)

    def transitive_on_s_arcs(s: int) -> tuple[bool, int, int]:
        count = count_s_arcs(graph, s)
        arc = first_s_arc(graph, s)
        if arc is None:
            return False, count, 0
        stab = group.pointwise_stabilizer(tuple(dict.fromkeys(arc.vertices)))
        return group.order == count * stab.order, count, stab.order

    degree = 0
    ladder = []
    for s in range(1, config.s_cap + 1):
        ok, count, stab_order = transitive_on_s_arcs(s)
        ladder.append(
            {"s": s, "arc_count": count, "stabilizer_order": stab_order, "transitive": ok}
        )
        if not ok:
            break
        degree = s
    evidence["ladder"] = ladder
    evidence["s_degree"] = degree
    if degree >= 2 and config.s_cap >= 8:
        probe, _count, _stab = transitive_on_s_arcs(8)
        evidence["probe_s8_transitive"] = probe
        evidence["weiss_cap_ok"] = degree <= 7 and not probe
        if not evidence["weiss_cap_ok"]:
            return _cert(name, FAIL, evidence, inputs, config)
    return _cert(name, PASS, evidence, inputs, config)


def local_structure(
    group: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Local action orders, kernels, and the group-extension order identity.

    Evidence at a vertex v with neighbor u: |G_v|, the local image
    |G_v^{nbhd}|, the kernel orders, local primitivity/2-transitivity, the
    prime-power verdict on the two-sided kernel, and the exact identity
    |G_v| = |K_uv| * |K_v on nbhd(u)| * |G_v^{nbhd}|.
    """
    name = "local-structure"
    check_preserves_edges(graph, group)
    transitive = _is_vertex_transitive(group, graph)
    evidence: dict = {"vertex_transitive": transitive}
    reps = [0] if transitive else [o[0] for o in group.orbits()]
    per_vertex = {}
    for v in reps:
        if not graph.adjacency[v]:
            continue
        per_vertex[str(v)] = _local_evidence(group, graph, v)
    if transitive:
        evidence.update(per_vertex["0"])
        ok = evidence["extension_identity_ok"] and evidence["arc_kernel_is_p_group"]
        return _cert(name, PASS if ok else FAIL, evidence, inputs, config)
    evidence["per_vertex"] = per_vertex
    return _not_applicable(
        name, "group is not vertex-transitive", evidence, inputs, config
    )


def _local_evidence(group: Group, graph: Graph, v: int) -> dict:
    nbrs = graph.adjacency[v]
    u = nbrs[0]
    stab = group.point_stabilizer(v)
    local = restrict_to_invariant_set(stab, nbrs)
    kernel_v = group.pointwise_stabilizer((v,) + nbrs)
    both = sorted(set(graph.adjacency[u]) | set(graph.adjacency[v]))
    kernel_uv = group.pointwise_stabilizer(both)
    kernel_v_on_u = restrict_to_invariant_set(kernel_v, graph.adjacency[u])
    p_group, prime = is_p_group(kernel_uv)
    out: dict = {
        "vertex": v,
        "neighbor": u,
        "order_vertex_stabilizer": stab.order,
        "order_local_image": local.image.order,
        "order_vertex_kernel": kernel_v.order,
        "order_arc_kernel": kernel_uv.order,
        "order_vertex_kernel_on_other_side": kernel_v_on_u.image.order,
        "arc_kernel_is_p_group": p_group,
        "arc_kernel_prime": prime,
    }
    if local.domain_size >= 2 and is_transitive(local):
        primitive, _w = is_primitive(local)
        out["locally_primitive"] = primitive
        out["locally_2_transitive"] = is_k_transitive(local, 2)
    else:
        out["locally_primitive"] = local.domain_size < 2
        out["locally_2_transitive"] = False
    out["extension_identity_ok"] = (
        stab.order
        == kernel_uv.order * kernel_v_on_u.image.order * local.image.order
    )
    return out


def almost_simple_certificate(
    group: Group,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Simple perfect core with trivial centralizer.

    This certifies T <= G <= Aut(T) for a nonabelian simple T: the perfect
    core is nontrivial, simple, normal, and self-centralizing-up-to-
    triviality, which pins G into the automorphism group of its socle.
    """
    name = "almost-simple"
    evidence: dict = {"group_order": group.order}
    reduced = reduce_generators(group)
    core = reduce_generators(perfect_core(reduced))
    evidence["core_order"] = core.order
    if core.order == 1:
        evidence["core_simple"] = False
        return _cert(name, FAIL, evidence, inputs, config)
    evidence["core_index"] = group.order // core.order
    try:
        simple = is_simple(core, config.enumeration_cutoff)
    except ScaleLimitError as exc:
        evidence["scale_limit"] = str(exc)
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    evidence["core_simple"] = simple
    if not simple:
        return _cert(name, FAIL, evidence, inputs, config)
    normal = is_normal(reduced, core)
    evidence["core_normal"] = normal
    try:
        cent = centralizer(reduced, core, config.enumeration_cutoff)
    except ScaleLimitError as exc:
        evidence["scale_limit"] = str(exc)
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    evidence["centralizer_order"] = cent.order
    verdict = PASS if normal and cent.order == 1 else FAIL
    return _cert(name, verdict, evidence, inputs, config)


def main_theorem_check(
    group: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Edge-primitive plus 2-arc-transitive forces complete bipartite or
    almost simple; verify whichever branch applies.  A fixture satisfying
    the hypotheses with neither branch is a genuine counterexample and
    yields fail."""
    name = "main-theorem"
    evidence: dict = {"group_order": group.order}
    d = valency(graph)
    if d is None or d < 3 or not is_connected(graph):
        return _not_applicable(
            name, "graph is not connected d-regular with d >= 3", evidence, inputs, config
        )
    evidence["valency"] = d
    ep = is_edge_primitive(group, graph, inputs, config)
    evidence["edge_primitive"] = ep.verdict == PASS
    if ep.verdict != PASS:
        return _not_applicable(name, "not edge-primitive", evidence, inputs, config)
    sd = s_transitivity_degree(group, graph, inputs, config)
    degree = sd.evidence.get("s_degree", 0)
    evidence["s_degree"] = degree
    if sd.verdict != PASS or degree < 2:
        return _not_applicable(name, "not 2-arc-transitive", evidence, inputs, config)
    if is_complete_bipartite(graph):
        evidence["branch"] = "complete-bipartite"
        return _cert(name, PASS, evidence, inputs, config)
    asc = almost_simple_certificate(group, inputs, config)
    evidence["branch"] = "almost-simple"
    evidence["almost_simple"] = asc.verdict == PASS
    evidence["core_order"] = asc.evidence.get("core_order")
    if asc.verdict == SCALE_LIMIT:
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    return _cert(name, PASS if asc.verdict == PASS else FAIL, evidence, inputs, config)


def prime_valency_check(
    group: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """For prime valency: 2-arc-transitive, or the complete-graph branch
    with the projective-linear order and valency > 11."""
    name = "prime-valency"
    evidence: dict = {"group_order": group.order}
    d = valency(graph)
    evidence["valency"] = d
    if d is None or prime_factors(d) != [d]:
        return _not_applicable(name, "valency is not prime", evidence, inputs, config)
    ep = is_edge_primitive(group, graph, inputs, config)
    evidence["edge_primitive"] = ep.verdict == PASS
    if ep.verdict != PASS:
        return _not_applicable(name, "not edge-primitive", evidence, inputs, config)
    if is_complete_bipartite(graph):
        return _not_applicable(
            name, "graph is complete bipartite", evidence, inputs, config
        )
    sd = s_transitivity_degree(group, graph, inputs, config)
    degree = sd.evidence.get("s_degree", 0)
    evidence["s_degree"] = degree
    if degree >= 2:
        evidence["branch"] = "2-arc-transitive"
        return _cert(name, PASS, evidence, inputs, config)
    evidence["branch"] = "complete-graph"
    complete = is_complete(graph) and graph.n == d + 1
    evidence["graph_is_complete_d_plus_1"] = complete
    expected_order = d * (d * d - 1) // 2
    evidence["order_matches_psl2"] = group.order == expected_order
    evidence["valency_greater_11"] = d > 11
    asc = almost_simple_certificate(group, inputs, config)
    if asc.verdict == SCALE_LIMIT:
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    evidence["almost_simple"] = asc.verdict == PASS
    ok = (
        complete
        and group.order == expected_order
        and d > 11
        and asc.verdict == PASS
    )
    return _cert(name, PASS if ok else FAIL, evidence, inputs, config)


# ---------------------------------------------------------------------------
# Reference fingerprints for isomorphism-flavored claims


@functools.lru_cache(maxsize=None)
def _reference_fingerprint(which: str, cutoff: int) -> GroupFingerprint:
    # The cutoff must match the one used for the group under test, so that
    # enumeration-priced fields are absent on both sides or neither.
    if which == "alt7":
        gens = [from_cycles(7, [(0, 1, 2)]), from_cycles(7, [(0, 1, 2, 3, 4, 5, 6)])]
    elif which == "sym6":
        gens = [from_cycles(6, [(0, 1)]), from_cycles(6, [(0, 1, 2, 3, 4, 5)])]
    else:
        raise ValueError(f"unknown reference {which!r}")
    return fingerprint(build_group(gens), cutoff)


def three_arc_criterion(
    group: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """For 2-arc-transitive groups with faithful vertex stabilizers:
    3-arc-transitivity holds iff the valency is 7, the vertex stabilizer
    has alternating-7 core, and the edge stabilizer is not symmetric-6.

    Both sides are evaluated independently; isomorphism-flavored claims are
    decided by fingerprints against reference constructions.  A fingerprint
    mismatch proves non-isomorphism, so the not-symmetric-6 conjunct is only
    undecidable when the fingerprints tie, which downgrades to scale-limit.
    """
    name = "three-arc"
    evidence: dict = {"group_order": group.order}
    d = valency(graph)
    evidence["valency"] = d
    if d is None or d < 3 or not is_connected(graph):
        return _not_applicable(
            name, "graph is not connected d-regular with d >= 3", evidence, inputs, config
        )
    sd = s_transitivity_degree(group, graph, inputs, config)
    degree = sd.evidence.get("s_degree", 0)
    evidence["s_degree"] = degree
    if sd.verdict != PASS or degree < 2:
        return _not_applicable(name, "not 2-arc-transitive", evidence, inputs, config)
    v = 0
    nbrs = graph.adjacency[v]
    kernel_v = group.pointwise_stabilizer((v,) + nbrs)
    evidence["order_vertex_kernel"] = kernel_v.order
    if kernel_v.order != 1:
        return _not_applicable(
            name, "vertex stabilizer is not faithful on the neighborhood",
            evidence, inputs, config,
        )
    left = degree >= 3
    evidence["three_arc_transitive"] = left

    stab = group.point_stabilizer(v)
    evidence["order_vertex_stabilizer"] = stab.order
    core = perfect_core(reduce_generators(stab))
    evidence["order_vertex_stabilizer_core"] = core.order
    u, w = graph.edges[0]
    edge_stab = group.setwise_stabilizer((u, w))
    evidence["order_edge_stabilizer"] = edge_stab.order

    if d != 7:
        right = False
        evidence["right_side"] = right
    else:
        core_fp = fingerprint(core, config.enumeration_cutoff)
        alt7_match = core_fp == _reference_fingerprint("alt7", config.enumeration_cutoff)
        evidence["vertex_core_matches_alt7"] = alt7_match
        if not alt7_match:
            right = False
        else:
            edge_fp = fingerprint(edge_stab, config.enumeration_cutoff)
            sym6_tie = edge_fp == _reference_fingerprint("sym6", config.enumeration_cutoff)
            evidence["edge_stabilizer_differs_from_sym6"] = not sym6_tie
            if sym6_tie:
                # Equal fingerprints cannot certify non-isomorphism.
                evidence["scale_limit"] = "fingerprint tie with symmetric-6 reference"
                return _cert(name, SCALE_LIMIT, evidence, inputs, config)
            right = True
        evidence["right_side"] = right
    verdict = PASS if left == right else FAIL
    evidence["sides_agree"] = left == right
    return _cert(name, verdict, evidence, inputs, config)


# ---------------------------------------------------------------------------
# (group, normal subgroup) checks


def _check_normal_pair(group: Group, sub: Group) -> None:
    if sub.order == 1:
        raise ValueError("normal subgroup must be nontrivial")
    if not is_normal(group, sub):
        raise ValueError("subgroup is not normal")


def counting_identity_check(
    group: Group,
    normal: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Exact stabilizer-order identities for a nontrivial normal subgroup
    of an edge-primitive group: 2|N_v| = d|N_edge| in the vertex-transitive
    case, |N_v| = d|N_edge| = d|N_arc| otherwise; and N_v is neither trivial
    nor the whole edge stabilizer."""
    name = "counting"
    _check_normal_pair(group, normal)
    evidence: dict = {
        "group_order": group.order,
        "normal_order": normal.order,
    }
    ep = is_edge_primitive(group, graph, inputs, config)
    if ep.verdict != PASS:
        return _not_applicable(name, "group is not edge-primitive", evidence, inputs, config)
    d = valency(graph)
    evidence["valency"] = d
    u, v = graph.edges[0]
    n_v = normal.point_stabilizer(v)
    n_uv = normal.pointwise_stabilizer((u, v))
    n_edge = normal.setwise_stabilizer((u, v))
    evidence["order_Nv"] = n_v.order
    evidence["order_N_arc"] = n_uv.order
    evidence["order_N_edge"] = n_edge.order
    transitive = _is_vertex_transitive(normal, graph)
    evidence["normal_vertex_transitive"] = transitive
    if transitive:
        evidence["identity"] = f"2*{n_v.order} == {d}*{n_edge.order}"
        identity_ok = 2 * n_v.order == d * n_edge.order
    else:
        evidence["identity"] = f"{n_v.order} == {d}*{n_edge.order} == {d}*{n_uv.order}"
        identity_ok = n_v.order == d * n_edge.order == d * n_uv.order
    evidence["identity_ok"] = identity_ok
    evidence["Nv_nontrivial"] = n_v.order > 1
    evidence["Nv_differs_from_N_edge"] = not same_subgroup(n_v, n_edge)
    ok = identity_ok and evidence["Nv_nontrivial"] and evidence["Nv_differs_from_N_edge"]
    return _cert(name, PASS if ok else FAIL, evidence, inputs, config)


def selfnorm_check(
    group: Group,
    normal: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Either the graph is complete bipartite, or the arc stabilizer in the
    normal subgroup is nontrivial and the edge stabilizer self-normalized."""
    name = "selfnorm"
    _check_normal_pair(group, normal)
    evidence: dict = {
        "group_order": group.order,
        "normal_order": normal.order,
    }
    ep = is_edge_primitive(group, graph, inputs, config)
    if ep.verdict != PASS:
        return _not_applicable(name, "group is not edge-primitive", evidence, inputs, config)
    if is_complete_bipartite(graph):
        evidence["branch"] = "complete-bipartite"
        return _cert(name, PASS, evidence, inputs, config)
    evidence["branch"] = "self-normalized"
    u, v = graph.edges[0]
    n_uv = normal.pointwise_stabilizer((u, v))
    n_edge = normal.setwise_stabilizer((u, v))
    evidence["order_N_arc"] = n_uv.order
    evidence["order_N_edge"] = n_edge.order
    evidence["N_arc_nontrivial"] = n_uv.order > 1
    try:
        norm = normalizer(normal, n_edge, config.enumeration_cutoff)
    except ScaleLimitError as exc:
        evidence["scale_limit"] = str(exc)
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    evidence["normalizer_order"] = norm.order
    evidence["self_normalized"] = same_subgroup(norm, n_edge)
    ok = evidence["N_arc_nontrivial"] and evidence["self_normalized"]
    return _cert(name, PASS if ok else FAIL, evidence, inputs, config)


def sylow_arc_check(
    group: Group,
    normal: Group,
    graph: Graph,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """Normal Sylow subgroups of the edge stabilizer are full Sylow
    subgroups of the normal subgroup; the edge stabilizer is nonabelian;
    and an abelian arc stabilizer forces arc-transitivity."""
    name = "sylow-arc"
    _check_normal_pair(group, normal)
    evidence: dict = {
        "group_order": group.order,
        "normal_order": normal.order,
    }
    ep = is_edge_primitive(group, graph, inputs, config)
    if ep.verdict != PASS:
        return _not_applicable(name, "group is not edge-primitive", evidence, inputs, config)
    if is_complete_bipartite(graph):
        return _not_applicable(
            name, "graph is complete bipartite", evidence, inputs, config
        )
    u, v = graph.edges[0]
    n_uv = normal.pointwise_stabilizer((u, v))
    n_edge = normal.setwise_stabilizer((u, v))
    evidence["order_N_arc"] = n_uv.order
    evidence["order_N_edge"] = n_edge.order
    sylow_rows = []
    all_ok = True
    try:
        for p in prime_factors(n_edge.order):
            syl = sylow_subgroup(n_edge, p, config.enumeration_cutoff)
            normal_in_stab = is_normal(n_edge, syl)
            row = {
                "prime": p,
                "sylow_order": syl.order,
                "normal_in_edge_stabilizer": normal_in_stab,
            }
            if normal_in_stab and syl.order > 1:
                full = _p_part(normal.order, p)
                row["full_sylow_order"] = full
                row["is_full_sylow"] = syl.order == full
                all_ok = all_ok and syl.order == full
            sylow_rows.append(row)
    except ScaleLimitError as exc:
        evidence["scale_limit"] = str(exc)
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    evidence["sylow_rows"] = sylow_rows
    nonabelian = not is_abelian(n_edge)
    evidence["N_edge_nonabelian"] = nonabelian
    all_ok = all_ok and nonabelian
    arc_abelian = is_abelian(n_uv)
    evidence["N_arc_abelian"] = arc_abelian
    if arc_abelian:
        arc_trans = normal.order == _arc_count(graph) * n_uv.order
        evidence["normal_arc_transitive"] = arc_trans
        all_ok = all_ok and arc_trans
    return _cert(name, PASS if all_ok else FAIL, evidence, inputs, config)


def affine_normal_check(
    group: Group,
    normal: Group,
    inputs: dict | None = None,
    config: RunConfig = DEFAULT_CONFIG,
) -> Certificate:
    """For a 2-transitive affine group: an imprimitive nontrivial normal
    subgroup is a soluble Frobenius group with cyclic point stabilizer.

    The classical statement carries a further alternative (semilinear
    one-dimensional containment, or central stabilizers over non-prime
    fields) whose exact scoping is ambiguous; it is reported as unchecked
    rather than judged.
    """
    name = "affine-normal"
    _check_normal_pair(group, normal)
    evidence: dict = {
        "group_order": group.order,
        "normal_order": normal.order,
        "degree": group.degree,
        "residual_clause_checked": False,
    }
    nat = restrict_to_invariant_set(group, range(group.degree))
    if not is_k_transitive(nat, 2):
        return _not_applicable(name, "group is not 2-transitive", evidence, inputs, config)
    n_nat = restrict_to_invariant_set(normal, range(group.degree))
    if not is_transitive(n_nat):
        return _not_applicable(
            name, "normal subgroup is intransitive", evidence, inputs, config
        )
    stab = normal.point_stabilizer(0)
    evidence["order_N0"] = stab.order
    if stab.order == 1:
        return _not_applicable(
            name, "normal subgroup is regular", evidence, inputs, config
        )
    primitive, witness = is_primitive(n_nat)
    evidence["normal_primitive"] = primitive
    if primitive:
        return _not_applicable(
            name, "normal subgroup is primitive", evidence, inputs, config
        )
    evidence["witness_block_size"] = witness.block_size
    evidence["soluble"] = is_soluble(normal)
    evidence["frobenius"] = is_frobenius(n_nat)
    try:
        evidence["stabilizer_cyclic"] = is_cyclic(stab, config.enumeration_cutoff)
    except ScaleLimitError as exc:
        evidence["scale_limit"] = str(exc)
        return _cert(name, SCALE_LIMIT, evidence, inputs, config)
    ok = evidence["soluble"] and evidence["frobenius"] and evidence["stabilizer_cyclic"]
    return _cert(name, PASS if ok else FAIL, evidence, inputs, config)


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


# ---------------------------------------------------------------------------
# Lemma suite over the shipped fixture manifest

NORMAL_SWEEP_BOUND = 10**5


@dataclass(frozen=True)
class SuiteRow:
    fixture: str
    check: str
    subject: str
    certificate: Certificate


def _graph_fixture_builders() -> dict:
    from .graphs import automorphism_group
    from .families import (
        complete_bipartite,
        complete_graph,
        heawood,
        hoffman_singleton,
        pgl2,
        psl2,
    )

    return {
        "k5": (lambda: complete_graph(5), None),
        "k33": (lambda: complete_bipartite(3), None),
        "k8-pgl2-7": (lambda: complete_graph(8), lambda: pgl2(7)),
        "k14-psl2-13": (lambda: complete_graph(14), lambda: psl2(13)),
        "heawood": (heawood, None),
        "hs": (hoffman_singleton, None),
    }


def _affine_fixture_builders() -> dict:
    from .families import agl1, agammal1

    return {
        "agl1-5": lambda: agl1(5),
        "agl1-9": lambda: agl1(9),
        "agammal1-8": lambda: agammal1(8),
    }

SUITE_NAMES = ("counting", "selfnorm", "sylow", "weiss", "affine")


def _ensure_graph_fixture(name: str, config: RunConfig) -> tuple[Graph, Group, dict]:
    """Load or materialize the canonical fixture files, returning the graph,
    the acting group, and an inputs descriptor with content hashes."""
    from . import fileio
    from .graphs import automorphism_group

    config.fixture_dir.mkdir(parents=True, exist_ok=True)
    graph_path = config.fixture_dir / f"{name}.graph"
    group_path = config.fixture_dir / f"{name}.group"
    builders = _graph_fixture_builders()
    graph_builder, group_builder = builders[name]
    if graph_path.exists():
        graph = fileio.read_graph(graph_path)
    else:
        graph = graph_builder()
        fileio.write_graph(graph, graph_path)
    if group_path.exists():
        group = fileio.read_group(group_path)
    else:
        group = group_builder() if group_builder else automorphism_group(graph)
        fileio.write_group(group, group_path)
    inputs = {
        "graph_file": graph_path.name,
        "graph_sha256": fileio.sha256_of_file(graph_path),
        "group_file": group_path.name,
        "group_sha256": fileio.sha256_of_file(group_path),
    }
    return graph, group, inputs


def _ensure_affine_fixture(name: str, config: RunConfig) -> tuple[Group, dict]:
    from . import fileio

    config.fixture_dir.mkdir(parents=True, exist_ok=True)
    group_path = config.fixture_dir / f"{name}.group"
    if group_path.exists():
        group = fileio.read_group(group_path)
    else:
        group = _affine_fixture_builders()[name]()
        fileio.write_group(group, group_path)
    inputs = {
        "group_file": group_path.name,
        "group_sha256": fileio.sha256_of_file(group_path),
    }
    return group, inputs


def _harvest_normal_subgroups(group: Group) -> list[Group]:
    if group.order > NORMAL_SWEEP_BOUND:
        return []
    return [n for n in normal_subgroups(group, NORMAL_SWEEP_BOUND) if n.order > 1]


def run_lemma_suite(
    suites: list[str] | None = None, config: RunConfig = DEFAULT_CONFIG
) -> list[SuiteRow]:
    """Run the requested lemma suites over the fixture manifest.

    Fixture files are generated on demand into the configured directory so
    certificates can reference immutable inputs by content hash.
    """
    wanted = list(suites) if suites else list(SUITE_NAMES)
    for s in wanted:
        if s not in SUITE_NAMES:
            raise ValueError(f"unknown suite {s!r}; choose from {SUITE_NAMES}")
    rows: list[SuiteRow] = []
    pair_suites = [s for s in wanted if s in ("counting", "selfnorm", "sylow")]
    if pair_suites or "weiss" in wanted:
        for name in _graph_fixture_builders():
            graph, group, inputs = _ensure_graph_fixture(name, config)
            if "weiss" in wanted:
                cert = s_transitivity_degree(group, graph, inputs, config)
                rows.append(SuiteRow(name, "weiss", "G", cert))
            if pair_suites:
                for normal in _harvest_normal_subgroups(group):
                    subject = f"N(order={normal.order})"
                    if "counting" in wanted:
                        cert = counting_identity_check(group, normal, graph, inputs, config)
                        rows.append(SuiteRow(name, "counting", subject, cert))
                    if "selfnorm" in wanted:
                        cert = selfnorm_check(group, normal, graph, inputs, config)
                        rows.append(SuiteRow(name, "selfnorm", subject, cert))
                    if "sylow" in wanted:
                        cert = sylow_arc_check(group, normal, graph, inputs, config)
                        rows.append(SuiteRow(name, "sylow", subject, cert))
    if "affine" in wanted:
        for name in _affine_fixture_builders():
            group, inputs = _ensure_affine_fixture(name, config)
            for normal in _harvest_normal_subgroups(group):
                subject = f"N(order={normal.order})"
                cert = affine_normal_check(group, normal, inputs, config)
                rows.append(SuiteRow(name, "affine", subject, cert))
    return rows
