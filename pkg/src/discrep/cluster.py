"""Agglomerative hierarchical clustering and dendrogram structure.

Bottom-up clustering over a normalized distance matrix with complete or
average linkage, plus the structural queries the views need: cutting at a
height, cutting into k clusters, cluster representatives (medoids), and an
exact dynamic program that orders leaves to minimize the summed distance
between display neighbors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .core import DistanceMatrix, Normalization


class Linkage(str, Enum):
    COMPLETE = "complete"
    AVERAGE = "average"


@dataclass(frozen=True)
class ClusterNode:
    node_id: int
    members: tuple[int, ...]  # sorted case indices
    height: float  # merge distance; 0 for leaves
    children: tuple[int, int] | None
    representative: int  # medoid case index

    @property
    def is_leaf(self) -> bool:
        return self.children is None


@dataclass(eq=False)
class Dendrogram:
    space_name: str
    normalization: Normalization
    linkage: Linkage
    nodes: list[ClusterNode]  # indexed by node_id; leaves 0..n-1, merges n..2n-2
    leaf_order: tuple[int, ...]

    @property
    def n_cases(self) -> int:
        return (len(self.nodes) + 1) // 2

    @property
    def root_id(self) -> int:
        return len(self.nodes) - 1

    def node(self, node_id: int) -> ClusterNode:
        return self.nodes[node_id]

    def to_json(self) -> dict:
        return {
            "space": self.space_name,
            "linkage": self.linkage.value,
            "normalization": self.normalization.value,
            "leafOrder": list(self.leaf_order),
            "nodes": [
                {
                    "id": node.node_id,
                    "height": node.height,
                    "members": list(node.members),
                    "children": list(node.children) if node.children else None,
                    "representative": node.representative,
                }
                for node in self.nodes
            ],
        }


def _medoid(members: tuple[int, ...], values: np.ndarray) -> int:
    """Member minimizing the summed distance to the others; ties take the smallest index."""
    if len(members) == 1:
        return members[0]
    idx = np.asarray(members)
    sums = values[np.ix_(idx, idx)].sum(axis=1)
    return int(idx[np.argmin(sums)])  # argmin takes the first minimum; members are sorted


def _cross_linkage(values: np.ndarray, a: tuple[int, ...], b: tuple[int, ...], linkage: Linkage) -> float:
    block = values[np.ix_(a, b)]
    if linkage is Linkage.COMPLETE:
        return float(block.max())
    # fsum is correctly rounded regardless of enumeration order, so independent
    # implementations of the same mean agree bit for bit
    return math.fsum(block.ravel().tolist()) / block.size


def agnes(D: DistanceMatrix, linkage: Linkage) -> Dendrogram:
    """Agglomerative nesting over a normalized distance matrix.

    Starts from singletons and repeatedly merges the pair of clusters with the
    minimal linkage distance (max pairwise for complete, mean pairwise for
    average), recording that distance as the merge height. Among equal-distance
    pairs the one whose (smaller lowest member, larger lowest member) key is
    lexicographically least merges first, which makes node ids, heights and the
    default leaf order fully deterministic.
    """
    if D.normalization not in (Normalization.RANK, Normalization.MINMAX):
        raise ValueError("agnes expects a rank- or min-max-normalized matrix")
    values = D.values
    n = D.n
    if n < 2:
        raise ValueError("need at least 2 cases to cluster")

    nodes = [ClusterNode(i, (i,), 0.0, None, i) for i in range(n)]
    active: dict[int, tuple[int, ...]] = {i: (i,) for i in range(n)}
    link: dict[tuple[int, int], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            link[(i, j)] = float(values[i, j])

    for step in range(n - 1):
        best_key = None
        best_pair = None
        for (ida, idb), dist in link.items():
            low_a, low_b = active[ida][0], active[idb][0]
            key = (dist, min(low_a, low_b), max(low_a, low_b))
            if best_key is None or key < best_key:
                best_key = key
                best_pair = (ida, idb)
        ida, idb = best_pair
        # child order: smaller lowest member first (stable display order)
        if active[ida][0] > active[idb][0]:
            ida, idb = idb, ida
        members = tuple(sorted(active[ida] + active[idb]))
        new_id = n + step
        nodes.append(
            ClusterNode(
                node_id=new_id,
                members=members,
                height=best_key[0],
                children=(ida, idb),
                representative=_medoid(members, values),
            )
        )
        del active[ida], active[idb]
        for pair in [p for p in link if ida in p or idb in p]:
            del link[pair]
        for other, other_members in active.items():
            if linkage is Linkage.COMPLETE:
                # max of the two child maxes equals the max over all cross pairs
                d = max(
                    _cross_linkage(values, nodes[ida].members, other_members, linkage),
                    _cross_linkage(values, nodes[idb].members, other_members, linkage),
                )
            else:
                d = _cross_linkage(values, members, other_members, linkage)
            link[(min(other, new_id), max(other, new_id))] = d
        active[new_id] = members

    leaf_order = _traversal_order(nodes, len(nodes) - 1)
    return Dendrogram(
        space_name=D.space_name,
        normalization=D.normalization,
        linkage=linkage,
        nodes=nodes,
        leaf_order=tuple(leaf_order),
    )


def _traversal_order(nodes: list[ClusterNode], root: int) -> list[int]:
    order: list[int] = []
    stack = [root]
    while stack:
        node = nodes[stack.pop()]
        if node.is_leaf:
            order.append(node.node_id)
        else:
            left, right = node.children
            stack.append(right)
            stack.append(left)
    return order


def cut_at_height(dendrogram: Dendrogram, h: float) -> list[int]:
    """Maximal nodes whose height is <= h; their member sets partition all cases."""
    if h < 0:
        raise ValueError("cut height must be nonnegative")
    result: list[int] = []
    stack = [dendrogram.root_id]
    while stack:
        node = dendrogram.nodes[stack.pop()]
        if node.height <= h:
            result.append(node.node_id)
        else:
            left, right = node.children
            stack.append(right)
            stack.append(left)
    return result


def cut_into_clusters(dendrogram: Dendrogram, k: int) -> list[int]:
    """Partition into exactly k clusters by undoing the last k-1 merges."""
    n = dendrogram.n_cases
    if not 1 <= k <= n:
        raise ValueError(f"k must be between 1 and {n}")
    cut = {dendrogram.root_id}
    for node_id in range(2 * n - 2, 2 * n - 1 - k, -1):
        node = dendrogram.nodes[node_id]
        cut.discard(node_id)
        cut.update(node.children)
    return sorted(cut)


def representative(node: ClusterNode, D: DistanceMatrix) -> int:
    """Medoid of the node's members under D; ties take the smallest case index."""
    return _medoid(node.members, D.values)


def order_leaves(dendrogram: Dendrogram, D: DistanceMatrix) -> Dendrogram:
    """Optimal leaf ordering by exact dynamic programming.

    Among the 2^(n-1) orderings reachable by flipping internal nodes, finds one
    minimizing the sum of D over adjacent leaf pairs and returns a dendrogram
    with that leaf order; the tree topology is untouched. O(n^3) time over the
    whole tree, fine at the dataset sizes this engine targets.
    """
    values = D.values
    nodes = dendrogram.nodes
    if dendrogram.n_cases < 3:
        return dendrogram

    # cost[v][p, q]: minimal cost of an ordering of v's leaves starting at
    # members[p] and ending at members[q]; inf where no flip arrangement can
    # realize that endpoint pair
    cost: dict[int, np.ndarray] = {}
    pick: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    for node in nodes:
        if node.is_leaf:
            cost[node.node_id] = np.zeros((1, 1))
            continue
        a, b = node.children
        la, lb = nodes[a].members, nodes[b].members
        ca, cb = cost[a], cost[b]
        dab = values[np.ix_(la, lb)]
        # t[u, k] = min_m ca[u, m] + D[m, k]: m is the last leaf of the left
        # block, k the first leaf of the right block
        s1 = ca[:, :, None] + dab[None, :, :]
        argm = s1.argmin(axis=1)
        t = s1.min(axis=1)
        # oriented[u, w] = min_k t[u, k] + cb[k, w]
        s2 = t[:, :, None] + cb[None, :, :]
        argk = s2.argmin(axis=1)
        oriented = s2.min(axis=1)

        pos = {case: p for p, case in enumerate(node.members)}
        pos_a = [pos[c] for c in la]
        pos_b = [pos[c] for c in lb]
        full = np.full((len(node.members), len(node.members)), np.inf)
        full[np.ix_(pos_a, pos_b)] = oriented
        full[np.ix_(pos_b, pos_a)] = oriented.T  # a reversed ordering costs the same
        cost[node.node_id] = full
        pick[node.node_id] = (argm, argk)

    root = nodes[dendrogram.root_id]
    ra, rb = root.children
    la, lb = nodes[ra].members, nodes[rb].members
    pos = {case: p for p, case in enumerate(root.members)}
    best = None
    best_pair = None
    for u in la:
        for w in lb:
            c = cost[root.node_id][pos[u], pos[w]]
            if best is None or c < best:
                best = c
                best_pair = (u, w)

    def unroll(node_id: int, u: int, w: int) -> list[int]:
        node = nodes[node_id]
        if node.is_leaf:
            return [u]
        a, b = node.children
        la, lb = nodes[a].members, nodes[b].members
        if u in la and w in lb:
            argm, argk = pick[node_id]
            u_idx, w_idx = la.index(u), lb.index(w)
            k_idx = int(argk[u_idx, w_idx])
            m_idx = int(argm[u_idx, k_idx])
            return unroll(a, u, la[m_idx]) + unroll(b, lb[k_idx], w)
        return list(reversed(unroll(node_id, w, u)))

    order = unroll(root.node_id, best_pair[0], best_pair[1])
    return replace(dendrogram, leaf_order=tuple(order))
