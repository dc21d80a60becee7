"""Independent brute-force reference implementations used only by tests.

Everything here recomputes results from first principles (plain Python loops,
exhaustive enumeration), deliberately sharing no code with the package.
"""

from __future__ import annotations

import math

import numpy as np


def random_distance_matrix(rng: np.random.Generator, n: int, ties: bool = False) -> np.ndarray:
    """Symmetric, nonnegative, zero-diagonal matrix of random distances."""
    if ties:
        # coarse grid so equal off-diagonal values actually occur
        tri = rng.integers(0, 4, size=n * (n - 1) // 2).astype(float)
    else:
        tri = rng.random(n * (n - 1) // 2)
    values = np.zeros((n, n))
    iu = np.triu_indices(n, k=1)
    values[iu] = tri
    values[(iu[1], iu[0])] = tri
    return values


def brute_diameter(members, values: np.ndarray, kind: str) -> float:
    pairs = []
    members = sorted(members)
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            pairs.append(float(values[members[a], members[b]]))
    if not pairs:
        return 0.0
    if kind == "complete":
        return max(pairs)
    return math.fsum(pairs) / len(pairs)


def brute_index(members, primary: np.ndarray, alt: np.ndarray, kind: str) -> float:
    return brute_diameter(members, alt, kind) - brute_diameter(members, primary, kind)


def brute_pair_count(a, b) -> int:
    assert len(a) == len(b)
    count = 0
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if (a[i] == a[j]) != (b[i] == b[j]):
                count += 1
    return count


def naive_agnes(values: np.ndarray, linkage: str) -> list[tuple[float, frozenset[int]]]:
    """From-scratch agglomerative clustering, one linkage evaluation per pair
    per step, with the deterministic tie rule: among minimal-distance pairs,
    merge the one whose (smaller lowest member, larger lowest member) is
    lexicographically least. Returns the merge sequence as (height, members).
    """
    n = values.shape[0]
    clusters: list[list[int]] = [[i] for i in range(n)]
    merges: list[tuple[float, frozenset[int]]] = []

    def linkage_value(a: list[int], b: list[int]) -> float:
        cross = []
        for i in sorted(a):
            for j in sorted(b):
                cross.append(float(values[i, j]))
        if linkage == "complete":
            return max(cross)
        return math.fsum(cross) / len(cross)

    while len(clusters) > 1:
        best = None
        best_pair = None
        for x in range(len(clusters)):
            for y in range(x + 1, len(clusters)):
                d = linkage_value(clusters[x], clusters[y])
                low_x, low_y = min(clusters[x]), min(clusters[y])
                key = (d, min(low_x, low_y), max(low_x, low_y))
                if best is None or key < best:
                    best = key
                    best_pair = (x, y)
        x, y = best_pair
        merged = sorted(clusters[x] + clusters[y])
        merges.append((best[0], frozenset(merged)))
        clusters = [c for k, c in enumerate(clusters) if k not in (x, y)]
        clusters.append(merged)
    return merges


def order_cost(values: np.ndarray, order) -> float:
    return math.fsum(float(values[order[k], order[k + 1]]) for k in range(len(order) - 1))


def all_flip_orderings(nodes, root_id: int):
    """Every leaf order reachable by flipping internal nodes of a dendrogram.

    ``nodes`` is the package's node list; only ``children``/``node_id`` are
    used, so this stays structural and independent of the ordering code.
    """

    def expand(node_id: int):
        node = nodes[node_id]
        if node.children is None:
            return [[node.node_id]]
        left, right = node.children
        results = []
        for lo in expand(left):
            for ro in expand(right):
                results.append(lo + ro)
                results.append(ro + lo)
        return results

    seen = set()
    unique = []
    for order in expand(root_id):
        key = tuple(order)
        if key not in seen:
            seen.add(key)
            unique.append(order)
    return unique


def grid_euclidean_by_hand(a, b) -> float:
    return math.sqrt(math.fsum((x - y) ** 2 for x, y in zip(a, b)))


def enumerate_collinear(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Random distinct points on a line and their |difference| distance matrix."""
    coords = np.sort(rng.choice(np.arange(10 * n), size=n, replace=False).astype(float))
    coords += rng.random(n) * 0.05  # break exact grid regularity, keep order
    values = np.abs(coords[:, None] - coords[None, :])
    return coords, values
