"""Fixed-length walk kernels, computed two ways.

The kernel between graphs G and H sums, over all pairs of equal-length
walks (one from each graph), the product of vertex-kernel values along the
walk positions and edge-kernel values along the steps.

*Implicit scheme* — :func:`walk_kernel_implicit`: build the weighted
direct product graph (one vertex per compatible vertex pair, one edge per
compatible edge pair) and run the counting recursion

    r_0(x) = w(x),     r_i(x) = w(x) * sum over xy of w(xy) * r_{i-1}(y)

whose total after ``length`` rounds is exactly the kernel value.  The
recursion touches each product edge once per round, so a pair evaluation
costs O(product size * length) and never materializes features.

*Explicit scheme* — :func:`walk_features_explicit`: for Dirac base kernels
on discrete annotations, a walk contributes through its label sequence
(vertex and edge labels, alternating) only, so each graph maps to a sparse
count vector over sequences, built by a backward dynamic program that
keeps one map per vertex and extends walks one step per round.  Kernel
values are then plain sparse dot products.

Both schemes stay in exact integer arithmetic for Dirac kernels (the
recursion sums float64 integers, exact below 2**53; the feature counts are
Python ints), which is what makes their equality testable bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .errors import ContractError, ParameterError
from .features import TAG_WALK, FeatureVector, feature_key
from .graphs import Graph
from .kernels import EdgeKernelSpec, VertexKernelSpec


@dataclass
class WeightedProductGraph:
    """Direct product of two graphs restricted to positive kernel weights.

    ``pairs[x] = (u, v)`` lists the product vertices in lexicographic
    (u, v) order; ``vertex_weights[x]`` is the vertex-kernel value.  Edges
    are stored once per unordered pair as parallel arrays; an edge exists
    where both factor edges exist and the edge kernel is positive, and its
    weight is that kernel value.
    """

    pairs: np.ndarray            # (N, 2) int64
    vertex_weights: np.ndarray   # (N,) float64
    edge_u: np.ndarray           # (M,) int64, indices into pairs
    edge_v: np.ndarray           # (M,) int64
    edge_weights: np.ndarray     # (M,) float64

    @property
    def num_vertices(self) -> int:
        return int(self.pairs.shape[0])

    @property
    def num_edges(self) -> int:
        return int(self.edge_u.shape[0])

    def neighbor_lists(self) -> List[List[int]]:
        """Adjacency lists over product-vertex indices (for inspection)."""
        out: List[List[int]] = [[] for _ in range(self.num_vertices)]
        for a, b in zip(self.edge_u.tolist(), self.edge_v.tolist()):
            out[a].append(b)
            out[b].append(a)
        return [sorted(nbrs) for nbrs in out]


def _edge_annotations(g: Graph) -> np.ndarray:
    if g.edge_labels is not None:
        return g.edge_labels
    return np.zeros(g.m, dtype=np.int64)


def _labels_or_zero(values: Optional[np.ndarray], count: int) -> np.ndarray:
    if values is None:
        return np.zeros(count, dtype=np.int64)
    return values


def _dirac_wdpg(g: Graph, h: Graph, match_edge_labels: bool) -> WeightedProductGraph:
    """Specialized construction when all kept weights are exactly 1.

    Dirac vertex and Dirac/uniform edge kernels only ever keep weight-1
    pairs, so the matrices of kernel values shrink to boolean masks and
    the weight arrays to ones.  This is the hot path of Gram computation;
    it returns exactly what the general construction would.
    """
    mask = np.equal.outer(_labels_or_zero(g.vertex_labels, g.n),
                          _labels_or_zero(h.vertex_labels, h.n))
    flat = np.flatnonzero(mask)
    count = flat.size
    pairs = np.empty((count, 2), dtype=np.int64)
    np.divmod(flat, h.n, out=(pairs[:, 0], pairs[:, 1]))
    vertex_weights = np.ones(count, dtype=np.float64)

    empty = np.zeros(0, dtype=np.int64)
    if count == 0 or g.m == 0 or h.m == 0:
        return WeightedProductGraph(
            pairs, vertex_weights, empty, empty, np.zeros(0, dtype=np.float64)
        )

    index_flat = np.full(g.n * h.n, -1, dtype=np.int64)
    index_flat[flat] = np.arange(count, dtype=np.int64)
    compatible = (
        np.equal.outer(_edge_annotations(g), _edge_annotations(h))
        if match_edge_labels
        else None
    )
    ga, gb = g.edges[:, 0], g.edges[:, 1]
    ha, hb = h.edges[:, 0], h.edges[:, 1]
    span = h.n
    chunks_u: List[np.ndarray] = []
    chunks_v: List[np.ndarray] = []
    for (l0, l1), (r0, r1) in (((ga, ha), (gb, hb)), ((ga, hb), (gb, ha))):
        side_a = index_flat[l0[:, None] * span + l1[None, :]]
        side_b = index_flat[r0[:, None] * span + r1[None, :]]
        valid = (side_a >= 0) & (side_b >= 0)
        if compatible is not None:
            valid &= compatible
        chunks_u.append(side_a[valid])
        chunks_v.append(side_b[valid])
    edge_u = np.concatenate(chunks_u)
    return WeightedProductGraph(
        pairs,
        vertex_weights,
        edge_u,
        np.concatenate(chunks_v),
        np.ones(edge_u.size, dtype=np.float64),
    )


def build_wdpg(
    g: Graph,
    h: Graph,
    vertex_kernel: VertexKernelSpec,
    edge_kernel: EdgeKernelSpec,
) -> WeightedProductGraph:
    """Construct the weighted direct product of ``g`` and ``h``.

    Product vertices are the pairs with positive vertex-kernel value, in
    lexicographic order.  Every unordered product edge arises from exactly
    one (g-edge, h-edge, orientation) combination, so the enumeration
    below emits each edge once.
    """
    if vertex_kernel.kind == "dirac" and edge_kernel.kind in ("dirac", "uniform"):
        return _dirac_wdpg(g, h, edge_kernel.kind == "dirac")

    weights = vertex_kernel.matrix(g, h)
    mask = weights > 0
    pairs = np.argwhere(mask).astype(np.int64)
    count = pairs.shape[0]
    vertex_weights = weights[mask].astype(np.float64)

    index = np.full((g.n, h.n), -1, dtype=np.int64)
    if count:
        index[mask] = np.arange(count, dtype=np.int64)

    empty = np.zeros(0, dtype=np.int64)
    if count == 0 or g.m == 0 or h.m == 0:
        return WeightedProductGraph(
            pairs, vertex_weights, empty, empty, np.zeros(0, dtype=np.float64)
        )

    edge_values = edge_kernel.matrix(_edge_annotations(g), _edge_annotations(h))
    ga, gb = g.edges[:, 0], g.edges[:, 1]
    ha, hb = h.edges[:, 0], h.edges[:, 1]

    chunks_u: List[np.ndarray] = []
    chunks_v: List[np.ndarray] = []
    chunks_w: List[np.ndarray] = []
    for left, right in (((ga, ha), (gb, hb)), ((ga, hb), (gb, ha))):
        side_a = index[left[0]][:, left[1]]
        side_b = index[right[0]][:, right[1]]
        valid = (side_a >= 0) & (side_b >= 0) & (edge_values > 0)
        chunks_u.append(side_a[valid])
        chunks_v.append(side_b[valid])
        chunks_w.append(edge_values[valid])
    return WeightedProductGraph(
        pairs,
        vertex_weights,
        np.concatenate(chunks_u),
        np.concatenate(chunks_v),
        np.concatenate(chunks_w).astype(np.float64),
    )


def _walk_sums(
    pg: WeightedProductGraph, length: int, all_sums: bool = True
) -> List[float]:
    """Recursion mass after 0..length rounds (or only the last one).

    With ``all_sums`` false the returned list holds a single element, the
    round-``length`` total, skipping the per-round reductions.  Unit
    vertex or edge weights (the Dirac hot path) skip their multiplies;
    the two bincount passes per round are fused over a symmetric edge
    list built once.
    """
    if pg.num_vertices == 0:
        return [0.0] * (length + 1) if all_sums else [0.0]
    weights = pg.vertex_weights
    unit_vertices = bool((weights == 1.0).all())
    r = weights
    sums = [float(r.sum())] if all_sums else None

    if pg.num_edges == 0:
        if all_sums:
            return sums + [0.0] * length
        return [float(r.sum())] if length == 0 else [0.0]

    n = pg.num_vertices
    src = np.concatenate((pg.edge_u, pg.edge_v))
    dst = np.concatenate((pg.edge_v, pg.edge_u))
    sym_weights = None
    if not bool((pg.edge_weights == 1.0).all()):
        sym_weights = np.concatenate((pg.edge_weights, pg.edge_weights))
    for _ in range(length):
        message = r[dst] if sym_weights is None else sym_weights * r[dst]
        flow = np.bincount(src, weights=message, minlength=n)
        r = flow if unit_vertices else weights * flow
        if all_sums:
            sums.append(float(r.sum()))
    return sums if all_sums else [float(r.sum())]


def walk_kernel_implicit(
    g: Graph,
    h: Graph,
    vertex_kernel: VertexKernelSpec,
    edge_kernel: EdgeKernelSpec,
    length: int,
) -> float:
    """Walk kernel for one fixed length, via the product-graph recursion.

    ``length = 0`` compares single vertices: the value is the sum of all
    positive vertex-kernel values.
    """
    if length < 0:
        raise ParameterError(f"walk length must be >= 0, got {length}")
    pg = build_wdpg(g, h, vertex_kernel, edge_kernel)
    return _walk_sums(pg, length, all_sums=False)[-1]


def max_walk_kernel_implicit(
    g: Graph,
    h: Graph,
    vertex_kernel: VertexKernelSpec,
    edge_kernel: EdgeKernelSpec,
    length: int,
    coefficients: Optional[Sequence[float]] = None,
) -> float:
    """Sum of per-length walk kernels up to ``length``, one recursion pass.

    ``coefficients[i]`` weights the length-``i`` term (all 1 by default).
    """
    if length < 0:
        raise ParameterError(f"walk length must be >= 0, got {length}")
    if coefficients is None:
        coefficients = [1.0] * (length + 1)
    if len(coefficients) != length + 1:
        raise ParameterError(
            f"need {length + 1} coefficients for length {length}, "
            f"got {len(coefficients)}"
        )
    pg = build_wdpg(g, h, vertex_kernel, edge_kernel)
    sums = _walk_sums(pg, length)
    return float(sum(c * s for c, s in zip(coefficients, sums)))


def _walk_labels(g: Graph) -> List[int]:
    if g.vertex_labels is None:
        if g.vertex_attributes is not None:
            raise ContractError(
                "explicit walk features need discrete vertex labels; this "
                "graph carries only continuous attributes — use the "
                "implicit scheme"
            )
        return [0] * g.n
    return [int(x) for x in g.vertex_labels]


def walk_features_explicit(g: Graph, length: int) -> FeatureVector:
    """Count vector over walk label sequences of one fixed length.

    A walk (v_0, e_1, v_1, ..., v_len) is keyed by its alternating label
    sequence prefixed with the length, so different lengths never collide.
    Unlabeled edges contribute a shared pseudo-label 0.  The dot product
    of two such vectors equals the implicit walk kernel with Dirac vertex
    and edge kernels.
    """
    if length < 0:
        raise ParameterError(f"walk length must be >= 0, got {length}")
    labels = _walk_labels(g)
    per_vertex: List[dict] = [{(labels[v],): 1} for v in range(g.n)]
    if length and g.n:
        ladj = g.labeled_adjacency()
        for _ in range(length):
            nxt: List[dict] = [{} for _ in range(g.n)]
            for u in range(g.n):
                lu = labels[u]
                bucket = nxt[u]
                for v, edge_label in ladj[u]:
                    prefix = (lu, edge_label)
                    for seq, count in per_vertex[v].items():
                        key = prefix + seq
                        bucket[key] = bucket.get(key, 0) + count
            per_vertex = nxt  # previous round's maps are released here
    total: dict = {}
    for bucket in per_vertex:
        for seq, count in bucket.items():
            total[seq] = total.get(seq, 0) + count
    return FeatureVector(
        {feature_key(TAG_WALK, (length, *seq)): c for seq, c in total.items()}
    )
