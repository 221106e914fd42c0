"""Gram matrices over datasets: assembly, normalization, diagnostics, export.

Two assembly routes mirror the two computation schemes.
:func:`gram_implicit` evaluates a pairwise kernel function on the upper
triangle and mirrors it; its cost is all in the per-pair evaluations.
:func:`gram_explicit` first materializes one sparse feature vector per
graph, then fills the triangle with sparse dot products; the timing
breakdown keeps the two phases separate because their balance is exactly
what distinguishes the schemes.

Values are deterministic functions of the inputs — evaluation order never
changes a result, only the wall-clock numbers in ``timings``.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from .errors import GKError, GramError, ParameterError
from .features import FeatureVector
from .graphs import Dataset, Graph
from .rng import SplitMix64


@dataclass
class GramMatrix:
    """A kernel matrix with its provenance and timing breakdown."""

    values: np.ndarray
    kernel: str
    graph_ids: List[str]
    class_labels: Optional[np.ndarray] = None
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def timing_block(self) -> str:
        """Key/value text block (JSON) describing how time was spent."""
        import json

        payload: Dict[str, object] = {"kernel": self.kernel, "graphs": self.n}
        payload.update(
            {
                k: (round(v, 6) if isinstance(v, float) else v)
                for k, v in self.timings.items()
            }
        )
        return json.dumps(payload, indent=2)


def _ids(ds: Dataset) -> List[str]:
    return [f"{ds.name}[{i}]" for i in range(len(ds))]


def gram_implicit(
    ds: Dataset,
    pair_kernel: Callable[[Graph, Graph], float],
    kernel_name: str = "implicit",
) -> GramMatrix:
    """Fill the Gram matrix by evaluating ``pair_kernel`` per graph pair.

    Any exception during a pair evaluation aborts the computation with the
    failing pair's indices attached.
    """
    n = len(ds)
    values = np.zeros((n, n), dtype=np.float64)
    start = time.perf_counter()
    for i in range(n):
        gi = ds[i]
        for j in range(i, n):
            try:
                value = pair_kernel(gi, ds[j])
            except GKError as exc:
                raise GramError(
                    f"{kernel_name}: pair ({i}, {j}) failed: {exc}"
                ) from exc
            values[i, j] = value
            values[j, i] = value
    elapsed = time.perf_counter() - start
    return GramMatrix(
        values,
        kernel_name,
        _ids(ds),
        ds.class_labels.copy(),
        {"scheme": "implicit", "seconds_pairs": elapsed, "seconds_total": elapsed},
    )


def gram_explicit(
    ds: Dataset,
    feature_fn: Callable[[Graph], FeatureVector],
    kernel_name: str = "explicit",
) -> GramMatrix:
    """Materialize per-graph feature vectors, then dot them pairwise.

    The timing breakdown reports the feature-map phase and the dot phase
    separately, plus the accumulated number of stored features.
    """
    n = len(ds)
    start = time.perf_counter()
    vectors: List[Dict[bytes, float]] = []
    for i, g in enumerate(ds.graphs):
        try:
            vectors.append(feature_fn(g).entries)
        except GKError as exc:
            raise GramError(f"{kernel_name}: graph {i} failed: {exc}") from exc
    map_seconds = time.perf_counter() - start

    values = np.zeros((n, n), dtype=np.float64)
    start = time.perf_counter()
    for i in range(n):
        a = vectors[i]
        for j in range(i, n):
            b = vectors[j]
            small, large = (a, b) if len(a) <= len(b) else (b, a)
            lookup = large.get
            total = 0
            for key, weight in small.items():
                other = lookup(key)
                if other is not None:
                    total += weight * other
            values[i, j] = total
            values[j, i] = total
    dot_seconds = time.perf_counter() - start
    return GramMatrix(
        values,
        kernel_name,
        _ids(ds),
        ds.class_labels.copy(),
        {
            "scheme": "explicit",
            "seconds_feature_maps": map_seconds,
            "seconds_dot": dot_seconds,
            "seconds_total": map_seconds + dot_seconds,
            "stored_features": int(sum(len(v) for v in vectors)),
        },
    )


def normalize(gram: GramMatrix) -> GramMatrix:
    """Unit-diagonal normalization K'_ij = K_ij / sqrt(K_ii * K_jj).

    Rows and columns whose diagonal entry is 0 are set to 0.  Applying the
    normalization twice changes nothing.
    """
    diag = np.diag(gram.values).copy()
    if (diag < 0).any():
        raise ParameterError("normalization needs a non-negative diagonal")
    scale = np.sqrt(diag)
    with np.errstate(divide="ignore", invalid="ignore"):
        values = gram.values / np.outer(scale, scale)
    values[~np.isfinite(values)] = 0.0
    values[diag == 0, :] = 0.0
    values[:, diag == 0] = 0.0
    return GramMatrix(
        values,
        f"{gram.kernel}/normalized",
        list(gram.graph_ids),
        None if gram.class_labels is None else gram.class_labels.copy(),
        dict(gram.timings),
    )


def min_eigenvalue_estimate(
    matrix: np.ndarray, tol: float = 1e-8, max_iterations: int = 20_000
) -> float:
    """Smallest eigenvalue of a symmetric matrix via shifted power iteration.

    The spectrum is flipped around a Gershgorin upper bound c (every
    eigenvalue of c*I - K is non-negative), the dominant eigenvalue of the
    flipped matrix is found by power iteration with a fixed pseudo-random
    start vector, and mapped back.  Convergence is declared when the
    eigenvalue residual drops below ``tol``; hitting the iteration cap
    first emits a warning and returns the best estimate.
    """
    k = np.asarray(matrix, dtype=np.float64)
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        raise ParameterError(f"need a square matrix, got shape {k.shape}")
    if k.shape[0] == 0:
        raise ParameterError("need a non-empty matrix")
    if not np.allclose(k, k.T, rtol=0, atol=1e-12 * max(1.0, float(np.abs(k).max()))):
        raise ParameterError("matrix is not symmetric")
    n = k.shape[0]
    if n == 1:
        return float(k[0, 0])

    bound = float((np.diag(k) + (np.abs(k).sum(axis=1) - np.abs(np.diag(k)))).max())
    flipped = bound * np.eye(n) - k
    if float(np.abs(flipped).max()) == 0.0:
        return bound  # the matrix is bound * identity

    stream = SplitMix64(0x9E3779B9)

    def _draw() -> np.ndarray:
        v = np.array([stream.uniform() - 0.5 for _ in range(n)], dtype=np.float64)
        return v / np.linalg.norm(v)

    vec = _draw()
    estimate = float(vec @ flipped @ vec)
    for _ in range(max_iterations):
        nxt = flipped @ vec
        norm = float(np.linalg.norm(nxt))
        if norm == 0.0:
            # the start vector landed in the null space; redraw
            vec = _draw()
            continue
        vec = nxt / norm
        estimate = float(vec @ flipped @ vec)
        residual = float(np.linalg.norm(flipped @ vec - estimate * vec))
        if residual <= tol:
            break
    else:
        warnings.warn(
            f"power iteration did not reach residual {tol} after "
            f"{max_iterations} iterations; returning the best estimate",
            RuntimeWarning,
            stacklevel=2,
        )
    return bound - estimate


def export_gram(gram: GramMatrix, fmt: str, path: str) -> str:
    """Write the matrix as ``csv`` or ``svm-precomputed``; returns ``path``.

    CSV rows hold the full-precision values.  The SVM precomputed-kernel
    layout prefixes each row with the graph's class label and a 1-based
    row index feature: ``<label> 0:<i+1> 1:<K_i1> ... n:<K_in>``.
    """
    if fmt == "csv":
        with open(path, "w") as fh:
            for row in gram.values:
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
        return path
    if fmt == "svm-precomputed":
        labels = (
            gram.class_labels
            if gram.class_labels is not None
            else np.zeros(gram.n, dtype=np.int64)
        )
        with open(path, "w") as fh:
            for i, row in enumerate(gram.values):
                cells = " ".join(f"{j + 1}:{v:.12g}" for j, v in enumerate(row))
                fh.write(f"{int(labels[i])} 0:{i + 1} {cells}\n")
        return path
    raise ParameterError(f"unknown export format {fmt!r} (csv, svm-precomputed)")


def load_gram_csv(path: str) -> np.ndarray:
    """Read back a CSV written by :func:`export_gram`."""
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([float(tok) for tok in line.split(",")])
    return np.array(rows, dtype=np.float64)
