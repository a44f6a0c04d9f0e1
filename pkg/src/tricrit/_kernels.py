"""Hot loops of the gluing enumeration.

A raw gluing of a white-black tree A with a white-gray tree B (both with
m = 2n-1 edges) is stored as a row ``sigma`` of an integer array:
``sigma[e]`` is the edge of B identified with edge ``e`` of A. Two kernels
run over batches of such rows:

* ``admissible_mask`` keeps rows whose black-gray graph is a tree;
* ``orbit_keys`` maps each row to the least base-m code over its orbit
  under Aut(A) x Aut(B), so equal keys mean isomorphic glued graphs.

Each kernel has a numba implementation and an independent pure-numpy one
(the numpy admissibility test uses reduced Laplacian determinants instead
of union-find). Set ``TRICRIT_NO_NUMBA=1`` to force numpy, or call
:func:`set_backend`.
"""
from __future__ import annotations

import os

import numpy as np

try:  # numba is optional
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None

_CHUNK = 1 << 15


def _env_backend() -> str:
    if njit is None or os.environ.get("TRICRIT_NO_NUMBA", "").strip() not in ("", "0"):
        return "numpy"
    return "numba"


BACKEND = _env_backend()


def available_backends() -> list[str]:
    return ["numpy"] + (["numba"] if njit is not None else [])


def set_backend(name: str) -> str:
    """Select ``"numba"`` or ``"numpy"``; returns the previous backend."""
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"backend {name!r} is not available")
    prev, BACKEND = BACKEND, name
    return prev


def encode_rows(rows: np.ndarray, m: int) -> np.ndarray:
    """Base-m integer of each row; lexicographic row order equals numeric order."""
    weights = m ** np.arange(rows.shape[1] - 1, -1, -1, dtype=np.int64)
    return rows.astype(np.int64) @ weights


def decode_keys(keys: np.ndarray, m: int, width: int) -> np.ndarray:
    out = np.empty((len(keys), width), dtype=np.int64)
    rest = np.asarray(keys, dtype=np.int64).copy()
    for i in range(width - 1, -1, -1):
        out[:, i] = rest % m
        rest //= m
    return out


# ---------------------------------------------------------------------------
# numpy implementations


def _admissible_numpy(sigmas: np.ndarray, black_of_a: np.ndarray, gray_of_b: np.ndarray, n: int) -> np.ndarray:
    k, m = sigmas.shape
    out = np.empty(k, dtype=bool)
    if n == 1:
        out[:] = True
        return out
    src = np.broadcast_to(black_of_a, (k, m))
    for lo in range(0, k, _CHUNK):
        hi = min(k, lo + _CHUNK)
        s = src[lo:hi]
        t = gray_of_b[sigmas[lo:hi]] + n
        lap = np.zeros((hi - lo, 2 * n, 2 * n))
        rows = np.arange(hi - lo)[:, None]
        np.add.at(lap, (rows, s, s), 1.0)
        np.add.at(lap, (rows, t, t), 1.0)
        np.add.at(lap, (rows, s, t), -1.0)
        np.add.at(lap, (rows, t, s), -1.0)
        # connected (hence a tree, having 2n-1 edges) iff the reduced Laplacian is nonsingular
        out[lo:hi] = np.abs(np.linalg.det(lap[:, 1:, 1:])) > 0.5
    return out


def _orbit_keys_numpy(sigmas: np.ndarray, alpha_inv: np.ndarray, beta: np.ndarray, m: int) -> np.ndarray:
    keys = np.full(len(sigmas), np.iinfo(np.int64).max, dtype=np.int64)
    for lo in range(0, len(sigmas), _CHUNK):
        block = sigmas[lo:lo + _CHUNK]
        best = keys[lo:lo + _CHUNK]
        for ai in alpha_inv:
            moved = block[:, ai]
            for b in beta:
                np.minimum(best, encode_rows(b[moved], m), out=best)
    return keys


# ---------------------------------------------------------------------------
# numba implementations

if njit is not None:

    @njit(cache=True)
    def _admissible_numba(sigmas, black_of_a, gray_of_b, n):  # pragma: no cover - compiled
        k, m = sigmas.shape
        out = np.empty(k, dtype=np.bool_)
        parent = np.empty(2 * n, dtype=np.int64)
        for r in range(k):
            for i in range(2 * n):
                parent[i] = i
            ok = True
            for e in range(m):
                x = black_of_a[e]
                y = gray_of_b[sigmas[r, e]] + n
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x == y:
                    ok = False
                    break
                parent[x] = y
            out[r] = ok
        return out

    @njit(cache=True)
    def _orbit_keys_numba(sigmas, alpha_inv, beta, m):  # pragma: no cover - compiled
        k, width = sigmas.shape
        out = np.empty(k, dtype=np.int64)
        for r in range(k):
            best = np.iinfo(np.int64).max
            for a in range(alpha_inv.shape[0]):
                for b in range(beta.shape[0]):
                    key = 0
                    for e in range(width):
                        key = key * m + beta[b, sigmas[r, alpha_inv[a, e]]]
                    if key < best:
                        best = key
            out[r] = best
        return out


def admissible_mask(sigmas: np.ndarray, black_of_a: np.ndarray, gray_of_b: np.ndarray, n: int) -> np.ndarray:
    sigmas = np.ascontiguousarray(sigmas, dtype=np.int64)
    black_of_a = np.ascontiguousarray(black_of_a, dtype=np.int64)
    gray_of_b = np.ascontiguousarray(gray_of_b, dtype=np.int64)
    if len(sigmas) == 0:
        return np.zeros(0, dtype=bool)
    if BACKEND == "numba":
        return _admissible_numba(sigmas, black_of_a, gray_of_b, n)
    return _admissible_numpy(sigmas, black_of_a, gray_of_b, n)


def orbit_keys(sigmas: np.ndarray, alpha_inv: np.ndarray, beta: np.ndarray, m: int) -> np.ndarray:
    sigmas = np.ascontiguousarray(sigmas, dtype=np.int64)
    alpha_inv = np.ascontiguousarray(alpha_inv, dtype=np.int64)
    beta = np.ascontiguousarray(beta, dtype=np.int64)
    if len(sigmas) == 0:
        return np.zeros(0, dtype=np.int64)
    if BACKEND == "numba":
        return _orbit_keys_numba(sigmas, alpha_inv, beta, m)
    return _orbit_keys_numpy(sigmas, alpha_inv, beta, m)
