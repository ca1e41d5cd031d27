"""Small dense linear algebra used by certification.

Floating solves report numerical singularity instead of raising; exact solves
run Gauss-Jordan elimination over Q(i) and report exact singularity.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from .scalar import GaussianRational

EPS = np.finfo(float).eps


def is_numerically_singular(A: np.ndarray) -> bool:
    n = A.shape[0]
    if not np.all(np.isfinite(A)):
        return True
    try:
        cond = np.linalg.cond(A)
    except np.linalg.LinAlgError:
        return True
    return not np.isfinite(cond) or cond > 1.0 / (EPS * max(n, 1))


def solve_approx(A: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Solve ``A x = b``; ``None`` when ``A`` is numerically singular."""
    A = np.asarray(A, dtype=complex)
    if is_numerically_singular(A):
        return None
    try:
        return np.linalg.solve(A, np.asarray(b, dtype=complex))
    except np.linalg.LinAlgError:
        return None


def solve_exact(A: Sequence[Sequence[GaussianRational]],
                B: Sequence[Sequence[GaussianRational]]) -> Optional[List[List[GaussianRational]]]:
    """Solve ``A X = B`` exactly for a square ``A`` and n x k right-hand side ``B``.

    Returns the n x k solution as nested lists, or ``None`` if ``A`` is singular.
    """
    n = len(A)
    k = len(B[0]) if n else 0
    M = [list(A[i]) + list(B[i]) for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col]), None)
        if pivot is None:
            return None
        M[col], M[pivot] = M[pivot], M[col]
        inv = GaussianRational(1) / M[col][col]
        M[col] = [v * inv for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:n + k] for row in M]
