"""Four independent evaluators of k-Petrie coefficients.

Each returns an exact integer in {-1, 0, 1}: the coefficient of the Schur
function s_lam in the Petrie symmetric function of matching degree.
"""

from __future__ import annotations

from .abacus import gammas_distinct, k_core, ninv, profile, rim_hook_sequence
from .errors import InternalInvariantFailure
from .partitions import Partition, as_partition, conjugate


def _as_sign_or_zero(value: int) -> int:
    if value not in (-1, 0, 1):
        raise InternalInvariantFailure(f"Petrie coefficient out of range: {value}")
    return value


def _int_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return sign * a[n - 1][n - 1]


def pet_det(lam: Partition, k: int) -> int:
    """0/1 determinant definition: det[chi(0 <= lam_i - i + j < k)]."""
    lam = as_partition(lam)
    if k < 1:
        raise ValueError("k must be >= 1")
    n = len(lam)
    rows = [
        [1 if 0 <= lam[i] - (i + 1) + (j + 1) < k else 0 for j in range(n)]
        for i in range(n)
    ]
    return _as_sign_or_zero(_int_det(rows))


def pet_grinberg(lam: Partition, k: int) -> int:
    """Grinberg's closed form from the gamma sequence of the conjugate.

    Zero when lam_1 >= k or the gamma values collide, otherwise
    (-1)^(sum beta + ninv(gamma) + sum gamma).
    """
    lam = as_partition(lam)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return pet_det(lam, k)
    if lam and lam[0] >= k:
        return 0
    prof = profile(conjugate(lam), k)
    if not gammas_distinct(prof):
        return 0
    exponent = sum(prof.beta) + ninv(prof.gamma) + sum(prof.gamma)
    return _as_sign_or_zero(-1 if exponent % 2 else 1)


def pet_rimhook(lam: Partition, k: int) -> int:
    """Rim-hook product rule: sign of any chain of size-k hook removals.

    Zero when lam_1 >= k or the k-core has more than one part; 1 when lam is
    its own core; otherwise the product of (-1)^(height+1) along the
    deterministic chain.
    """
    lam = as_partition(lam)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return pet_det(lam, k)
    if lam and lam[0] >= k:
        return 0
    core = k_core(lam, k)
    if len(core) > 1:
        return 0
    if lam == core:
        return 1
    return _as_sign_or_zero(rim_hook_sequence(lam, k).sign())


def pet_generalized(lam: Partition, mu: Partition, k: int) -> int:
    """Two-partition determinant det[chi(0 <= lam_i - mu_j - i + j < k)].

    Reduces to :func:`pet_det` when mu is empty.  No containment or size
    relation between lam and mu is required; incompatible pairs just give 0.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if k < 1:
        raise ValueError("k must be >= 1")
    n = max(len(lam), len(mu))
    lam_p = lam + (0,) * (n - len(lam))
    mu_p = mu + (0,) * (n - len(mu))
    rows = [
        [1 if 0 <= lam_p[i] - mu_p[j] - (i + 1) + (j + 1) < k else 0 for j in range(n)]
        for i in range(n)
    ]
    return _as_sign_or_zero(_int_det(rows))
