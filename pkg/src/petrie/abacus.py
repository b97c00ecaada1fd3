"""Fixed-k abacus encodings: beta/gamma sequences, k-cores, hook chains.

For k >= 2 a partition mu with fewer than k parts is identified with the
(k-1)-tuple (mu_1, ..., mu_{k-1}) padded by zeros and encoded by k-1 beads
at positions mu_i + (k-1) - i on an abacus with k runners.  Removing a rim
hook of size k is moving one bead up one row on its runner; pushing every
bead to the top of its runner yields the k-core.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InternalInvariantFailure,
    NotASizeKRimHook,
    TooManyParts,
)
from .partitions import (
    Partition,
    SkewShape,
    as_partition,
    beta_set,
    conjugate,
    contains,
    is_rim_hook,
    partition_from_beta_set,
    rim_hook_columns,
    rim_hook_height,
)


@dataclass(frozen=True)
class AbacusProfile:
    """Beta/gamma data of a partition with fewer than k parts.

    beta[i] = base_i - (i+1)        (base zero-padded to k-1 entries)
    gamma[i] = beta[i] mod k, representative chosen in {1, ..., k}
    beta_numbers[i] = base_i + k - 2 - i, strictly decreasing bead positions
    """

    k: int
    base: Partition
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    beta_numbers: tuple[int, ...]

    def runners(self) -> tuple[tuple[int, int], ...]:
        """Bead positions as (row, col): bead value = k*(row-1) + col."""
        return tuple((b // self.k + 1, b % self.k) for b in self.beta_numbers)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "beta": list(self.beta),
            "gamma": list(self.gamma),
            "beta_numbers": list(self.beta_numbers),
            "runners": [list(rc) for rc in self.runners()],
        }


@dataclass(frozen=True)
class RimHookSequence:
    """A chain core = lam^0 < lam^1 < ... < lam^q = lam of size-k hook additions."""

    k: int
    chain: tuple[Partition, ...]

    @property
    def steps(self) -> int:
        return len(self.chain) - 1

    def heights(self) -> tuple[int, ...]:
        return tuple(
            rim_hook_height(SkewShape(self.chain[j + 1], self.chain[j]))
            for j in range(self.steps)
        )

    def sign(self) -> int:
        """Product of (-1)^(height+1) over the chain; 1 for a singleton chain."""
        sign = 1
        for h in self.heights():
            sign *= -1 if h % 2 == 0 else 1
        return sign


@dataclass(frozen=True)
class GammaShift:
    """How removing one size-k rim hook rewrites a gamma sequence.

    The gamma sequence of the smaller partition's conjugate equals the old
    one with the block starting at ``position`` (1-based) of length
    ``cycle_length`` cyclically shifted.  ``parity`` is the mod-2 sum of the
    two non-inversion counts and always equals (k + height + 1) mod 2.
    """

    position: int
    cycle_length: int
    parity: int
    height: int


def profile(mu: Partition, k: int) -> AbacusProfile:
    """Beta/gamma profile of ``mu`` for modulus ``k``; requires len(mu) < k."""
    mu = as_partition(mu)
    if k < 2:
        raise ValueError("profile needs k >= 2")
    if len(mu) >= k:
        raise TooManyParts(f"{mu} has {len(mu)} parts, needs fewer than {k}")
    padded = mu + (0,) * (k - 1 - len(mu))
    beta = tuple(padded[i] - (i + 1) for i in range(k - 1))
    gamma = tuple((b % k) or k for b in beta)
    beta_numbers = tuple(padded[i] + k - 2 - i for i in range(k - 1))
    return AbacusProfile(k=k, base=mu, beta=beta, gamma=gamma, beta_numbers=beta_numbers)


def ninv(gamma: Sequence[int]) -> int:
    """Number of non-inversions: pairs i < j with gamma[i] < gamma[j]."""
    return sum(
        1
        for i in range(len(gamma))
        for j in range(i + 1, len(gamma))
        if gamma[i] < gamma[j]
    )


def gammas_distinct(prof: AbacusProfile) -> bool:
    """True iff the k-1 gamma values are pairwise distinct.

    Equivalently, the k-core of the conjugate of ``prof.base`` has at most
    one part.
    """
    return len(set(prof.gamma)) == len(prof.gamma)


def k_core(lam: Partition, k: int) -> Partition:
    """The k-core: push every bead to the top of its runner.

    Works for any partition length and any k >= 1 (every cell is a size-1
    rim hook, so the 1-core is empty).  Independent of removal order.
    """
    lam = as_partition(lam)
    if k < 1:
        raise ValueError("k must be >= 1")
    beads = beta_set(lam, len(lam))
    per_runner = [0] * k
    for b in beads:
        per_runner[b % k] += 1
    packed = [c + j * k for c in range(k) for j in range(per_runner[c])]
    return partition_from_beta_set(packed)


def rim_hook_sequence(lam: Partition, k: int) -> RimHookSequence:
    """Deterministic chain of size-k hook removals from ``lam`` down to its core.

    At each step the movable bead with the largest position is moved up;
    the downstream sign is choice-independent, this rule just pins one chain.
    """
    lam = as_partition(lam)
    if k < 2:
        raise ValueError("rim_hook_sequence needs k >= 2")
    beads = set(beta_set(lam, max(len(lam), 1)))
    chain = [lam]
    while True:
        movable = [b for b in beads if b >= k and b - k not in beads]
        if not movable:
            break
        b = max(movable)
        beads = beads - {b} | {b - k}
        chain.append(partition_from_beta_set(beads))
    chain.reverse()
    if chain[0] != k_core(lam, k):
        raise InternalInvariantFailure("hook chain did not terminate at the core")
    return RimHookSequence(k=k, chain=tuple(chain))


def gamma_shift_on_removal(lam: Partition, mu: Partition, k: int) -> GammaShift:
    """Cycle data relating gamma(lam^c) and gamma(mu^c) when lam/mu is a k-hook.

    Requires lam_1 < k.  The beta sequence of mu's conjugate is the one of
    lam's conjugate with one block cyclically shifted and the leading entry
    dropped by k; the returned parity is (ninv + ninv') mod 2 and is checked
    against (k + height + 1) mod 2 before returning.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if lam and lam[0] >= k:
        raise TooManyParts(
            f"gamma data needs first part below k; {lam} has first part {lam[0]}"
        )
    if not contains(mu, lam):
        raise NotASizeKRimHook(f"{mu} is not contained in {lam}")
    shape = SkewShape(lam, mu)
    if shape.size != k or not is_rim_hook(shape):
        raise NotASizeKRimHook(f"{lam}/{mu} is not a rim hook of size {k}")
    p_lam = profile(conjugate(lam), k)
    p_mu = profile(conjugate(mu), k)
    b = rim_hook_columns(shape)
    height = rim_hook_height(shape)

    beta, beta_new = p_lam.beta, p_mu.beta
    diffs = [i for i in range(k - 1) if beta[i] != beta_new[i]]
    if not diffs:
        raise InternalInvariantFailure("removal left the beta sequence unchanged")
    i = diffs[0]
    expected = beta[:i] + beta[i + 1 : i + b] + (beta[i] - k,) + beta[i + b :]
    if beta_new != expected:
        raise InternalInvariantFailure(
            f"beta pattern mismatch removing {lam}/{mu}: {beta_new} != {expected}"
        )

    parity = (ninv(p_lam.gamma) + ninv(p_mu.gamma)) % 2
    if parity != (k + height + 1) % 2:
        raise InternalInvariantFailure(
            f"parity law failed for {lam}/{mu} at k={k}"
        )
    return GammaShift(position=i + 1, cycle_length=b, parity=parity, height=height)
