"""Shared test utilities: brute-force oracles and an in-process CLI runner.

The oracles here deliberately recompute everything from first principles
(filtering, exhaustive removal, independent recurrences) so the library's
optimized paths are checked against something they share no code with.
"""

from __future__ import annotations

import io
import random
from contextlib import redirect_stderr, redirect_stdout
from functools import lru_cache

from hypothesis import strategies as st

from petrie import SkewShape, contains, is_rim_hook, partitions_of, remove_rim_hooks, rim_hook_height
from petrie.cli import main as cli_main


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Run the CLI in-process, returning (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = cli_main(argv)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 0
    return code, out.getvalue(), err.getvalue()


def partitions_strategy(max_size: int = 8, max_part: int = 8):
    return st.lists(
        st.integers(min_value=1, max_value=max_part), max_size=max_size
    ).map(lambda parts: tuple(sorted(parts, reverse=True)))


def filter_add_rim_hooks(lam, n):
    """Rim-hook additions found by filtering every containing partition."""
    total = sum(lam) + n
    return [
        big
        for big in partitions_of(total)
        if contains(lam, big) and is_rim_hook(SkewShape(big, lam))
    ]


def filter_remove_rim_hooks(lam, n):
    """Rim-hook removals found by filtering every contained partition."""
    total = sum(lam) - n
    if total < 0:
        return []
    return [
        small
        for small in partitions_of(total)
        if contains(small, lam) and is_rim_hook(SkewShape(lam, small))
    ]


@lru_cache(maxsize=None)
def exhaustive_removal_ends(lam, k) -> frozenset:
    """Every partition reachable from lam by maximal size-k hook removal."""
    options = remove_rim_hooks(lam, k)
    if not options:
        return frozenset({lam})
    ends = set()
    for smaller in options:
        ends |= exhaustive_removal_ends(smaller, k)
    return frozenset(ends)


def random_chain_sign(lam, k, rng: random.Random):
    """Sign of one uniformly random maximal size-k removal chain."""
    sign = 1
    current = lam
    while True:
        options = remove_rim_hooks(current, k)
        if not options:
            return sign, current
        nxt = rng.choice(options)
        height = rim_hook_height(SkewShape(current, nxt))
        sign *= -1 if height % 2 == 0 else 1
        current = nxt


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence (independent of enumeration)."""
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if j % 2 else -1
            if g1 <= m:
                total += sign * table[m - g1]
            if g2 <= m:
                total += sign * table[m - g2]
            j += 1
        table[m] = total
    return table[n]
