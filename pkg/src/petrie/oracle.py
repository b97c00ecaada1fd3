"""Brute-force verification path through exact polynomial arithmetic.

Symmetric functions of degree d are expanded as honest polynomials in d
variables (the minimum that determines them), multiplied term by term, and
read back off in the monomial basis; monomial vectors are converted to the
Schur basis by back-substitution against Kostka numbers.  None of the
algorithms here touch the determinant, gamma, or rim-hook evaluators they
are used to check: being slow and independent is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping

from .partitions import Partition, as_partition, dominates, partitions_of
from .schur_ring import SchurExpansion


class MonomialVector:
    """A symmetric function recorded by its monomial-basis coefficients."""

    __slots__ = ("_degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Partition, int]):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        clean: dict[Partition, int] = {}
        for lam, coeff in coeffs.items():
            lam = as_partition(lam)
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            if coeff:
                clean[lam] = int(coeff)
        self._degree = degree
        self._coeffs = clean

    @property
    def degree(self) -> int:
        return self._degree

    def coefficient(self, lam: Partition) -> int:
        return self._coeffs.get(as_partition(lam), 0)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self._coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def support(self) -> list[Partition]:
        return sorted(self._coeffs, reverse=True)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialVector)
            and self._degree == other._degree
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        return f"MonomialVector(degree={self._degree}, coeffs={self._coeffs!r})"


def petrie_monomial_vector(k: int, m: int) -> MonomialVector:
    """Coefficient 1 on every partition of m with all parts below k."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    return MonomialVector(m, {lam: 1 for lam in partitions_of(m, k - 1)})


def power_sum_monomial_vector(n: int) -> MonomialVector:
    """The n-th power sum, which is the single monomial function m_(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return MonomialVector(n, {(n,): 1})


def _count_ssyt(shape: Partition, content: Partition) -> int:
    """Count semistandard tableaux of ``shape`` and exact ``content`` by
    filling cells one at a time (weakly increasing rows, strictly increasing
    columns)."""
    remaining = list(content)
    values = len(remaining)
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]
    grid = [[0] * width for width in shape]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        low = grid[r][c - 1] if c else 1
        if r:
            low = max(low, grid[r - 1][c] + 1)
        total = 0
        for v in range(low, values + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                total += fill(idx + 1)
                remaining[v - 1] += 1
        return total

    return fill(0)


def schur_monomial_vector(lam: Partition) -> MonomialVector:
    """Monomial expansion of a Schur function via tableau enumeration."""
    lam = as_partition(lam)
    degree = sum(lam)
    coeffs = {}
    for mu in partitions_of(degree):
        count = _count_ssyt(lam, mu)
        if count:
            coeffs[mu] = count
    return MonomialVector(degree, coeffs)


def _inner_shapes_after_strip(shape: Partition, size: int) -> Iterator[Partition]:
    """All nu contained in ``shape`` with shape/nu a horizontal strip of ``size``."""

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(shape):
            if remaining == 0:
                yield as_partition(prefix)
            return
        low = shape[i + 1] if i + 1 < len(shape) else 0
        for part in range(shape[i], low - 1, -1):
            removed = shape[i] - part
            if removed > remaining:
                break
            yield from rec(i + 1, remaining - removed, prefix + (part,))

    yield from rec(0, size, ())


@lru_cache(maxsize=None)
def kostka_number(shape: Partition, content: Partition) -> int:
    """Number of semistandard tableaux of ``shape`` with exact ``content``.

    Counted by peeling the largest letter off as a horizontal strip; the
    recursion is memoized but the values still come from tableau
    combinatorics alone.
    """
    if sum(shape) != sum(content):
        return 0
    if not content:
        return 1
    if content and not dominates(shape, content):
        return 0
    return sum(
        kostka_number(inner, content[:-1])
        for inner in _inner_shapes_after_strip(shape, content[-1])
    )


@dataclass(frozen=True)
class KostkaMatrix:
    """All nonzero Kostka numbers of one degree, keyed (shape, content).

    Unitriangular for the dominance order: the (mu, mu) entry is 1 and
    (mu, lam) vanishes unless mu dominates lam.
    """

    degree: int
    entries: dict

    def entry(self, shape: Partition, content: Partition) -> int:
        return self.entries.get((shape, content), 0)


def kostka_matrix(degree: int) -> KostkaMatrix:
    shapes = partitions_of(degree)
    entries = {}
    for shape in shapes:
        for content in shapes:
            value = kostka_number(shape, content)
            if value:
                entries[(shape, content)] = value
    return KostkaMatrix(degree=degree, entries=entries)


def monomial_to_schur(v: MonomialVector) -> SchurExpansion:
    """Invert the unitriangular monomial expansion of Schur functions.

    Walks the partitions of the degree in canonical order (a linear
    extension of dominance) and back-substitutes Kostka numbers, producing
    the unique integer Schur combination with monomial vector ``v``.
    """
    degree = v.degree
    out: dict[Partition, int] = {}
    for lam in partitions_of(degree):
        coeff = v.coefficient(lam)
        for nu, c in out.items():
            coeff -= c * kostka_number(nu, lam)
        if coeff:
            out[lam] = coeff
    return SchurExpansion(degree, out)


@lru_cache(maxsize=None)
def _orbit_keys(lam: Partition, nvars: int, bits: int) -> tuple[int, ...]:
    """Packed exponent keys of every distinct arrangement of ``lam`` over
    ``nvars`` variables; exponent of variable i sits at bit offset bits*i."""
    if len(lam) > nvars:
        return ()
    groups = []
    for part in lam:
        if groups and groups[-1][0] == part:
            groups[-1][1] += 1
        else:
            groups.append([part, 1])

    def rec(idx: int, positions: tuple[int, ...]) -> Iterator[int]:
        if idx == len(groups):
            yield 0
            return
        value, count = groups[idx]
        for chosen in combinations(range(len(positions)), count):
            base = sum(value << (bits * positions[i]) for i in chosen)
            picked = set(chosen)
            rest = tuple(positions[i] for i in range(len(positions)) if i not in picked)
            for tail in rec(idx + 1, rest):
                yield base + tail

    return tuple(rec(0, tuple(range(nvars))))


def _expand(v: MonomialVector, nvars: int, bits: int) -> dict[int, int]:
    """Write ``v`` out as an actual polynomial, one packed key per monomial."""
    poly: dict[int, int] = {}
    for lam, coeff in v.items():
        for key in _orbit_keys(lam, nvars, bits):
            poly[key] = coeff
    return poly


def poly_multiply_extract(f: MonomialVector, g: MonomialVector) -> MonomialVector:
    """Multiply two symmetric functions as honest polynomials.

    Both factors are expanded in d = deg(f) + deg(g) variables, multiplied
    term by term, and the product's monomial-basis coefficients are read off
    the weakly decreasing exponent vectors.  Coefficients are exact Python
    integers throughout, so the arithmetic cannot overflow.
    """
    degree = f.degree + g.degree
    nvars = degree
    bits = max(1, degree.bit_length())
    poly_f = _expand(f, nvars, bits)
    poly_g = _expand(g, nvars, bits)
    if len(poly_f) > len(poly_g):
        poly_f, poly_g = poly_g, poly_f
    product: dict[int, int] = {}
    get = product.get
    for ka, ca in poly_f.items():
        for kb, cb in poly_g.items():
            key = ka + kb
            product[key] = get(key, 0) + ca * cb

    mask = (1 << bits) - 1
    coeffs: dict[Partition, int] = {}
    for key, coeff in product.items():
        if not coeff:
            continue
        exponents = []
        prev = degree
        ok = True
        for _ in range(nvars):
            e = key & mask
            if e > prev:
                ok = False
                break
            prev = e
            exponents.append(e)
            key >>= bits
        if ok:
            coeffs[tuple(p for p in exponents if p)] = coeff
    return MonomialVector(degree, coeffs)
