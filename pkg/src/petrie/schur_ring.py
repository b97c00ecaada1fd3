"""Sparse integer Schur-basis expansions and the signed-multiplicity story.

Builds Petrie expansions G(k, m), multiplies them by power sums via the
Murnaghan-Nakayama rule, classifies when the product stays signed
multiplicity free (all coefficients in {-1, 0, 1}), and constructs verified
witnesses in the region where it does not.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InternalInvariantFailure, PreconditionViolated
from .partitions import (
    Partition,
    SkewShape,
    add_rim_hooks,
    as_partition,
    contains,
    format_partition,
    is_rim_hook,
    partitions_of,
)
from .petrie_numbers import pet_det, pet_grinberg


class SchurExpansion:
    """A homogeneous integer combination of Schur functions.

    Keys are partitions of ``degree``; zero coefficients are never stored;
    iteration is in canonical (reverse-lexicographic, largest-first) order.
    """

    __slots__ = ("_degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Partition, int]):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        clean: dict[Partition, int] = {}
        for lam, coeff in terms.items():
            lam = as_partition(lam)
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            if coeff:
                clean[lam] = int(coeff)
        self._degree = degree
        self._terms = clean

    @property
    def degree(self) -> int:
        return self._degree

    def coefficient(self, lam: Partition) -> int:
        return self._terms.get(as_partition(lam), 0)

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def support(self) -> list[Partition]:
        return sorted(self._terms, reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self._degree == other._degree
            and self._terms == other._terms
        )

    def __repr__(self) -> str:
        return f"SchurExpansion(degree={self._degree}, terms={self.to_text()!r})"

    def to_text(self) -> str:
        """One-line signed rendering, e.g. ``s[2,1] - 2*s[1,1,1]``."""
        entries = self.items()
        if not entries:
            return "0"
        chunks = []
        for idx, (lam, coeff) in enumerate(entries):
            magnitude = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
            term = f"{magnitude}s{format_partition(lam)}"
            if idx == 0:
                chunks.append(term if coeff > 0 else "-" + term)
            else:
                chunks.append((" + " if coeff > 0 else " - ") + term)
        return "".join(chunks)

    def to_json_dict(self) -> dict:
        return {
            "degree": self._degree,
            "terms": [
                {"partition": list(lam), "coeff": coeff}
                for lam, coeff in self.items()
            ],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "SchurExpansion":
        return cls(
            payload["degree"],
            {tuple(t["partition"]): t["coeff"] for t in payload["terms"]},
        )


@dataclass(frozen=True)
class SmfVerdict:
    """Outcome of a signed-multiplicity-freeness check.

    ``offending`` is the first term (canonical order) with |coefficient| >= 2
    and is present exactly when the verdict is negative.
    """

    signed_multiplicity_free: bool
    offending: tuple[Partition, int] | None = None
    witness: tuple[Partition, Partition, Partition] | None = None


def petrie_schur_expansion(k: int, m: int) -> SchurExpansion:
    """Schur expansion of the degree-m Petrie symmetric function G(k, m).

    The support is exactly the partitions of m with first part below k whose
    k-core has at most one part; the coefficient is the k-Petrie number.
    At k = 1 the generating product is the constant 1, so the expansion is
    empty for every m >= 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    if k == 1:
        return SchurExpansion(m, {(): 1} if m == 0 else {})
    terms = {}
    for lam in partitions_of(m, k - 1):
        coeff = pet_grinberg(lam, k)
        if coeff:
            terms[lam] = coeff
    return SchurExpansion(m, terms)


def _growth_height(lam_plus: Partition, lam: Partition) -> int:
    """Height of the rim hook lam_plus/lam: rows that grew, minus one."""
    grown = sum(
        1
        for i in range(len(lam_plus))
        if lam_plus[i] > (lam[i] if i < len(lam) else 0)
    )
    return grown - 1


def multiply_power_sum(f: SchurExpansion, n: int) -> SchurExpansion:
    """Murnaghan-Nakayama product: for each term add every size-n rim hook,
    signed by (-1)^height, and combine like terms."""
    if n < 1:
        raise ValueError("power sum index must be >= 1")
    acc: dict[Partition, int] = {}
    for lam, coeff in f.items():
        for lam_plus in add_rim_hooks(lam, n):
            sign = -1 if _growth_height(lam_plus, lam) % 2 else 1
            acc[lam_plus] = acc.get(lam_plus, 0) + sign * coeff
    return SchurExpansion(f.degree + n, acc)


def petrie_times_power_sum(k: int, m: int, n: int) -> SchurExpansion:
    """Schur expansion of G(k, m) times the n-th power sum."""
    return multiply_power_sum(petrie_schur_expansion(k, m), n)


def is_signed_multiplicity_free(f: SchurExpansion) -> SmfVerdict:
    """True iff every stored coefficient is -1 or 1 (vacuously true if empty)."""
    for lam, coeff in f.items():
        if abs(coeff) >= 2:
            return SmfVerdict(signed_multiplicity_free=False, offending=(lam, coeff))
    return SmfVerdict(signed_multiplicity_free=True)


def classify_smf(k: int, m: int, n: int) -> bool:
    """Closed-form verdict: the product expansion keeps unit coefficients
    unless k >= 3, k divides n, and m >= n."""
    if k < 1 or m < 0 or n < 1:
        raise ValueError("need k >= 1, m >= 0, n >= 1")
    return not (k >= 3 and n % k == 0 and m >= n)


def verify_witness(
    k: int,
    n: int,
    lam: Partition,
    mu: Partition,
    lam_plus: Partition,
) -> None:
    """Check every structural requirement on a collision witness.

    Both lam and mu must carry nonzero k-Petrie numbers, both must grow to
    lam_plus by a rim hook of size n, and the two signed contributions must
    agree so the coefficient of s_(lam_plus) has absolute value >= 2.
    """
    if lam == mu:
        raise InternalInvariantFailure("witness partitions coincide")
    pet_lam, pet_mu = pet_det(lam, k), pet_det(mu, k)
    if pet_lam == 0 or pet_mu == 0:
        raise InternalInvariantFailure("witness partition has zero Petrie number")
    for small in (lam, mu):
        if not contains(small, lam_plus):
            raise InternalInvariantFailure(f"{small} not contained in {lam_plus}")
        shape = SkewShape(lam_plus, small)
        if shape.size != n or not is_rim_hook(shape):
            raise InternalInvariantFailure(
                f"{lam_plus}/{small} is not a rim hook of size {n}"
            )
    sign_lam = -1 if _growth_height(lam_plus, lam) % 2 else 1
    sign_mu = -1 if _growth_height(lam_plus, mu) % 2 else 1
    if sign_lam * pet_lam != sign_mu * pet_mu:
        raise InternalInvariantFailure("witness contributions do not reinforce")


def _stack(d: int, twos: int, ones: int) -> Partition:
    parts = ([d] if d else []) + [2] * twos + [1] * ones
    if twos < 0 or ones < 0:
        raise InternalInvariantFailure(f"negative multiplicity in ({d},{twos},{ones})")
    return as_partition(parts)


def witness_non_smf(
    k: int, m: int, n: int
) -> tuple[Partition, Partition, Partition]:
    """Construct a verified (lam, mu, lam_plus) collision for a non-SMF triple.

    The shapes use only parts 1, 2, and d = m mod k; the case split is on
    d = 1 or not, on the parity of q = 1 + (m-d)//n, and on whether
    r = (m-d) mod n vanishes.  The triple is verified before being returned.
    """
    if classify_smf(k, m, n):
        raise PreconditionViolated(
            f"G({k},{m})*p_{n} is signed multiplicity free; no witness exists"
        )
    d = m % k
    r = (m - d) % n
    q = 1 + (m - d) // n
    if q % 2 == 0:
        t = q // 2
        if d != 1:
            lam_plus = _stack(d, n * t, r)
            lam = _stack(d, n * (t - 1), n + r)
            mu = _stack(d, n * (t - 1) + r + 1, n - r - 2)
        else:
            lam_plus = _stack(0, n * t, r + 1)
            lam = _stack(0, n * (t - 1), n + r + 1)
            mu = _stack(0, n * (t - 1) + r + 2, n - r - 3)
    else:
        t = (q - 1) // 2
        if d != 1:
            if r == 0:
                lam_plus = _stack(d, n * t, n)
                lam = _stack(d, n * (t - 1), 2 * n)
                mu = _stack(d, n * t, 0)
            else:
                lam_plus = _stack(d, n * t + r, n - r)
                lam = _stack(d, n * (t - 1) + r, 2 * n - r)
                mu = _stack(d, n * t + 1, r - 2)
        else:
            if r == 0:
                lam_plus = _stack(0, n * t, n + 1)
                lam = _stack(0, n * (t - 1), 2 * n + 1)
                mu = _stack(0, n * t, 1)
            else:
                lam_plus = _stack(0, n * t + r, n - r + 1)
                lam = _stack(0, n * (t - 1) + r, 2 * n - r + 1)
                mu = _stack(0, n * t + 2, r - 3)
    verify_witness(k, n, lam, mu, lam_plus)
    return lam, mu, lam_plus


@dataclass(frozen=True)
class NonSmfEntry:
    k: int
    m: int
    n: int
    offending: Partition
    coeff: int
    witness: tuple[Partition, Partition, Partition]

    def to_json_dict(self) -> dict:
        lam, mu, lam_plus = self.witness
        return {
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "offending": list(self.offending),
            "coeff": self.coeff,
            "witness": {
                "lambda": list(lam),
                "mu": list(mu),
                "lambda_plus": list(lam_plus),
            },
        }


@dataclass(frozen=True)
class SweepReport:
    """Deterministic comparison of observed verdicts against the closed form."""

    k_max: int
    m_max: int
    n_max: int
    triples: int
    non_smf: tuple[NonSmfEntry, ...]
    disagreements: tuple[tuple[int, int, int], ...]
    max_abs_coeff: int

    def to_json_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "m_max": self.m_max,
            "n_max": self.n_max,
            "triples": self.triples,
            "non_smf": [entry.to_json_dict() for entry in self.non_smf],
            "disagreements": [list(t) for t in self.disagreements],
            "max_abs_coeff": self.max_abs_coeff,
        }

    def to_text(self) -> str:
        lines = [
            f"smf sweep: k<={self.k_max} m<={self.m_max} n<={self.n_max}"
            f" ({self.triples} triples)"
        ]
        for entry in self.non_smf:
            lam, mu, lam_plus = entry.witness
            lines.append(
                f"non-smf k={entry.k} m={entry.m} n={entry.n}"
                f" offending={format_partition(entry.offending)}"
                f" coeff={entry.coeff}"
                f" witness {format_partition(lam)} {format_partition(mu)}"
                f" -> {format_partition(lam_plus)}"
            )
        lines.append(f"non-smf triples: {len(self.non_smf)}")
        lines.append(f"largest |coefficient| observed: {self.max_abs_coeff}")
        for k, m, n in self.disagreements:
            lines.append(f"DISAGREEMENT at k={k} m={m} n={n}")
        lines.append(f"{len(self.disagreements)} disagreements")
        return "\n".join(lines)


def _sweep_triple(triple: tuple[int, int, int]):
    k, m, n = triple
    verdict = is_signed_multiplicity_free(petrie_times_power_sum(k, m, n))
    predicted = classify_smf(k, m, n)
    witness = None
    if not predicted:
        try:
            witness = witness_non_smf(k, m, n)
        except InternalInvariantFailure:
            witness = None
    return (triple, verdict.signed_multiplicity_free, predicted, verdict.offending, witness)


def sweep_smf(k_max: int, m_max: int, n_max: int, jobs: int = 1) -> SweepReport:
    """Compare observed and predicted SMF verdicts over a whole grid.

    Covers k in 1..k_max, m in 0..m_max, n in 1..n_max.  Every non-SMF
    triple also gets a constructed-and-verified witness.  With jobs > 1 the
    triples are evaluated in a process pool; the report is identical to the
    sequential one.
    """
    if k_max < 1 or m_max < 1 or n_max < 1:
        raise ValueError("sweep bounds must be >= 1")
    triples = [
        (k, m, n)
        for k in range(1, k_max + 1)
        for m in range(0, m_max + 1)
        for n in range(1, n_max + 1)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_triple, triples, chunksize=16))
    else:
        results = [_sweep_triple(t) for t in triples]

    non_smf: list[NonSmfEntry] = []
    disagreements: list[tuple[int, int, int]] = []
    max_abs = 1
    for (k, m, n), observed, predicted, offending, witness in results:
        if observed != predicted or (not predicted and witness is None):
            disagreements.append((k, m, n))
            continue
        if not predicted and offending is not None:
            lam_off, coeff = offending
            max_abs = max(max_abs, abs(coeff))
            non_smf.append(
                NonSmfEntry(k=k, m=m, n=n, offending=lam_off, coeff=coeff, witness=witness)
            )
    return SweepReport(
        k_max=k_max,
        m_max=m_max,
        n_max=n_max,
        triples=len(triples),
        non_smf=tuple(non_smf),
        disagreements=tuple(disagreements),
        max_abs_coeff=max_abs,
    )
