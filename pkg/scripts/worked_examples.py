#!/usr/bin/env python3
"""Print the headline worked examples in one place for eyeballing.

Usage: python3 scripts/worked_examples.py
"""

from petrie import (
    conjugate,
    ninv,
    petrie_schur_expansion,
    petrie_times_power_sum,
    profile,
    rim_hook_sequence,
    transition_matrix,
    witness_non_smf,
)


def main() -> None:
    print("Schur expansions")
    for k, m in [(4, 8), (5, 8), (3, 5)]:
        print(f"  G({k},{m}) = {petrie_schur_expansion(k, m).to_text()}")

    print("\nPower-sum products")
    for k, m, n in [(3, 5, 2), (3, 5, 3), (5, 8, 3)]:
        print(f"  G({k},{m})*p_{n} = {petrie_times_power_sum(k, m, n).to_text()}")

    print("\nCollision witness for the non-signed-multiplicity-free case (3,5,3)")
    lam, mu, lam_plus = witness_non_smf(3, 5, 3)
    print(f"  {lam} and {mu} both grow to {lam_plus}")

    print("\nAbacus profile of (7,4,2,1) at k=6")
    p = profile((7, 4, 2, 1), 6)
    print(f"  beta = {p.beta}")
    print(f"  gamma = {p.gamma}  (ninv = {ninv(p.gamma)})")
    print(f"  bead positions = {p.beta_numbers}, runners = {p.runners()}")

    print("\nDeterministic rim-hook chain for (3,3,2) at k=4")
    seq = rim_hook_sequence((3, 3, 2), 4)
    print(f"  {' < '.join(str(step) for step in seq.chain)}")
    print(f"  heights = {seq.heights()}, sign = {seq.sign()}")

    print("\nTransition matrix at k=3, degree 4")
    print(transition_matrix(3, 4).to_text())


if __name__ == "__main__":
    main()
