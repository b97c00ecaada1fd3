import pytest

from petrie import (
    InternalInvariantFailure,
    MalformedPartition,
    PreconditionViolated,
    SchurExpansion,
    add_rim_hooks,
    classify_smf,
    is_signed_multiplicity_free,
    monomial_to_schur,
    multiply_power_sum,
    partitions_of,
    pet_det,
    petrie_schur_expansion,
    petrie_times_power_sum,
    poly_multiply_extract,
    power_sum_monomial_vector,
    schur_monomial_vector,
    sweep_smf,
    witness_non_smf,
)
from petrie.schur_ring import verify_witness


class TestSchurExpansion:
    def test_drops_zero_coefficients(self):
        f = SchurExpansion(3, {(3,): 1, (2, 1): 0})
        assert len(f) == 1
        assert f.coefficient((2, 1)) == 0

    def test_rejects_mixed_degrees(self):
        with pytest.raises(ValueError):
            SchurExpansion(3, {(3,): 1, (2,): 1})

    def test_rejects_non_partition_keys(self):
        with pytest.raises(MalformedPartition):
            SchurExpansion(3, {(1, 2): 1})

    def test_canonical_item_order(self):
        f = SchurExpansion(4, {(1, 1, 1, 1): 1, (4,): 1, (2, 2): -1})
        assert [lam for lam, _ in f.items()] == [(4,), (2, 2), (1, 1, 1, 1)]

    def test_text_rendering(self):
        f = SchurExpansion(4, {(4,): -1, (2, 2): 2, (2, 1, 1): 1})
        assert f.to_text() == "-s[4] + 2*s[2,2] + s[2,1,1]"
        assert SchurExpansion(5, {}).to_text() == "0"
        assert SchurExpansion(0, {(): 1}).to_text() == "s[]"

    def test_json_round_trip(self):
        f = petrie_schur_expansion(4, 8)
        assert SchurExpansion.from_json_dict(f.to_json_dict()) == f


class TestPetrieExpansion:
    def test_degree_8_examples(self):
        assert petrie_schur_expansion(4, 8) == SchurExpansion(
            8,
            {
                (3, 3, 2): 1,
                (3, 2, 2, 1): -1,
                (3, 1, 1, 1, 1, 1): 1,
                (2, 2, 2, 2): 1,
                (2, 1, 1, 1, 1, 1, 1): -1,
                (1, 1, 1, 1, 1, 1, 1, 1): 1,
            },
        )
        assert petrie_schur_expansion(5, 8) == SchurExpansion(
            8,
            {
                (4, 4): 1,
                (3, 3, 1, 1): -1,
                (3, 2, 1, 1, 1): 1,
                (3, 1, 1, 1, 1, 1): -1,
            },
        )

    def test_degree_zero(self):
        for k in (1, 2, 7):
            assert petrie_schur_expansion(k, 0) == SchurExpansion(0, {(): 1})

    def test_elementary_case(self):
        assert petrie_schur_expansion(2, 5) == SchurExpansion(5, {(1, 1, 1, 1, 1): 1})

    def test_complete_homogeneous_case(self):
        assert petrie_schur_expansion(9, 4) == SchurExpansion(4, {(4,): 1})

    def test_k_equals_one_follows_generating_product(self):
        # the k=1 factor is the constant polynomial 1
        assert petrie_schur_expansion(1, 0) == SchurExpansion(0, {(): 1})
        for m in (1, 2, 5):
            assert petrie_schur_expansion(1, m) == SchurExpansion(m, {})

    def test_coefficients_are_petrie_numbers(self):
        for k in range(2, 6):
            for m in range(9):
                f = petrie_schur_expansion(k, m)
                for lam in partitions_of(m):
                    assert f.coefficient(lam) == pet_det(lam, k)


class TestMultiplyPowerSum:
    def test_two_row_times_p3(self):
        f = SchurExpansion(8, {(4, 4): 1})
        assert multiply_power_sum(f, 3) == SchurExpansion(
            11,
            {
                (7, 4): 1,
                (6, 5): -1,
                (4, 4, 3): 1,
                (4, 4, 2, 1): -1,
                (4, 4, 1, 1, 1): 1,
            },
        )

    def test_unit_times_power_sum_matches_oracle(self):
        for n in range(1, 7):
            product = multiply_power_sum(SchurExpansion(0, {(): 1}), n)
            assert product == monomial_to_schur(power_sum_monomial_vector(n))

    def test_empty_expansion(self):
        assert multiply_power_sum(SchurExpansion(4, {}), 3) == SchurExpansion(7, {})

    def test_degree_shift(self):
        f = petrie_schur_expansion(3, 4)
        assert multiply_power_sum(f, 5).degree == 9

    def test_single_schur_against_oracle(self):
        # Murnaghan-Nakayama signs for every shape of size <= 8, n <= 5
        for m in range(9):
            for lam in partitions_of(m):
                vec = schur_monomial_vector(lam)
                for n in range(1, 6):
                    fast = multiply_power_sum(SchurExpansion(m, {lam: 1}), n)
                    slow = monomial_to_schur(
                        poly_multiply_extract(power_sum_monomial_vector(n), vec)
                    )
                    assert fast == slow, (lam, n)


class TestPetrieTimesPowerSum:
    def test_degree_five_products(self):
        assert petrie_times_power_sum(3, 5, 2) == SchurExpansion(
            7,
            {
                (4, 2, 1): 1,
                (4, 1, 1, 1): -1,
                (3, 3, 1): -1,
                (2, 2, 2, 1): 1,
                (2, 2, 1, 1, 1): -1,
                (2, 1, 1, 1, 1, 1): 1,
            },
        )
        f = petrie_times_power_sum(3, 5, 3)
        assert f.coefficient((2, 2, 2, 2)) == -2
        assert f == SchurExpansion(
            8,
            {
                (5, 2, 1): 1,
                (5, 1, 1, 1): -1,
                (4, 3, 1): -1,
                (3, 3, 1, 1): 1,
                (2, 2, 2, 2): -2,
                (2, 2, 1, 1, 1, 1): 1,
                (2, 1, 1, 1, 1, 1, 1): -1,
            },
        )

    def test_cancellation_in_degree_11(self):
        f = petrie_times_power_sum(5, 8, 3)
        assert len(f) == 16
        assert f.coefficient((4, 4, 1, 1, 1)) == 0


class TestSmfVerdict:
    def test_flagged_expansion(self):
        verdict = is_signed_multiplicity_free(petrie_times_power_sum(3, 5, 3))
        assert not verdict.signed_multiplicity_free
        assert verdict.offending == ((2, 2, 2, 2), -2)

    def test_clean_expansion(self):
        assert is_signed_multiplicity_free(petrie_times_power_sum(3, 5, 2)).signed_multiplicity_free

    def test_empty_expansion(self):
        assert is_signed_multiplicity_free(SchurExpansion(3, {})).signed_multiplicity_free


class TestClassify:
    @pytest.mark.parametrize(
        "k,m,n,expected",
        [
            (3, 5, 3, False),
            (3, 5, 2, True),
            (2, 9, 4, True),
            (2, 100, 6, True),
            (4, 3, 4, True),
            (3, 3, 3, False),
            (4, 8, 4, False),
            (1, 10, 7, True),
        ],
    )
    def test_closed_form(self, k, m, n, expected):
        assert classify_smf(k, m, n) is expected

    def test_matches_expansion_on_grid(self):
        for k in range(1, 5):
            for m in range(9):
                for n in range(1, 7):
                    observed = is_signed_multiplicity_free(
                        petrie_times_power_sum(k, m, n)
                    ).signed_multiplicity_free
                    assert observed == classify_smf(k, m, n)


class TestWitness:
    def test_worked_collision(self):
        lam, mu, lam_plus = witness_non_smf(3, 5, 3)
        assert {lam, mu} == {(2, 2, 1), (2, 1, 1, 1)}
        assert lam_plus == (2, 2, 2, 2)

    def test_zero_remainder_even_case(self):
        lam, mu, lam_plus = witness_non_smf(3, 3, 3)
        assert lam_plus == (2, 2, 2)
        coeff = petrie_times_power_sum(3, 3, 3).coefficient(lam_plus)
        assert abs(coeff) >= 2

    def test_odd_case_with_zero_remainder(self):
        lam, mu, lam_plus = witness_non_smf(4, 8, 4)
        assert lam == (1, 1, 1, 1, 1, 1, 1, 1)
        assert mu == (2, 2, 2, 2)
        assert lam_plus == (2, 2, 2, 2, 1, 1, 1, 1)
        assert pet_det(lam, 4) != 0 and pet_det(mu, 4) != 0

    def test_rejected_in_smf_region(self):
        with pytest.raises(PreconditionViolated):
            witness_non_smf(3, 5, 2)
        with pytest.raises(PreconditionViolated):
            witness_non_smf(2, 9, 4)

    def test_every_non_smf_triple_up_to_bounds(self):
        for k in range(3, 6):
            for m in range(11):
                for n in range(1, 9):
                    if classify_smf(k, m, n):
                        continue
                    lam, mu, lam_plus = witness_non_smf(k, m, n)
                    coeff = petrie_times_power_sum(k, m, n).coefficient(lam_plus)
                    assert abs(coeff) >= 2, (k, m, n)

    def test_verify_rejects_bad_triples(self):
        with pytest.raises(InternalInvariantFailure):
            verify_witness(3, 3, (2, 2, 1), (2, 2, 1), (2, 2, 2, 2))
        with pytest.raises(InternalInvariantFailure):
            verify_witness(3, 3, (3, 1, 1), (2, 2, 1), (2, 2, 2, 2))


class TestSweep:
    def test_small_grid_is_clean(self):
        report = sweep_smf(2, 10, 6)
        assert report.disagreements == ()
        assert report.non_smf == ()

    def test_flagged_triple_present(self):
        report = sweep_smf(3, 5, 3)
        assert report.disagreements == ()
        flagged = {(e.k, e.m, e.n) for e in report.non_smf}
        assert (3, 5, 3) in flagged

    def test_trivial_bounds(self):
        report = sweep_smf(1, 1, 1)
        assert report.triples == 2  # m in {0, 1}
        assert report.disagreements == ()

    def test_parallel_equals_sequential(self):
        assert sweep_smf(4, 6, 4, jobs=2) == sweep_smf(4, 6, 4)

    def test_wide_grid_is_clean(self):
        report = sweep_smf(7, 12, 8)
        assert report.disagreements == ()
        assert report.max_abs_coeff >= 2

    def test_report_renders(self):
        report = sweep_smf(3, 5, 3)
        text = report.to_text()
        assert "0 disagreements" in text
        assert "non-smf k=3 m=5 n=3" in text
        payload = report.to_json_dict()
        assert payload["disagreements"] == []


class TestSameTargetContributions:
    def _sources(self, k, m, n):
        """Group the expansion's hook additions by target partition."""
        support = {
            lam: pet_det(lam, k)
            for lam in partitions_of(m, max_part=k - 1)
            if pet_det(lam, k) != 0
        }
        targets = {}
        for lam, pet in support.items():
            for big in add_rim_hooks(lam, n):
                targets.setdefault(big, []).append((lam, pet))
        return targets

    def test_tall_first_part_has_unique_source(self):
        for k in range(2, 6):
            for m in range(9):
                for n in range(1, 6):
                    for big, sources in self._sources(k, m, n).items():
                        if big[0] >= k:
                            assert len(sources) == 1, (k, m, n, big)

    def test_pair_ratio_depends_on_divisibility(self):
        from petrie.schur_ring import _growth_height

        for k in range(3, 6):
            for m in range(9):
                for n in range(1, 7):
                    for big, sources in self._sources(k, m, n).items():
                        if big[0] >= k or len(sources) < 2:
                            continue
                        signed = [
                            (-1 if _growth_height(big, lam) % 2 else 1) * pet
                            for lam, pet in sources
                        ]
                        if n % k == 0:
                            assert len(set(signed)) == 1, (k, m, n, big)
                        else:
                            assert sum(signed) == 0 and len(sources) == 2, (k, m, n, big)
