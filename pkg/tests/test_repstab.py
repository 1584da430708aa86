import math

import pytest

from confcohom import (
    BUILTIN_SPACES,
    ConsistencyError,
    CycleType,
    HypothesisViolation,
    LaurentPoly,
    SpaceSpec,
    all_cycle_types,
    borel_moore_series,
    config_series,
    decompose_series,
    induce_blocks,
    irrep_dimension,
    pad_core,
    partitions,
    stability_report,
    symmetric_group_character,
    unordered_betti_constancy,
    unpad_shape,
)
from confcohom.charseries import TraceSeries
from confcohom.polyarith import ONE, T

FIXTURES = [BUILTIN_SPACES[n] for n in ("c", "cstar", "c_minus_1", "r3")]


class TestCharacters:
    def test_trivial_representation(self):
        for m in range(1, 7):
            for ct in all_cycle_types(m):
                assert symmetric_group_character((m,), ct.parts) == 1

    def test_sign_representation(self):
        for m in range(1, 7):
            shape = (1,) * m
            for ct in all_cycle_types(m):
                assert symmetric_group_character(shape, ct.parts) == ct.sign()

    def test_standard_representation(self):
        # fixed points minus one
        for m in range(2, 7):
            shape = (m - 1, 1)
            for ct in all_cycle_types(m):
                assert symmetric_group_character(shape, ct.parts) == ct.fixed_points - 1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            symmetric_group_character((2, 1), (2,))

    @pytest.mark.parametrize("m", range(1, 7))
    def test_orthogonality(self, m):
        shapes = partitions(m)
        for s1 in shapes:
            for s2 in shapes:
                total = sum(
                    ct.class_size()
                    * symmetric_group_character(s1, ct.parts)
                    * symmetric_group_character(s2, ct.parts)
                    for ct in all_cycle_types(m)
                )
                assert total == (math.factorial(m) if s1 == s2 else 0)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_dimension_agrees_with_hooks(self, m):
        ident = CycleType.identity(m)
        for shape in partitions(m):
            assert symmetric_group_character(shape, ident.parts) == irrep_dimension(shape)

    @pytest.mark.parametrize("m", range(2, 7))
    def test_column_sums_vanish(self, m):
        # sum over shapes of dim * character is zero off the identity
        for ct in all_cycle_types(m):
            total = sum(
                irrep_dimension(s) * symmetric_group_character(s, ct.parts)
                for s in partitions(m)
            )
            expected = math.factorial(m) if ct == CycleType.identity(m) else 0
            assert total == expected

    @pytest.mark.parametrize("m", range(1, 7))
    def test_column_orthogonality(self, m):
        # sum over shapes of chi(mu) chi(nu) is m!/class size on the
        # diagonal and zero otherwise
        for mu in all_cycle_types(m):
            for nu in all_cycle_types(m):
                total = sum(
                    symmetric_group_character(s, mu.parts)
                    * symmetric_group_character(s, nu.parts)
                    for s in partitions(m)
                )
                if mu == nu:
                    assert total == math.factorial(m) // mu.class_size()
                else:
                    assert total == 0


class TestPadding:
    def test_pad_examples(self):
        assert pad_core((), 5) == (5,)
        assert pad_core((1,), 4) == (3, 1)
        assert pad_core((2, 1), 6) == (3, 2, 1)

    def test_pad_requires_room(self):
        with pytest.raises(ValueError):
            pad_core((3,), 5)  # needs m >= 6

    def test_unpad_inverts(self):
        for m in range(1, 8):
            for shape in partitions(m):
                core = unpad_shape(shape)
                if sum(core) + (core[0] if core else 0) <= m:
                    assert pad_core(core, m) == shape


class TestDecompose:
    def test_two_points_plane_top_degrees(self, plane):
        series = config_series(plane, 2)
        assert decompose_series(series, 4) == {(): 1}
        assert decompose_series(series, 3) == {(): 1}

    def test_zero_degree_empty(self, plane):
        series = config_series(plane, 2)
        assert decompose_series(series, 99) == {}

    def test_sign_of_odd_degree(self, plane):
        # degree 3 of the two-point series has trace -1 at both classes in
        # the alternating convention; the decomposition flips the sign back
        series = config_series(plane, 2)
        entry = series.identity_entry()
        assert entry.coeff(3) == -1

    def test_bogus_series_rejected(self):
        bogus = TraceSeries(
            2,
            {
                CycleType.identity(2): 3 * T,
                CycleType.from_parts((2,)): LaurentPoly.zero(),
            },
        )
        with pytest.raises(ConsistencyError):
            decompose_series(bogus, 1)

    def test_negative_multiplicity_rejected(self):
        # zero trace at the identity with nonzero trace on the swap forces
        # one multiplicity below zero
        bogus = TraceSeries(
            2,
            {
                CycleType.identity(2): LaurentPoly.zero(),
                CycleType.from_parts((2,)): -2 * T,
            },
        )
        with pytest.raises(ConsistencyError):
            decompose_series(bogus, 1)

    @pytest.mark.parametrize("space", FIXTURES, ids=lambda s: s.name)
    def test_dimension_bookkeeping(self, space):
        # multiplicities weighted by irreducible dimensions recover the
        # Betti numbers read off the identity entry, in every degree
        for m in range(1, 9):
            series = config_series(space, m)
            entry = series.identity_entry()
            if entry.is_zero():
                continue
            for degree in range(entry.min_exp, entry.max_exp + 1):
                mults = decompose_series(series, degree)
                total = sum(
                    mult * irrep_dimension(pad_core(core, m))
                    for core, mult in mults.items()
                )
                expected = entry.coeff(degree) * (-1 if degree % 2 else 1)
                assert total == expected


class TestPieri:
    def test_single_row_inductions_are_multiplicity_free(self):
        # inducing the trivial character from two-block stabilizers adds
        # one box to each of m-2 distinct columns of the one-row diagram
        for m in range(3, 7):
            trivial = TraceSeries(
                m - 1, {ct: ONE for ct in all_cycle_types(m - 1)}
            )
            induced = induce_blocks(trivial, m)
            mults = decompose_series(induced, 0)
            expected_cores = {(), (1,), (2,)}
            assert set(mults) == {c for c in expected_cores if sum(c) + (c[0] if c else 0) <= m}
            assert all(v == 1 for v in mults.values())

    def test_block_induction_counts_diagrams(self):
        # the multiplicity of the trivial representation in the full block
        # induction equals the number of diagram shapes: one per orbit
        for m in range(2, 7):
            for blocks in range(1, m + 1):
                trivial = TraceSeries(
                    blocks, {ct: ONE for ct in all_cycle_types(blocks)}
                )
                induced = induce_blocks(trivial, m)
                mults = decompose_series(induced, 0)
                assert mults.get((), 0) == len(partitions(m, length=blocks))
                total = sum(
                    mult * irrep_dimension(pad_core(core, m))
                    for core, mult in mults.items()
                )
                assert total == len(__import__("confcohom").set_partitions(m, blocks))


class TestBorelMoore:
    def test_two_points_plane(self, plane):
        series = config_series(plane, 2)
        bm = borel_moore_series(series, 2)
        assert bm.identity_entry() == 1 - T

    def test_even_dimension_is_untwisted_inversion(self, plane):
        series = config_series(plane, 3)
        bm = borel_moore_series(series, 2)
        for ct in all_cycle_types(3):
            expected = LaurentPoly.term(1, 6) * series[ct].invert_var()
            assert bm[ct] == expected

    def test_odd_dimension_twists_by_sign(self, three_space):
        series = config_series(three_space, 2)
        bm = borel_moore_series(series, 3)
        swap = CycleType.from_parts((2,))
        expected = LaurentPoly.term(swap.sign(), 6) * series[swap].invert_var()
        assert bm[swap] == expected

    @pytest.mark.parametrize("space", FIXTURES, ids=lambda s: s.name)
    def test_involution(self, space):
        for m in range(1, 6):
            series = config_series(space, m)
            twice = borel_moore_series(
                borel_moore_series(series, space.dim), space.dim
            )
            assert twice == series


class TestStabilityReport:
    def test_plane_degree_zero(self, plane):
        report = stability_report(plane, 0, 0, (1, 8))
        assert report.table.rows == {(): {m: 1 for m in range(1, 9)}}
        assert report.monotone_ok and report.constant_ok

    def test_plane_degree_one_rows(self, plane):
        report = stability_report(plane, 1, 0, (1, 10))
        stable = {core: row[10] for core, row in report.table.rows.items()}
        assert stable == {(): 1, (1,): 1, (2,): 1}
        assert report.monotone_ok
        assert report.constant_ok
        assert report.stable_from == 4
        assert report.betti[10] == 45
        assert report.poly_degree == 2

    def test_plane_degree_two(self, plane):
        report = stability_report(plane, 2, 0, (1, 10))
        assert report.monotone_ok and report.constant_ok
        assert report.stable_from == 8

    def test_three_space_bounds(self, three_space):
        for degree in (0, 1, 2):
            report = stability_report(three_space, degree, 0, (1, 10))
            assert report.stable_from == 2 * degree
            assert report.monotone_ok and report.constant_ok

    def test_defect_one_plane(self, plane):
        report = stability_report(plane, 1, 1, (2, 8))
        assert report.monotone_ok
        assert report.stable_from == 8

    def test_hypothesis_gates(self, klein, line):
        with pytest.raises(HypothesisViolation):
            stability_report(klein, 0, 0, (1, 4))
        with pytest.raises(HypothesisViolation):
            stability_report(line, 0, 0, (1, 4))  # dim >= 2 required

    @pytest.mark.parametrize("defect", [0, 1, 2])
    def test_betti_against_stratum_polynomial(self, plane, defect):
        # the report's Betti numbers must match the dual coefficient of the
        # stratum Poincaré polynomial, computed by a different module with
        # no series machinery at all
        from confcohom import poincare_exactly

        degree = 1
        report = stability_report(plane, degree, defect, (defect + 1, 7))
        for m, betti in report.betti.items():
            distinct = m - defect
            direct = poincare_exactly(plane, distinct, m)
            assert betti == direct.coeff(distinct * plane.dim - degree), (m, defect)


class TestUnorderedConstancy:
    def test_plane_low_degrees(self, plane):
        for degree in (0, 1):
            report = unordered_betti_constancy(plane, degree, (1, 10))
            assert report.constant_ok
            assert report.constant_value == 1
            assert report.observed_from == max(1, degree + 1 if degree else 1)

    def test_plane_higher_degrees_vanish(self, plane):
        for degree in (2, 3, 4):
            report = unordered_betti_constancy(plane, degree, (1, 10))
            assert report.constant_ok
            assert report.constant_value == 0

    def test_punctured_plane_first_value_counts_punctures(self):
        # at a single point the first Borel-Moore Betti number equals the
        # puncture count; the plateau that follows sits one higher
        for punctures in (1, 2, 3):
            space = BUILTIN_SPACES[f"c_minus_{punctures}"]
            report = unordered_betti_constancy(space, 1, (1, 8))
            assert report.values[1] == punctures
            assert report.constant_ok
            assert report.constant_value == punctures + 1

    def test_line_is_flat(self, line):
        for degree in (0, 1, 2):
            report = unordered_betti_constancy(line, degree, (1, 8))
            assert report.constant_ok

    def test_surface_with_no_top_class_vanishes(self):
        space = SpaceSpec("open-surface", LaurentPoly({1: 1}), 2, i_acyclic=True)
        for degree in (0, 1, 2):
            report = unordered_betti_constancy(space, degree, (1, 7))
            assert report.expect_zero
            assert report.constant_ok
            assert all(v == 0 for m, v in report.values.items() if m > degree)

    def test_three_dim_no_top_class_settles(self):
        space = SpaceSpec("open-3d", LaurentPoly({2: 1}), 3, i_acyclic=True)
        for degree in (0, 2, 3):
            report = unordered_betti_constancy(space, degree, (1, 7))
            assert report.observed_from is not None
            assert report.values[7] == 0

    def test_top_betti_gate(self):
        fat = SpaceSpec("fat", LaurentPoly({2: 2}), 2, i_acyclic=True)
        with pytest.raises(HypothesisViolation):
            unordered_betti_constancy(fat, 0, (1, 4))

    def test_refuses_non_acyclic(self, klein):
        with pytest.raises(HypothesisViolation):
            unordered_betti_constancy(klein, 0, (1, 4))
