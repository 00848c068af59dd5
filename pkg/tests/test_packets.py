"""Tests for companion censuses, cross-form matching and packet statistics."""

from fractions import Fraction

import pytest

from cuspred.cuspdata import CuspidalDatum, FactorSupport, enumerate_data
from cuspred.ffpoly import (
    FieldSpec,
    class_x_minus_one,
    class_x_plus_one,
    enumerate_self_dual_classes,
)
from cuspred.fixtures import gallery, gallery_entry
from cuspred.groups import GroupSpec, ParahoricSpec
from cuspred.hecke import ired, iteration_domain, reducibility_pair
from cuspred.packets import (
    companions,
    cross_form_companions,
    enumerate_epsilon,
    full_orthogonal_count,
    packet_stats,
    q_sets,
    recover_m_pair,
    _build_companion,
)

F3 = FieldSpec(3)
F9Q = FieldSpec(3, 2, "quadratic")

XM, XP = class_x_minus_one(F3), class_x_plus_one(F3)
P2 = enumerate_self_dual_classes(F3, 2)[0]
Q4A = enumerate_self_dual_classes(F3, 4)[0]


def labels(classes):
    return [c.label for c in classes]


def swap_label_sets(census):
    return {frozenset(c.label for c in s) for s in census.swap_sets}


class TestRecovery:
    def test_gallery_round_trip(self):
        for entry in gallery():
            datum = entry.datum
            for cls in iteration_domain(datum):
                s, s2 = reducibility_pair(datum, cls)
                pair = datum.multiplicity_pair(cls)
                assert recover_m_pair(cls, s, s2) == (max(pair), min(pair)), \
                    (entry.name, cls.label)

    def test_census_round_trip(self):
        for group in (GroupSpec("Sp", 6, 3, (0, 0), F3),
                      GroupSpec("SOeven", 8, 3, (1, 1), F3),
                      GroupSpec("Uunram", 5, 2, (1, 0), F9Q)):
            for datum in enumerate_data(group, max_degree=4):
                for cls in iteration_domain(datum):
                    s, s2 = reducibility_pair(datum, cls)
                    pair = datum.multiplicity_pair(cls)
                    assert recover_m_pair(cls, s, s2) == (max(pair), min(pair))


class TestQSets:
    def test_gallery(self):
        qs = q_sets(gallery_entry("sp6").datum)
        assert labels(qs.raw) == ["x-1", "x+1"]
        assert qs.removed == () and qs.constrained == ()
        assert qs.delta == 1
        qs = q_sets(gallery_entry("sp4").datum)
        assert qs.q == 0 and qs.delta == 2
        qs = q_sets(gallery_entry("so8").datum)
        assert labels(qs.free) == ["x-1"] and qs.constrained == ()
        qs = q_sets(gallery_entry("so20").datum)
        assert labels(qs.constrained) == ["x-1", "x+1"] and qs.free == ()
        qs = q_sets(gallery_entry("u14").datum)
        assert labels(qs.constrained) == ["x^2+1"]
        qs = q_sets(gallery_entry("so5").datum)
        assert labels(qs.removed) == ["x-1", "x+1"] and qs.kept == ()

    def test_odd_orthogonal_removes_linear(self):
        # Raw linear classes of an odd orthogonal group never swap alone.
        group = GroupSpec("SOodd", 7, 3, (1, 0), F3)
        for datum in enumerate_data(group, max_degree=2):
            qs = q_sets(datum)
            assert all(c.degree > 1 for c in qs.kept)


class TestCompanions:
    def test_gallery_censuses(self):
        for entry in gallery():
            census = companions(entry.datum)
            assert len(census.companions) == entry.expected["census_data"], entry.name
            assert census.total == entry.expected["census_total"], entry.name

    def test_sp6_swaps(self):
        census = companions(gallery_entry("sp6").datum)
        assert swap_label_sets(census) == {
            frozenset(), frozenset({"x-1"}), frozenset({"x+1"}),
            frozenset({"x-1", "x+1"})}
        assert all(c.reps == 2 for c in census.companions)

    def test_so20_paired_swap(self):
        census = companions(gallery_entry("so20").datum)
        assert swap_label_sets(census) == {frozenset(), frozenset({"x-1", "x+1"})}
        assert all(c.reps == 8 for c in census.companions)

    def test_companions_preserve_everything(self):
        for entry in gallery():
            target = ired(entry.datum)
            for companion in companions(entry.datum).companions:
                assert companion.datum.group == entry.datum.group
                assert ired(companion.datum) == target
                assert companion.datum.parahoric.maximal

    def test_empty_swap_is_identity(self):
        for entry in gallery():
            census = companions(entry.datum)
            first = census.companions[0]
            assert first.swap_set == ()
            assert first.datum == entry.datum


class TestClosedForm:
    def test_matches_gallery(self):
        for entry in gallery():
            census = companions(entry.datum)
            closed = enumerate_epsilon(entry.datum)
            assert census.swap_sets == closed.swap_sets, entry.name

    SWEEP = [
        GroupSpec("Sp", 6, 3, (0, 0), F3),
        GroupSpec("Sp", 8, 4, (0, 0), F3),
        GroupSpec("SOodd", 7, 3, (1, 0), F3),
        GroupSpec("SOodd", 7, 2, (2, 1), F3),
        GroupSpec("SOeven", 8, 4, (0, 0), F3),
        GroupSpec("SOeven", 8, 3, (2, 0), F3),
        GroupSpec("SOeven", 8, 3, (1, 1), F3),
        GroupSpec("Uunram", 6, 3, (0, 0), F9Q),
        GroupSpec("Uunram", 7, 3, (1, 0), F9Q),
        GroupSpec("Uram", 8, 4, (0, 0), F3, epsilon=1),
        GroupSpec("Uram", 8, 4, (0, 0), F3, epsilon=-1),
        GroupSpec("Uram", 9, 4, (1, 0), F3, epsilon=1),
    ]

    def test_matches_validation_on_sweep(self):
        for group in self.SWEEP:
            for datum in enumerate_data(group, max_degree=4):
                census = companions(datum)
                closed = enumerate_epsilon(datum)
                assert census.swap_sets == closed.swap_sets, str(datum)


class TestDeviationWitnesses:
    def test_odd_slot_pair_keeps_linear_swaps(self):
        # Even orthogonal group split as two odd slots: the linear
        # exponent formulas agree on both slots, so x -+ 1 stay kept and
        # unconstrained, unlike every other even orthogonal split.
        group = GroupSpec("SOeven", 12, 5, (1, 1), F3)
        datum = CuspidalDatum(
            ParahoricSpec(group, 3, 2),
            (FactorSupport.of([(XM, 1), (P2, 1)]), FactorSupport.of([(XP, 1)])))
        qs = q_sets(datum)
        assert labels(qs.kept) == ["x-1", "x+1", "x^2+1"]
        assert qs.constrained == ()
        census = companions(datum)
        assert len(census.companions) == 8
        assert census.swap_sets == enumerate_epsilon(datum).swap_sets

    def test_even_ramified_unitary(self):
        # Slots (even orthogonal, symplectic): x - 1 removed, x + 1 kept
        # but sign-constrained.
        group = GroupSpec("Uram", 10, 4, (2, 0), F3, epsilon=1)
        datum = CuspidalDatum(
            ParahoricSpec(group, 1, 3),
            (FactorSupport.of([(Q4A, 1)]), FactorSupport.of([(XM, 1), (XP, 1)])))
        qs = q_sets(datum)
        assert labels(qs.removed) == ["x-1"]
        assert labels(qs.constrained) == ["x+1", Q4A.label]
        census = companions(datum)
        assert swap_label_sets(census) == {frozenset(), frozenset({"x+1", Q4A.label})}
        assert census.swap_sets == enumerate_epsilon(datum).swap_sets

    def test_odd_ramified_unitary(self):
        # Slots (odd orthogonal, symplectic): x - 1 kept and free, x + 1
        # removed.
        group = GroupSpec("Uram", 9, 4, (1, 0), F3, epsilon=1)
        datum = CuspidalDatum(
            ParahoricSpec(group, 2, 2),
            (FactorSupport.of([(XM, 1)]), FactorSupport.of([(XP, 1), (P2, 1)])))
        qs = q_sets(datum)
        assert labels(qs.removed) == ["x+1"]
        assert labels(qs.free) == ["x-1", P2.label]
        census = companions(datum)
        assert len(census.companions) == 4
        assert census.swap_sets == enumerate_epsilon(datum).swap_sets

    def test_removed_pair_cancellation_is_filtered(self):
        # Swapping two removed classes together can conserve the totals
        # and produce a valid datum, but it moves a reducibility point,
        # so the census rejects it.
        group = GroupSpec("SOodd", 17, 8, (1, 0), F3)
        datum = CuspidalDatum(
            ParahoricSpec(group, 6, 2),
            (FactorSupport.of([(XM, 2)]), FactorSupport.of([(XM, 1), (XP, 1)])))
        qs = q_sets(datum)
        assert labels(qs.removed) == ["x-1", "x+1"] and qs.kept == ()
        sneaky = _build_companion(group, datum, (XM, XP))
        assert sneaky is not None  # validates...
        assert ired(sneaky) != ired(datum)  # ...but moves a point
        census = companions(datum)
        assert swap_label_sets(census) == {frozenset()}
        assert census.swap_sets == enumerate_epsilon(datum).swap_sets


class TestCrossForm:
    def test_so20(self):
        entry = gallery_entry("so20")
        results = cross_form_companions(entry.datum)
        got = {str(r.group): r.total for r in results}
        assert got == entry.expected["crossform"]
        split = results[0]
        assert str(split.group) == "SO(20)[w10,a00]/F3"
        assert {frozenset(c.label for c in comp.swap_set) for comp in split.companions} \
            == {frozenset({"x-1"}), frozenset({"x+1"})}
        parahorics = {(comp.datum.parahoric.n1, comp.datum.parahoric.n2)
                      for comp in split.companions}
        assert parahorics == {(2, 8), (8, 2)}
        assert all(comp.reps == 8 for comp in split.companions)

    def test_u14(self):
        entry = gallery_entry("u14")
        results = cross_form_companions(entry.datum)
        got = {str(r.group): r.total for r in results}
        assert got == entry.expected["crossform"]
        (form,) = results
        (comp,) = form.companions
        assert (comp.datum.parahoric.n1, comp.datum.parahoric.n2) == (6, 1)
        assert labels(comp.swap_set) == ["x^2+1"]
        assert comp.reps == 1

    def test_symplectic_has_no_other_forms(self):
        assert cross_form_companions(gallery_entry("sp6").datum) == ()

    def test_cross_form_preserves_points(self):
        for name in ("so20", "u14", "so5", "so8"):
            datum = gallery_entry(name).datum
            target = ired(datum)
            for form in cross_form_companions(datum):
                for comp in form.companions:
                    assert ired(comp.datum) == target
                    assert comp.datum.group == form.group


class TestFullOrthogonal:
    def test_gallery(self):
        assert full_orthogonal_count(gallery_entry("so8").datum) == 2
        assert full_orthogonal_count(gallery_entry("so20").datum) == 16

    def test_swapped_slot_fuses(self):
        # A slot whose two series are swapped contributes one induced
        # label instead of two doubled ones.
        group = GroupSpec("SOeven", 4, 1, (2, 0), F3)
        datum = CuspidalDatum(
            ParahoricSpec(group, 1, 0),
            (FactorSupport.of([(Q4A, 1)]), FactorSupport.empty()))
        assert full_orthogonal_count(datum) == 1

    def test_only_even_orthogonal(self):
        with pytest.raises(ValueError):
            full_orthogonal_count(gallery_entry("sp6").datum)


class TestPacketStats:
    def test_gallery(self):
        for entry in gallery():
            stats = packet_stats(entry.datum)
            exp = entry.expected
            assert stats.jordan_size == exp["jordan_size"], entry.name
            assert stats.packet_size == exp["packet_size"], entry.name
            assert stats.e == exp["e"], entry.name
            assert stats.e0 == exp["e0"], entry.name
            assert stats.expected_count == exp["expected_count"], entry.name
            assert stats.census_data == exp["census_data"], entry.name
            assert stats.census_total == exp["census_total"], entry.name
            assert str(stats.multiple) == exp["multiple"], entry.name
            if "o_total" in exp:
                assert stats.o_per_datum == exp["o_per_datum"], entry.name
                assert stats.o_total == exp["o_total"], entry.name
                assert str(stats.o_multiple) == exp["o_multiple"], entry.name
            else:
                assert stats.o_total is None

    def test_multiple_values_are_small_powers(self):
        allowed = {Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4)}
        for entry in gallery():
            assert packet_stats(entry.datum).multiple in allowed

    def test_symplectic_census_law(self):
        # Census total 2^(q + delta), e = q + delta + 1 unless both
        # slots carry x + 1, and an odd exponent always occurs.
        for group in (GroupSpec("Sp", 4, 2, (0, 0), F3),
                      GroupSpec("Sp", 6, 3, (0, 0), F3),
                      GroupSpec("Sp", 8, 4, (0, 0), F3)):
            for datum in enumerate_data(group, max_degree=4):
                stats = packet_stats(datum)
                assert stats.census_total == 2 ** (stats.q + stats.delta), str(datum)
                expected_e = stats.q + stats.delta + (1 if stats.delta <= 1 else 0)
                assert stats.e == expected_e, str(datum)
                assert stats.e0 == 1, str(datum)
