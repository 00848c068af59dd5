"""Tests for the sweep driver: group iteration and report plumbing."""

import pytest

from cuspred.groups import dual_dimension
from cuspred.selfcheck import iter_group_specs, run_selfcheck


class TestGroupIteration:
    def test_families_and_bound(self):
        groups = list(iter_group_specs(q0_values=(3,), max_dual=9))
        assert {g.family for g in groups} == {"Sp", "SOodd", "SOeven", "Uunram", "Uram"}
        assert all(dual_dimension(g) <= 9 for g in groups)

    def test_field_assignment(self):
        for group in iter_group_specs(q0_values=(3,), max_dual=6):
            if group.family == "Uunram":
                assert group.field.ext == "quadratic" and group.field.q == 9
            else:
                assert group.field.ext == "trivial" and group.field.q == 3

    def test_ramified_unitary_carries_both_parities(self):
        epsilons = {g.epsilon for g in iter_group_specs((3,), 6)
                    if g.family == "Uram"}
        assert epsilons == {1, -1}

    def test_no_duplicates(self):
        groups = list(iter_group_specs((3, 5), 8))
        assert len(groups) == len(set(groups))

    def test_bound_is_sharp(self):
        small = {g for g in iter_group_specs((3,), 7)}
        larger = {g for g in iter_group_specs((3,), 8)}
        assert small < larger
        assert all(dual_dimension(g) == 8 for g in larger - small)


class TestReport:
    def test_small_sweep_is_clean(self):
        report = run_selfcheck(q0_values=(3,), max_dual=6, max_degree=4)
        assert report.ok
        assert report.failures == ()
        assert report.groups == len(list(iter_group_specs((3,), 6)))
        assert report.signatures > 0
        # every signature stands for at least one concrete datum
        assert report.data_weight >= report.signatures

    def test_unknown_check_rejected(self):
        with pytest.raises(ValueError):
            run_selfcheck(checks=("identity", "bogus"))

    def test_check_subset_runs_alone(self):
        report = run_selfcheck(q0_values=(3,), max_dual=4, checks=("identity",))
        assert report.checks == ("identity",)
        assert set(report.failure_counts) == {"identity"}
        assert report.ok
