"""Exhaustive consistency sweeps over small residue fields.

The sweep walks every group of every family with dual dimension up to a
bound, over the fields of residue size 3 and 5 (their quadratic
extensions for the unramified unitary family), enumerates cuspidal data
by signature with class degrees capped, and runs the cheap global
checks on one representative per signature:

    identity    the Jordan chains tile the dual dimension exactly
    recovery    multiplicities are recoverable from the exponent pairs
    epsilon     the closed swap-set description matches generate and
                validate companion search
    census-law  symplectic censuses have size 2^(q + delta)

Classes of equal degree enter every checked quantity interchangeably,
so one representative per signature covers the whole census; the report
still records how many concrete data the signatures stand for.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .cuspdata import (
    enumerate_signatures,
    signature_representative,
)
from .ffpoly import FieldSpec
from .groups import GroupSpec, dual_dimension
from .hecke import iteration_domain, reducibility_pair, verify_identity
from .packets import companions, enumerate_epsilon, packet_stats, recover_m_pair

__all__ = [
    "ALL_CHECKS",
    "CheckFailure",
    "SelfcheckReport",
    "iter_group_specs",
    "run_selfcheck",
]

ALL_CHECKS = ("identity", "recovery", "epsilon", "census-law")

_MAX_DETAILS = 25  # failure records kept per check


@dataclass(frozen=True)
class CheckFailure:
    check: str
    datum: object  # the offending CuspidalDatum, kept whole as a reproducer
    detail: str


@dataclass(frozen=True)
class SelfcheckReport:
    q0_values: tuple[int, ...]
    max_dual: int
    max_degree: int
    checks: tuple[str, ...]
    groups: int
    signatures: int
    data_weight: int
    failure_counts: dict
    failures: tuple[CheckFailure, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not any(self.failure_counts.values())


def iter_group_specs(q0_values=(3, 5), max_dual: int = 13):
    """Every group of every family with dual dimension at most the bound."""
    for q0 in q0_values:
        trivial = FieldSpec(q0)
        quadratic = FieldSpec(q0, 2, "quadratic")
        for family in ("Sp", "SOodd", "SOeven", "Uunram", "Uram"):
            field = quadratic if family == "Uunram" else trivial
            epsilons = (1, -1) if family == "Uram" else (0,)
            for dim in range(1, max_dual + 3):
                for a1 in range(3):
                    for a2 in range(3):
                        if (dim - a1 - a2) % 2 or dim - a1 - a2 < 0:
                            continue
                        witt = (dim - a1 - a2) // 2
                        for epsilon in epsilons:
                            try:
                                group = GroupSpec(family, dim, witt, (a1, a2),
                                                  field, epsilon)
                            except ValueError:
                                continue
                            if dual_dimension(group) <= max_dual:
                                yield group


def _check_identity(datum) -> str | None:
    if not verify_identity(datum):
        return "degree identity failed"
    return None


def _check_recovery(datum) -> str | None:
    for cls in iteration_domain(datum):
        s, s2 = reducibility_pair(datum, cls)
        pair = datum.multiplicity_pair(cls)
        if recover_m_pair(cls, s, s2) != (max(pair), min(pair)):
            return f"multiplicities of {cls.label} not recovered"
    return None


def _check_epsilon(datum) -> str | None:
    census = companions(datum)
    closed = enumerate_epsilon(datum)
    if census.swap_sets != closed.swap_sets:
        got = [[c.label for c in s] for s in census.swap_sets]
        predicted = [[c.label for c in s] for s in closed.swap_sets]
        return f"census swaps {got} but closed form {predicted}"
    return None


def _check_census_law(datum) -> str | None:
    if datum.group.family != "Sp":
        return None
    stats = packet_stats(datum)
    if stats.census_total != 2 ** (stats.q + stats.delta):
        return (f"census total {stats.census_total} differs from "
                f"2^({stats.q}+{stats.delta})")
    return None


_CHECKS = {
    "identity": _check_identity,
    "recovery": _check_recovery,
    "epsilon": _check_epsilon,
    "census-law": _check_census_law,
}


def run_selfcheck(q0_values=(3, 5), max_dual: int = 13, max_degree: int = 4,
                  checks=ALL_CHECKS, fail_fast: bool = False) -> SelfcheckReport:
    for name in checks:
        if name not in _CHECKS:
            raise ValueError(f"unknown check {name!r}")
    started = time.monotonic()
    groups = signatures = data_weight = 0
    failure_counts = {name: 0 for name in checks}
    failures: list[CheckFailure] = []
    stop = False
    for group in iter_group_specs(q0_values, max_dual):
        groups += 1
        for sig, weight in enumerate_signatures(group, max_degree=max_degree):
            signatures += 1
            data_weight += weight
            datum = signature_representative(group, sig)
            for name in checks:
                try:
                    detail = _CHECKS[name](datum)
                except (AssertionError, ValueError) as err:
                    detail = f"raised {err}"
                if detail is not None:
                    failure_counts[name] += 1
                    if failure_counts[name] <= _MAX_DETAILS:
                        failures.append(CheckFailure(name, datum, detail))
                    stop = stop or fail_fast
            if stop:
                break
        if stop:
            break
    return SelfcheckReport(
        q0_values=tuple(q0_values),
        max_dual=max_dual,
        max_degree=max_degree,
        checks=tuple(checks),
        groups=groups,
        signatures=signatures,
        data_weight=data_weight,
        failure_counts=failure_counts,
        failures=tuple(failures),
        elapsed=time.monotonic() - started,
    )
