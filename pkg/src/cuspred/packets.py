"""Companion censuses, cross-form matching and packet statistics.

Two cuspidal data share reducibility behaviour exactly when they share
the multiset of real reducibility points.  The companions of a datum
are produced by swapping the slot multiplicities m1 <-> m2 of some set
of classes and re-solving for the parahoric; a swap set survives when
the swapped supports are valid on some maximal parahoric of the same
group and the reducibility points are unchanged.

The surviving swap sets admit a closed description.  A class with
m1 = m2 never moves.  Among the others (the raw set), a class is kept
exactly when the two slot exponent formulas differ by a constant, so
that the swap conserves the total; this removes x -+ 1 for odd
orthogonal groups, x - 1 for even ramified unitary groups and x + 1
for odd ones.  A kept class is constrained when swapping it flips a
parity the form pins down: the type of an even orthogonal slot, or the
slot dimension parity of an unramified unitary group.  Constrained
classes must be swapped in pairs; free classes swap independently.
Swaps of removed classes can conserve the totals jointly and even
validate, but they always move a reducibility point, so the census
filter eliminates them; the closed description and the generate and
validate search agree.

Cross-form companions play the same game against every other form of
the group: same family, dimension, residue field and ramification
sign, different Witt index and anisotropic split.

Packet statistics: a datum with Jordan size l sits in a packet of size
2^(l-1).  Counting members e with integral exponent at least 1, with
e0 = 1 when some exponent is an odd integer, the packet accounts for
2^(e-e0) cuspidal representations; the census total divided by that
predicts the multiplicity with which the packet meets the census.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cuspdata import (
    CuspidalDatum,
    FactorSupport,
    char_poly_exponent,
    count_representations,
    minus_type_exponent,
    slot_series,
)
from .ffpoly import SelfDualClass, class_x_plus_one
from .groups import GroupSpec, ParahoricSpec, enumerate_parahorics
from .hecke import HalfInt, ired, iteration_domain, jordan, reducibility_pair

__all__ = [
    "QSets",
    "EpsilonMap",
    "Companion",
    "CompanionCensus",
    "CrossFormEntry",
    "PacketStats",
    "recover_m_pair",
    "q_sets",
    "enumerate_epsilon",
    "companions",
    "cross_form_companions",
    "full_orthogonal_count",
    "packet_stats",
]


def recover_m_pair(cls: SelfDualClass, s: HalfInt, s2: HalfInt) -> tuple[int, int]:
    """The multiplicity pair {m1, m2} recovered from the exponent pair.

    Unordered: returned with the larger multiplicity first.
    """
    total, diff = s.twice + s2.twice, abs(s.twice - s2.twice)
    if cls.is_linear and cls.field.ext == "trivial":
        pair = (total // 4, diff // 4)
    else:
        pair = (total // 2, diff // 2)
    return (max(pair), min(pair))


@dataclass(frozen=True)
class QSets:
    """The swap candidates of a datum, stratified."""

    raw: tuple[SelfDualClass, ...]
    kept: tuple[SelfDualClass, ...]
    removed: tuple[SelfDualClass, ...]
    constrained: tuple[SelfDualClass, ...]  # kept classes that swap in pairs
    free: tuple[SelfDualClass, ...]
    delta: int  # slots carrying x + 1

    @property
    def q(self) -> int:
        return len(self.raw)


def _constant_difference(case1: str, case2: str, cls: SelfDualClass) -> bool:
    """Whether the two slot exponent formulas differ by a constant."""
    diffs = {char_poly_exponent(case1, cls, m) - char_poly_exponent(case2, cls, m)
             for m in range(3)}
    return len(diffs) == 1


def q_sets(datum: CuspidalDatum) -> QSets:
    factors = datum.parahoric.factors
    cases = (factors[0].case, factors[1].case)
    raw, kept, removed, constrained, free = [], [], [], [], []
    has_iii = "iii" in cases
    unitary = "u" in cases
    for cls in iteration_domain(datum):
        m1, m2 = datum.multiplicity_pair(cls)
        if m1 == m2:
            continue
        raw.append(cls)
        if not _constant_difference(cases[0], cases[1], cls):
            removed.append(cls)
            continue
        kept.append(cls)
        if has_iii:
            pinned = (minus_type_exponent(cls, m1) - minus_type_exponent(cls, m2)) % 2
        elif unitary:
            pinned = (char_poly_exponent("u", cls, m1)
                      - char_poly_exponent("u", cls, m2)) % 2
        else:
            pinned = 0
        (constrained if pinned else free).append(cls)
    xp = class_x_plus_one(datum.field)
    delta = sum(1 for support in datum.supports if support.get(xp) > 0)
    return QSets(tuple(raw), tuple(kept), tuple(removed),
                 tuple(constrained), tuple(free), delta)


def _swapped_supports(datum: CuspidalDatum, swap_set) -> tuple[dict, dict]:
    """Multiplicity maps of both slots after swapping the given classes."""
    swapped = set(swap_set)
    s1, s2 = {}, {}
    for cls in iteration_domain(datum):
        m1, m2 = datum.multiplicity_pair(cls)
        if cls in swapped:
            m1, m2 = m2, m1
        if m1:
            s1[cls] = m1
        if m2:
            s2[cls] = m2
    return s1, s2


def _support_total(case: str, entries: dict, field) -> int:
    total = sum(char_poly_exponent(case, cls, m) * cls.degree
                for cls, m in entries.items())
    if case == "ii" and all(not cls.is_x_minus_one for cls in entries):
        total += 1
    return total


def _solve_parahoric(group: GroupSpec, totals: tuple[int, int]) -> ParahoricSpec | None:
    """The parahoric whose factor dual dimensions equal the totals, if any."""
    for parahoric in enumerate_parahorics(group):
        if tuple(f.dual_dim for f in parahoric.factors) == totals:
            return parahoric
    return None


def _build_companion(group: GroupSpec, datum: CuspidalDatum, swap_set):
    """The re-solved datum after a swap, or None when nothing valid exists."""
    s1, s2 = _swapped_supports(datum, swap_set)
    kinds = group.slot_kinds
    cases = {"Sp": "ii", "SOodd": "i", "SOeven": "iii", "U": "u"}
    totals = (_support_total(cases[kinds[0]], s1, group.field),
              _support_total(cases[kinds[1]], s2, group.field))
    parahoric = _solve_parahoric(group, totals)
    if parahoric is None or not parahoric.maximal:
        return None
    try:
        return CuspidalDatum(parahoric, (FactorSupport.of(s1.items()),
                                         FactorSupport.of(s2.items())))
    except ValueError:
        return None


@dataclass(frozen=True)
class Companion:
    swap_set: tuple[SelfDualClass, ...]
    datum: CuspidalDatum
    reps: int


@dataclass(frozen=True)
class CompanionCensus:
    datum: CuspidalDatum
    qsets: QSets
    companions: tuple[Companion, ...]

    @property
    def total(self) -> int:
        return sum(c.reps for c in self.companions)

    @property
    def swap_sets(self) -> tuple[tuple[SelfDualClass, ...], ...]:
        return tuple(c.swap_set for c in self.companions)


def _subsets(classes):
    ordered = sorted(classes, key=lambda c: c.sort_key)
    for r in range(len(ordered) + 1):
        yield from itertools.combinations(ordered, r)


def companions(datum: CuspidalDatum) -> CompanionCensus:
    """Every swap of raw classes giving a valid datum with the same
    reducibility points.  Includes the empty swap, so the census always
    contains the datum itself."""
    qs = q_sets(datum)
    target = ired(datum)
    kept = set(qs.kept)
    out = []
    for subset in _subsets(qs.raw):
        companion = _build_companion(datum.group, datum, subset)
        if companion is None:
            continue
        same_ired = ired(companion) == target
        if all(cls in kept for cls in subset) and not same_ired:
            raise AssertionError(
                f"kept swap {[c.label for c in subset]} moved a reducibility point")
        if same_ired:
            out.append(Companion(subset, companion,
                                 count_representations(companion).total))
    return CompanionCensus(datum, qs, tuple(out))


@dataclass(frozen=True)
class EpsilonMap:
    """The closed description of the surviving swap sets."""

    datum: CuspidalDatum
    qsets: QSets
    swap_sets: tuple[tuple[SelfDualClass, ...], ...]


def enumerate_epsilon(datum: CuspidalDatum) -> EpsilonMap:
    """Surviving swap sets computed without validating any support:
    subsets of the kept classes with evenly many constrained ones,
    subject only to the parahoric re-solving being possible."""
    qs = q_sets(datum)
    group = datum.group
    kinds = group.slot_kinds
    cases = {"Sp": "ii", "SOodd": "i", "SOeven": "iii", "U": "u"}
    case_pair = (cases[kinds[0]], cases[kinds[1]])
    base1, base2 = _swapped_supports(datum, ())
    totals = (_support_total(case_pair[0], base1, group.field),
              _support_total(case_pair[1], base2, group.field))
    constrained = set(qs.constrained)
    out = []
    for subset in _subsets(qs.kept):
        if sum(1 for cls in subset if cls in constrained) % 2:
            continue
        shift = 0
        for cls in subset:
            m1, m2 = datum.multiplicity_pair(cls)
            shift += (char_poly_exponent(case_pair[0], cls, m2)
                      - char_poly_exponent(case_pair[0], cls, m1)) * cls.degree
        if _solve_slots(group, (totals[0] + shift, totals[1] - shift)):
            out.append(subset)
    return EpsilonMap(datum, qs, tuple(out))


def _solve_slots(group: GroupSpec, totals: tuple[int, int]) -> bool:
    """Arithmetic feasibility of slot totals: nonnegative integral n1, n2
    summing to the Witt index.  Independent of the parahoric scan."""
    kinds = group.slot_kinds
    ns = []
    for kind, a, total in zip(kinds, group.aniso, totals):
        if kind == "Sp":
            n, back = (total - 1) // 2, lambda n: 2 * n + 1
        elif kind == "SOodd":
            n, back = (total + 1 - a) // 2, lambda n, a=a: 2 * n + a - 1
        else:  # SOeven, U
            n, back = (total - a) // 2, lambda n, a=a: 2 * n + a
        if n < 0 or back(n) != total:
            return False
        ns.append(n)
    return ns[0] + ns[1] == group.witt


@dataclass(frozen=True)
class CrossFormEntry:
    group: GroupSpec
    companions: tuple[Companion, ...]

    @property
    def total(self) -> int:
        return sum(c.reps for c in self.companions)


def _other_forms(group: GroupSpec) -> tuple[GroupSpec, ...]:
    out = []
    for a1 in range(3):
        for a2 in range(3):
            if (group.dim - a1 - a2) % 2 or group.dim - a1 - a2 < 0:
                continue
            witt = (group.dim - a1 - a2) // 2
            if (witt, (a1, a2)) == (group.witt, group.aniso):
                continue
            try:
                out.append(GroupSpec(group.family, group.dim, witt, (a1, a2),
                                     group.field, group.epsilon))
            except ValueError:
                continue
    return tuple(sorted(out, key=lambda g: (-g.witt, g.aniso)))


def cross_form_companions(datum: CuspidalDatum) -> tuple[CrossFormEntry, ...]:
    """For every other form of the group, the swaps of raw classes that
    validate there with the same reducibility points.  Forms with no
    match are reported with an empty census."""
    qs = q_sets(datum)
    target = ired(datum)
    out = []
    for form in _other_forms(datum.group):
        found = []
        for subset in _subsets(qs.raw):
            companion = _build_companion(form, datum, subset)
            if companion is None or ired(companion) != target:
                continue
            found.append(Companion(subset, companion,
                                   count_representations(companion).total))
        out.append(CrossFormEntry(form, tuple(found)))
    return tuple(out)


def full_orthogonal_count(datum: CuspidalDatum) -> int:
    """Representations of the full orthogonal group above the datum.

    Sign tuples act on the slot series labels, one sign per slot of
    positive dimension, the sign flipping the two labels exactly when
    the slot series pair is swapped; each orbit contributes the order
    of its stabiliser.
    """
    if datum.group.family != "SOeven":
        raise ValueError("full orthogonal counts only apply to even orthogonal groups")
    field = datum.field
    slots = []
    acting = []
    for factor, support in zip(datum.parahoric.factors, datum.supports):
        n, action = slot_series(factor, support, field)
        slots.append(tuple(range(n)))
        if factor.dim > 0:
            acting.append((len(slots) - 1, action))
    gamma = list(itertools.product(*[(1, -1)] * len(acting)))
    tuples = list(itertools.product(*slots))

    def act(signs, labels):
        labels = list(labels)
        for (index, action), sign in zip(acting, signs):
            if sign < 0 and action == "swapped":
                labels[index] = 1 - labels[index]
        return tuple(labels)

    total = 0
    seen = set()
    for t in tuples:
        if t in seen:
            continue
        orbit = {act(signs, t) for signs in gamma}
        seen |= orbit
        total += len(gamma) // len(orbit)
    return total


@dataclass(frozen=True)
class PacketStats:
    datum: CuspidalDatum
    jordan_size: int
    packet_size: int
    e: int
    e0: int
    expected_count: int
    census_data: int
    census_total: int
    multiple: Fraction
    q: int
    delta: int
    o_per_datum: int | None = None
    o_total: int | None = None
    o_multiple: Fraction | None = None


def packet_stats(datum: CuspidalDatum,
                 census: CompanionCensus | None = None) -> PacketStats:
    census = census if census is not None else companions(datum)
    size = len(jordan(datum))
    e = e0 = 0
    for cls in iteration_domain(datum):
        for s in reducibility_pair(datum, cls):
            if s.is_integral and s.twice >= 2:
                e += 1
                if (s.twice // 2) % 2:
                    e0 = 1
    expected = 2 ** (e - e0)
    stats = dict(
        datum=datum,
        jordan_size=size,
        packet_size=2 ** max(size - 1, 0),
        e=e,
        e0=e0,
        expected_count=expected,
        census_data=len(census.companions),
        census_total=census.total,
        multiple=Fraction(census.total, expected),
        q=census.qsets.q,
        delta=census.qsets.delta,
    )
    if datum.group.family == "SOeven":
        per = full_orthogonal_count(datum)
        o_total = sum(full_orthogonal_count(c.datum) for c in census.companions)
        stats.update(o_per_datum=per, o_total=o_total,
                     o_multiple=Fraction(o_total, expected))
    return PacketStats(**stats)
