"""Cuspidal data on the parahoric quotients, with validation and counts.

A depth-zero cuspidal datum assigns to each of the two finite factors of
a maximal parahoric quotient a support: a finite set of self-dual
classes P with multiplicities m_P >= 1.  The support encodes a semisimple
class with characteristic polynomial prod P^(a_P), where the exponent
a_P depends on the factor case and on whether P is linear:

    nonlinear P, every case:      a_P = m (m + 1) / 2
    linear, case i   (SO odd):    a(x-1) = 2 (m^2 + m),  a(x+1) = same
    linear, case ii  (Sp):        a(x-1) = 2 (m^2 + m) + 1,  a(x+1) = 2 m^2
    linear, case iii (SO even):   a(x-1) = 2 m^2,  a(x+1) = 2 m^2
    case u (unitary):             the nonlinear formula throughout

A symplectic factor always carries x - 1: when the support omits it, the
entry is implicit with m = 0 and a = 1, so the exponent totals of a
symplectic factor add to dim + 1 rather than dim.

Validation clauses, in order: (a) classes match the factor's field,
involution and degree parity; (b) multiplicities are positive; (c) the
exponent totals (with the implicit entry) equal the factor's dual
dimension; (d) an even orthogonal factor's support has the right type:
the parity of m(x-1) + m(x+1) + sum of a_P over nonlinear P must match
the factor sign, minus-type blocks carrying one sign each.

Representation counts: a factor contributes one inertial series, or two
when the semisimple class supports a split pair, and the component group
of the parahoric (order at most 2) acts on the labels.  The count rules
are in count_representations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .ffpoly import (
    FieldSpec,
    SelfDualClass,
    class_x_minus_one,
    class_x_plus_one,
    count_self_dual_classes,
    enumerate_self_dual_classes,
)
from .groups import (
    FiniteFactor,
    GroupSpec,
    ParahoricSpec,
    component_group_order,
    enumerate_parahorics,
)

__all__ = [
    "FactorSupport",
    "CuspidalDatum",
    "RepCount",
    "DatumSignature",
    "char_poly_exponent",
    "minus_type_exponent",
    "linear_multiplicities",
    "implicit_linear_entries",
    "validate_support",
    "support_is_valid",
    "count_representations",
    "slot_series",
    "enumerate_supports",
    "enumerate_data",
    "enumerate_signatures",
    "signature_of",
    "signature_weight",
    "signature_representative",
]


def char_poly_exponent(case: str, cls: SelfDualClass, m: int) -> int:
    """Exponent a_P of the class P in the characteristic polynomial."""
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    if case == "u" or not cls.is_linear:
        return m * (m + 1) // 2
    if case == "i":
        return 2 * (m * m + m)
    if case == "ii":
        return 2 * (m * m + m) + 1 if cls.is_x_minus_one else 2 * m * m
    if case == "iii":
        return 2 * m * m
    raise ValueError(f"unknown case {case!r}")


def minus_type_exponent(cls: SelfDualClass, m: int) -> int:
    """Number of minus-type blocks contributed to an even orthogonal factor.

    Each linear eigenvalue block of parameter m contributes m such
    blocks; a nonlinear class contributes one per copy, that is a_P,
    since its restriction-of-scalars torus has minus type in every even
    degree.
    """
    if cls.is_linear:
        return m
    return m * (m + 1) // 2


@dataclass(frozen=True)
class FactorSupport:
    """Multiset of self-dual classes with positive multiplicities."""

    entries: tuple[tuple[SelfDualClass, int], ...]

    def __post_init__(self) -> None:
        keys = [cls.sort_key for cls, _ in self.entries]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("entries must be sorted by class and distinct")
        if any(m < 1 for _, m in self.entries):
            raise ValueError("multiplicities must be positive")

    @staticmethod
    def of(pairs) -> "FactorSupport":
        items = dict(pairs)
        ordered = tuple(sorted(items.items(), key=lambda kv: kv[0].sort_key))
        return FactorSupport(ordered)

    @staticmethod
    def empty() -> "FactorSupport":
        return FactorSupport(())

    def get(self, cls: SelfDualClass) -> int:
        for c, m in self.entries:
            if c == cls:
                return m
        return 0

    @property
    def classes(self) -> tuple[SelfDualClass, ...]:
        return tuple(c for c, _ in self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " ".join(f"({c.label})^{m}" for c, m in self.entries)


def linear_multiplicities(support: FactorSupport, field: FieldSpec) -> tuple[int, int]:
    """Multiplicities (m at x-1, m at x+1), zero when absent."""
    return (support.get(class_x_minus_one(field)),
            support.get(class_x_plus_one(field)))


def implicit_linear_entries(factor: FiniteFactor, support: FactorSupport,
                            field: FieldSpec) -> tuple[tuple[SelfDualClass, int, int], ...]:
    """Entries present in the characteristic polynomial but not the support.

    Only a symplectic factor has one: x - 1 with m = 0 and a = 1.
    """
    if factor.case == "ii" and support.get(class_x_minus_one(field)) == 0:
        return ((class_x_minus_one(field), 0, 1),)
    return ()


def _exponent_total(factor: FiniteFactor, support: FactorSupport, field: FieldSpec) -> int:
    total = sum(char_poly_exponent(factor.case, cls, m) * cls.degree
                for cls, m in support.entries)
    for cls, m, a in implicit_linear_entries(factor, support, field):
        total += a * cls.degree
    return total


def validate_support(factor: FiniteFactor, support: FactorSupport, field: FieldSpec) -> None:
    """Raise ValueError (with the clause named) when the support is bad."""
    quadratic = field.ext == "quadratic"
    if (factor.case == "u") != quadratic:
        raise ValueError("clause a: factor kind does not match the field involution")
    for cls, m in support.entries:
        if cls.field != field:
            raise ValueError(f"clause a: class {cls.label} lives over the wrong field")
        if factor.case == "u":
            if cls.degree % 2 == 0:
                raise ValueError(f"clause a: class {cls.label} has even degree")
        elif cls.degree != 1 and cls.degree % 2:
            raise ValueError(f"clause a: class {cls.label} has odd degree above 1")
        if m < 1:
            raise ValueError(f"clause b: multiplicity of {cls.label} is not positive")
    total = _exponent_total(factor, support, field)
    if total != factor.dual_dim:
        raise ValueError(
            f"clause c: exponent total {total} differs from dual dimension {factor.dual_dim}")
    if factor.case == "iii":
        exponent = sum(minus_type_exponent(cls, m) for cls, m in support.entries)
        if (-1) ** exponent != factor.sign:
            raise ValueError("clause d: support type does not match the factor sign")


def support_is_valid(factor: FiniteFactor, support: FactorSupport, field: FieldSpec) -> bool:
    try:
        validate_support(factor, support, field)
    except ValueError:
        return False
    return True


@dataclass(frozen=True)
class CuspidalDatum:
    """A maximal parahoric together with one valid support per factor."""

    parahoric: ParahoricSpec
    supports: tuple[FactorSupport, FactorSupport]

    def __post_init__(self) -> None:
        if not self.parahoric.maximal:
            raise ValueError("cuspidal data live on maximal parahorics")
        field = self.group.field
        for factor, support in zip(self.parahoric.factors, self.supports):
            validate_support(factor, support, field)

    @property
    def group(self) -> GroupSpec:
        return self.parahoric.group

    @property
    def field(self) -> FieldSpec:
        return self.group.field

    def support_classes(self) -> tuple[SelfDualClass, ...]:
        seen = {}
        for support in self.supports:
            for cls, _ in support.entries:
                seen[cls.sort_key] = cls
        return tuple(seen[k] for k in sorted(seen))

    def multiplicity_pair(self, cls: SelfDualClass) -> tuple[int, int]:
        return (self.supports[0].get(cls), self.supports[1].get(cls))

    def __str__(self) -> str:
        s1, s2 = self.supports
        return f"{self.parahoric} [{s1}] x [{s2}]"


@dataclass(frozen=True)
class RepCount:
    """Series counts per slot and the total number of representations."""

    n1: int
    n2: int
    component_order: int
    slot_actions: tuple[str, str]  # "fixed" or "swapped"
    total: int


def slot_series(factor: FiniteFactor, support: FactorSupport, field: FieldSpec) -> tuple[int, str]:
    """Number of inertial series of the slot and the component action on them."""
    if factor.case in ("i", "u"):
        return 1, "fixed"
    m_plus, m_minus = linear_multiplicities(support, field)
    if factor.case == "ii":
        return (2 if m_minus > 0 else 1), "fixed"
    # case iii
    if m_plus == 0 and m_minus == 0:
        if factor.dual_dim > 0:
            return 2, "swapped"
        return 1, "fixed"
    if m_plus > 0 and m_minus > 0:
        return 2, "fixed"
    return 1, "fixed"


def count_representations(datum: CuspidalDatum) -> RepCount:
    field = datum.field
    (f1, f2) = datum.parahoric.factors
    n1, act1 = slot_series(f1, datum.supports[0], field)
    n2, act2 = slot_series(f2, datum.supports[1], field)
    order = component_group_order(datum.parahoric)
    if order == 1:
        total = n1 * n2
    elif act1 == "fixed" and act2 == "fixed":
        total = 2 * n1 * n2
    elif act1 == "swapped" and act2 == "swapped":
        total = 2
    else:
        total = n1 if act2 == "swapped" else n2
    return RepCount(n1, n2, order, (act1, act2), total)


def _degree_pool(field: FieldSpec, budget: int, max_degree: int | None) -> list[int]:
    cap = budget if max_degree is None else min(budget, max_degree)
    if field.ext == "trivial":
        return [d for d in range(2, cap + 1, 2) if count_self_dual_classes(field, d) > 0]
    return [d for d in range(1, cap + 1, 2) if count_self_dual_classes(field, d) > 0]


def enumerate_supports(factor: FiniteFactor, field: FieldSpec,
                       max_degree: int | None = None) -> tuple[FactorSupport, ...]:
    """All valid supports of one factor, nonlinear degrees capped if asked."""
    budget = factor.dual_dim
    case = factor.case
    out: list[FactorSupport] = []

    def fill_pool(pool_index: int, remaining: int, acc: list, pool: list[SelfDualClass]):
        if pool_index >= len(pool):
            if remaining == 0:
                entries = [(c, m) for c, m in acc if m > 0]
                support = FactorSupport.of(entries)
                if support_is_valid(factor, support, field):
                    out.append(support)
            return
        cls = pool[pool_index]
        m = 0
        while True:
            # a(0) = 0 for pooled classes, so cost climbs from zero.
            cost = char_poly_exponent(case, cls, m) * cls.degree
            if cost > remaining:
                break
            acc.append((cls, m))
            fill_pool(pool_index + 1, remaining - cost, acc, pool)
            acc.pop()
            m += 1

    pool = [c for d in _degree_pool(field, budget, max_degree)
            for c in enumerate_self_dual_classes(field, d)]
    if case == "u":
        fill_pool(0, budget, [], pool)
        return tuple(out)

    xm, xp = class_x_minus_one(field), class_x_plus_one(field)
    m_plus = 0
    while char_poly_exponent(case, xm, m_plus) <= budget:
        used_p = char_poly_exponent(case, xm, m_plus)
        m_minus = 0
        while used_p + char_poly_exponent(case, xp, m_minus) <= budget:
            used = used_p + char_poly_exponent(case, xp, m_minus)
            acc = [(xm, m_plus), (xp, m_minus)]
            fill_pool(0, budget - used, acc, pool)
            m_minus += 1
        m_plus += 1
    return tuple(out)


def enumerate_data(group: GroupSpec, max_degree: int | None = None) -> tuple[CuspidalDatum, ...]:
    """Every cuspidal datum of the group, over all maximal parahorics."""
    out = []
    for parahoric in enumerate_parahorics(group):
        if not parahoric.maximal:
            continue
        f1, f2 = parahoric.factors
        lists = (enumerate_supports(f1, group.field, max_degree),
                 enumerate_supports(f2, group.field, max_degree))
        for s1 in lists[0]:
            for s2 in lists[1]:
                out.append(CuspidalDatum(parahoric, (s1, s2)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Signature enumeration.  Classes of equal degree enter every computed
# quantity interchangeably, so a census only needs one representative per
# "signature": the multiplicity pairs at x -+ 1 (trivial involution) plus
# the multiset of (degree, m1, m2) triples over anonymous classes, with an
# exact count of how many concrete data share the signature.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DatumSignature:
    n1: int
    n2: int
    m_plus: tuple[int, int]
    m_minus: tuple[int, int]
    pooled: tuple[tuple[int, int, int], ...]  # sorted (degree, m1, m2)

    def __str__(self) -> str:
        parts = [f"({self.n1},{self.n2})"]
        if self.m_plus != (0, 0):
            parts.append(f"x-1:{self.m_plus}")
        if self.m_minus != (0, 0):
            parts.append(f"x+1:{self.m_minus}")
        parts.extend(f"d{d}:{(a, b)}" for d, a, b in self.pooled)
        return " ".join(parts)


def signature_of(datum: CuspidalDatum) -> DatumSignature:
    field = datum.field
    pooled = []
    m_plus = (0, 0)
    m_minus = (0, 0)
    for cls in datum.support_classes():
        pair = datum.multiplicity_pair(cls)
        if field.ext == "trivial" and cls.is_x_minus_one:
            m_plus = pair
        elif field.ext == "trivial" and cls.is_x_plus_one:
            m_minus = pair
        else:
            pooled.append((cls.degree, pair[0], pair[1]))
    return DatumSignature(datum.parahoric.n1, datum.parahoric.n2,
                          m_plus, m_minus, tuple(sorted(pooled)))


def signature_weight(group: GroupSpec, sig: DatumSignature) -> int:
    """Number of concrete data sharing the signature."""
    weight = 1
    for degree in sorted({d for d, _, _ in sig.pooled}):
        triples = [t for t in sig.pooled if t[0] == degree]
        n = count_self_dual_classes(group.field, degree)
        if group.field.ext == "trivial" and degree == 1:
            raise ValueError("linear classes are not pooled for the trivial involution")
        k = len(triples)
        ways = 1
        for i in range(k):
            ways *= (n - i)
        for t in set(triples):
            ways //= factorial(triples.count(t))
        weight *= ways
    return weight


def signature_representative(group: GroupSpec, sig: DatumSignature) -> CuspidalDatum:
    """A concrete datum with the given signature, on canonical classes."""
    field = group.field
    parahoric = ParahoricSpec(group, sig.n1, sig.n2)
    s1: list[tuple[SelfDualClass, int]] = []
    s2: list[tuple[SelfDualClass, int]] = []
    if sig.m_plus[0]:
        s1.append((class_x_minus_one(field), sig.m_plus[0]))
    if sig.m_plus[1]:
        s2.append((class_x_minus_one(field), sig.m_plus[1]))
    if sig.m_minus[0]:
        s1.append((class_x_plus_one(field), sig.m_minus[0]))
    if sig.m_minus[1]:
        s2.append((class_x_plus_one(field), sig.m_minus[1]))
    by_degree: dict[int, list[tuple[int, int]]] = {}
    for d, a, b in sig.pooled:
        by_degree.setdefault(d, []).append((a, b))
    for d, pairs in by_degree.items():
        classes = enumerate_self_dual_classes(group.field, d)
        if len(pairs) > len(classes):
            raise ValueError(f"not enough degree {d} classes for the signature")
        for cls, (a, b) in zip(classes, pairs):
            if a:
                s1.append((cls, a))
            if b:
                s2.append((cls, b))
    return CuspidalDatum(parahoric, (FactorSupport.of(s1), FactorSupport.of(s2)))


def _pooled_signatures(field: FieldSpec, budgets: tuple[int, int],
                       max_degree: int | None):
    """Yield sorted triple tuples filling both exponent budgets exactly.

    Pooled classes all follow the nonlinear exponent m (m + 1) / 2, so
    only the pair (m1, m2) matters; pairs at one degree are emitted in
    nonincreasing order to list each multiset once.
    """
    degrees = _degree_pool(field, max(budgets), max_degree)
    counts = {d: count_self_dual_classes(field, d) for d in degrees}

    def rec(deg_index: int, b1: int, b2: int, acc: list):
        if b1 == 0 and b2 == 0:
            yield tuple(acc)
            return
        if deg_index >= len(degrees):
            return
        d = degrees[deg_index]

        def choose(last_pair, left, r1, r2):
            yield from rec(deg_index + 1, r1, r2, acc)
            if left == 0:
                return
            m1 = 0
            while m1 * (m1 + 1) // 2 * d <= r1:
                c1 = m1 * (m1 + 1) // 2 * d
                m2 = 0
                while True:
                    c2 = m2 * (m2 + 1) // 2 * d
                    if c2 > r2:
                        break
                    pair = (m1, m2)
                    if pair != (0, 0) and pair <= last_pair:
                        acc.append((d, m1, m2))
                        yield from choose(pair, left - 1, r1 - c1, r2 - c2)
                        acc.pop()
                    m2 += 1
                m1 += 1

        top = (max(budgets) + 1, max(budgets) + 1)
        yield from choose(top, counts[d], b1, b2)

    yield from rec(0, budgets[0], budgets[1], [])


def enumerate_signatures(group: GroupSpec, max_degree: int | None = None):
    """Yield (signature, weight) over all maximal parahorics of the group."""
    field = group.field
    for parahoric in enumerate_parahorics(group):
        if not parahoric.maximal:
            continue
        f1, f2 = parahoric.factors
        budgets = (f1.dual_dim, f2.dual_dim)
        case_pair = (f1.case, f2.case)
        if field.ext == "quadratic":
            linear_choices = [((0, 0), (0, 0), budgets)]
        else:
            xm, xp = class_x_minus_one(field), class_x_plus_one(field)
            linear_choices = []
            for mp1, mp2 in itertools.product(range(budgets[0] + 1), range(budgets[1] + 1)):
                ap = (char_poly_exponent(case_pair[0], xm, mp1),
                      char_poly_exponent(case_pair[1], xm, mp2))
                if ap[0] > budgets[0] or ap[1] > budgets[1]:
                    continue
                for mm1, mm2 in itertools.product(range(budgets[0] + 1), range(budgets[1] + 1)):
                    am = (char_poly_exponent(case_pair[0], xp, mm1),
                          char_poly_exponent(case_pair[1], xp, mm2))
                    rem = (budgets[0] - ap[0] - am[0], budgets[1] - ap[1] - am[1])
                    if rem[0] < 0 or rem[1] < 0:
                        continue
                    linear_choices.append(((mp1, mp2), (mm1, mm2), rem))
        for m_plus, m_minus, rem in linear_choices:
            for pooled in _pooled_signatures(field, rem, max_degree):
                sig = DatumSignature(parahoric.n1, parahoric.n2, m_plus, m_minus,
                                     tuple(sorted(pooled)))
                if not _signature_sign_ok(parahoric, sig):
                    continue
                yield sig, signature_weight(group, sig)


def _signature_sign_ok(parahoric: ParahoricSpec, sig: DatumSignature) -> bool:
    """Clause d, evaluated on the signature without building a datum."""
    for index, factor in enumerate(parahoric.factors):
        if factor.case != "iii":
            continue
        exponent = sig.m_plus[index] + sig.m_minus[index]
        exponent += sum(m * (m + 1) // 2 for d, *pair in sig.pooled for m in [pair[index]])
        if (-1) ** exponent != factor.sign:
            return False
    return True
