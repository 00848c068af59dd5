"""Reducibility points, Jordan chains and parameter shapes of a datum.

Every self-dual class P supporting a datum, together with x -+ 1 which
are always inspected, gets a pair of finite parameters (f1, f2), one per
slot, read off the multiplicities through the tables

    trivial involution, linear P:
        case i:   f = 2m + 1 at both eigenvalues
        case ii:  f = 2m + 1 at x - 1,  f = 2m at x + 1
        case iii: f = 2m at both
    even degree (trivial) and every class of a unitary slot:
        f = (2m + 1) deg(P) / 2,   a half-integer when deg(P) is odd

with m = 0 when P does not appear in the slot.  The two reducibility
exponents of P are then

    s  = (f1 + f2) / (2 deg P),    s' = |f1 - f2| / (2 deg P),

always half-integers, with s >= s'.  Members with s >= 1 are the real
reducibility points; each contributes the Jordan chain m = 2s - 1,
2s - 3, ... >= 1.  The chains tile the dual standard representation:

    sum over P of (floor(s^2) + floor(s'^2)) deg P  =  dual dimension.

A parameter shape distributes the two chains of each class over its two
tagged members: the tags are ("1", "w0") at x - 1, ("w1", "w2") at
x + 1, ("rho", "rho'") elsewhere.  Symplectic groups keep only shapes
whose total determinant character is trivial; the four linear tags map
to the Klein group and each contributes its vector times the parity of
the chain sum it carries.  When some even degree class carries an odd
chain sum the determinant can be corrected for free and every shape
survives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cuspdata import CuspidalDatum
from .ffpoly import SelfDualClass, class_x_minus_one, class_x_plus_one
from .groups import dual_dimension

__all__ = [
    "HalfInt",
    "ClassReport",
    "ReducibilityReport",
    "JordanEntry",
    "ShapeMember",
    "ParamShape",
    "finite_parameter",
    "parameter_pair",
    "reducibility_pair",
    "iteration_domain",
    "ired",
    "jordan",
    "jordan_chain",
    "identity_sides",
    "verify_identity",
    "reducibility_report",
    "parameter_shapes",
]


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2) Z, stored as its double."""

    twice: int

    @staticmethod
    def of(n: int) -> "HalfInt":
        return HalfInt(2 * n)

    @property
    def is_integral(self) -> bool:
        return self.twice % 2 == 0

    def as_int(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    @property
    def floor_square(self) -> int:
        """floor of the square: exact for integers, k^2 + k for k + 1/2."""
        return self.twice * self.twice // 4

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + other.twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - other.twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self.twice})"


def finite_parameter(case: str, cls: SelfDualClass, m: int) -> HalfInt:
    """The slot parameter f of the class at multiplicity m (0 if absent)."""
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    if case == "u" or not cls.is_linear:
        return HalfInt((2 * m + 1) * cls.degree)
    if case == "i":
        return HalfInt.of(2 * m + 1)
    if case == "ii":
        return HalfInt.of(2 * m + 1 if cls.is_x_minus_one else 2 * m)
    if case == "iii":
        return HalfInt.of(2 * m)
    raise ValueError(f"unknown case {case!r}")


def parameter_pair(datum: CuspidalDatum, cls: SelfDualClass) -> tuple[HalfInt, HalfInt]:
    """(f1, f2) of the class in the two slots."""
    out = []
    for factor, support in zip(datum.parahoric.factors, datum.supports):
        out.append(finite_parameter(factor.case, cls, support.get(cls)))
    return (out[0], out[1])


def reducibility_pair(datum: CuspidalDatum, cls: SelfDualClass) -> tuple[HalfInt, HalfInt]:
    """(s, s') with s >= s', both half-integers."""
    f1, f2 = parameter_pair(datum, cls)
    d = cls.degree
    total, diff = f1.twice + f2.twice, abs(f1.twice - f2.twice)
    if total % (2 * d) or diff % (2 * d):
        raise AssertionError(f"reducibility exponent of {cls.label} is not half-integral")
    return (HalfInt(total // (2 * d)), HalfInt(diff // (2 * d)))


def iteration_domain(datum: CuspidalDatum) -> tuple[SelfDualClass, ...]:
    """Support classes together with x -+ 1, in canonical order."""
    field = datum.field
    seen = {c.sort_key: c for c in (class_x_minus_one(field), class_x_plus_one(field))}
    for c in datum.support_classes():
        seen[c.sort_key] = c
    return tuple(seen[k] for k in sorted(seen))


def ired(datum: CuspidalDatum) -> tuple[tuple[SelfDualClass, HalfInt], ...]:
    """Multiset of real reducibility points: members with s >= 1."""
    out = []
    for cls in iteration_domain(datum):
        for s in reducibility_pair(datum, cls):
            if s.twice >= 2:
                out.append((cls, s))
    return tuple(sorted(out, key=lambda e: (e[0].sort_key, -e[1].twice)))


def jordan_chain(s: HalfInt) -> tuple[int, ...]:
    """Multiplicities 2s - 1, 2s - 3, ... >= 1 (empty when s < 1)."""
    return tuple(range(s.twice - 1, 0, -2))


@dataclass(frozen=True)
class JordanEntry:
    cls: SelfDualClass
    member: int  # 0 carries the larger exponent
    m: int


def jordan(datum: CuspidalDatum) -> tuple[JordanEntry, ...]:
    out = []
    for cls in iteration_domain(datum):
        for member, s in enumerate(reducibility_pair(datum, cls)):
            out.extend(JordanEntry(cls, member, m) for m in jordan_chain(s))
    return tuple(out)


def identity_sides(datum: CuspidalDatum) -> tuple[int, int]:
    lhs = 0
    for cls in iteration_domain(datum):
        s, s2 = reducibility_pair(datum, cls)
        lhs += (s.floor_square + s2.floor_square) * cls.degree
    return lhs, dual_dimension(datum.group)


def verify_identity(datum: CuspidalDatum) -> bool:
    lhs, rhs = identity_sides(datum)
    return lhs == rhs


@dataclass(frozen=True)
class ClassReport:
    cls: SelfDualClass
    f_pair: tuple[HalfInt, HalfInt]
    s_pair: tuple[HalfInt, HalfInt]
    chains: tuple[tuple[int, ...], tuple[int, ...]]

    def __str__(self) -> str:
        f1, f2 = self.f_pair
        s, s2 = self.s_pair
        return f"{self.cls.label}: f=({f1},{f2}) s=({s},{s2})"


@dataclass(frozen=True)
class ReducibilityReport:
    datum: CuspidalDatum
    classes: tuple[ClassReport, ...]
    lhs: int
    dual_dimension: int

    @property
    def identity_holds(self) -> bool:
        return self.lhs == self.dual_dimension


def reducibility_report(datum: CuspidalDatum) -> ReducibilityReport:
    reports = []
    for cls in iteration_domain(datum):
        f_pair = parameter_pair(datum, cls)
        s_pair = reducibility_pair(datum, cls)
        chains = (jordan_chain(s_pair[0]), jordan_chain(s_pair[1]))
        reports.append(ClassReport(cls, f_pair, s_pair, chains))
    lhs, rhs = identity_sides(datum)
    return ReducibilityReport(datum, tuple(reports), lhs, rhs)


# ---------------------------------------------------------------------------
# Parameter shapes.
# ---------------------------------------------------------------------------

_KLEIN = {"1": (0, 0), "w0": (1, 0), "w1": (0, 1), "w2": (1, 1)}


@dataclass(frozen=True)
class ShapeMember:
    tag: str
    s: HalfInt
    chain: tuple[int, ...]

    def __str__(self) -> str:
        body = ",".join(str(m) for m in self.chain) if self.chain else "-"
        return f"{self.tag}<-[{body}]"


@dataclass(frozen=True)
class ParamShape:
    entries: tuple[tuple[SelfDualClass, tuple[ShapeMember, ShapeMember]], ...]

    def __str__(self) -> str:
        return "; ".join(
            f"{cls.label}: {members[0]} {members[1]}" for cls, members in self.entries)


def _member_tags(cls: SelfDualClass, trivial_ext: bool) -> tuple[str, str]:
    if trivial_ext and cls.is_x_minus_one:
        return ("1", "w0")
    if trivial_ext and cls.is_x_plus_one:
        return ("w1", "w2")
    return ("rho", "rho'")


def parameter_shapes(datum: CuspidalDatum) -> tuple[ParamShape, ...]:
    """All chain-to-member assignments, det-filtered for symplectic groups."""
    trivial_ext = datum.field.ext == "trivial"
    per_class: list[list[tuple[SelfDualClass, tuple[ShapeMember, ShapeMember]]]] = []
    free_determinant = False
    for cls in iteration_domain(datum):
        s, s2 = reducibility_pair(datum, cls)
        chains = (jordan_chain(s), jordan_chain(s2))
        if not chains[0] and not chains[1]:
            continue
        if cls.degree > 1 and sum(chains[0] + chains[1]) % 2:
            free_determinant = True
        tags = _member_tags(cls, trivial_ext)
        options = [(cls, (ShapeMember(tags[0], s, chains[0]),
                          ShapeMember(tags[1], s2, chains[1])))]
        if s != s2:
            options.append((cls, (ShapeMember(tags[0], s2, chains[1]),
                                  ShapeMember(tags[1], s, chains[0]))))
        per_class.append(options)
    shapes = [ParamShape(tuple(combo)) for combo in product(*per_class)]
    if datum.group.family != "Sp" or free_determinant:
        return tuple(shapes)
    kept = []
    for shape in shapes:
        det = (0, 0)
        for cls, members in shape.entries:
            for member in members:
                vec = _KLEIN.get(member.tag)
                if vec and sum(member.chain) % 2:
                    det = ((det[0] + vec[0]) % 2, (det[1] + vec[1]) % 2)
        if det == (0, 0):
            kept.append(shape)
    return tuple(kept)
