"""Classical groups over a p-adic field and their parahoric quotients.

A group is specified by its family, the dimension D of the underlying
space, the Witt index N over the base field, and the way the anisotropic
kernel distributes over the two ends of the local Dynkin diagram.  Five
families are treated:

* Sp:      symplectic, D = 2N,
* SOodd:   orthogonal, D odd, anisotropic defect 1 or 3,
* SOeven:  orthogonal, D even, anisotropic defect 0, 2 or 4,
* Uunram:  unitary over the unramified quadratic extension,
* Uram:    unitary over a ramified quadratic extension, with a sign
           epsilon recording which hermitian normalization is taken.

For 0 <= N1 <= N the maximal compact subgroups sit in a chain indexed by
(N1, N2 = N - N1), and the reductive quotient of the parahoric splits as
a product of two finite classical factors, one per end.  The factor kinds
follow the family:

    Sp      -> Sp(2*N1)        x Sp(2*N2)
    SO      -> SO(2*N1 + a1)   x SO(2*N2 + a2)
    Uunram  -> U(2*N1 + a1)    x U(2*N2 + a2)
    Uram    -> SO(2*N1 + a1)   x Sp(2*N2)        (epsilon = +1)
               Sp(2*N1)        x SO(2*N2 + a2)   (epsilon = -1)

where (a1, a2) is the anisotropic split.  An even orthogonal factor
carries a type sign: split (plus) when its anisotropic part is 0, and
nonsplit (minus) when it is 2.

Each finite factor falls in one of four combinatorial cases used by the
rest of the package: (i) odd orthogonal, (ii) symplectic, (iii) even
orthogonal, (u) unitary.

>>> G = GroupSpec("Sp", 6, 3, (0, 0), FieldSpec(3))
>>> dual_dimension(G)
7
>>> [str(P) for P in enumerate_parahorics(G)]
['Sp(6)/F3:(3,0)', 'Sp(6)/F3:(2,1)', 'Sp(6)/F3:(1,2)', 'Sp(6)/F3:(0,3)']
>>> [str(f) for f in enumerate_parahorics(G)[1].factors]
['Sp(4)', 'Sp(2)']
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffpoly import FieldSpec

__all__ = [
    "FAMILIES",
    "FiniteFactor",
    "GroupSpec",
    "ParahoricSpec",
    "dual_dimension",
    "enumerate_parahorics",
    "component_group_order",
]

FAMILIES = ("Sp", "SOodd", "SOeven", "Uunram", "Uram")

# Admissible anisotropic splits (a1, a2) by family and dimension parity.
_SO_EVEN_SPLITS = ((0, 0), (1, 1), (2, 0), (0, 2), (2, 2))
_SO_ODD_SPLITS = ((1, 0), (0, 1), (2, 1), (1, 2))


@dataclass(frozen=True)
class FiniteFactor:
    """One factor of the reductive quotient of a parahoric.

    kind is "Sp", "SOodd", "SOeven" or "U"; dim is the dimension of the
    space the factor acts on (so Sp(dim), SO(dim), U(dim)); sign
    distinguishes the two forms of an even orthogonal group and is 0
    for the other kinds.
    """

    kind: str
    dim: int
    sign: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("Sp", "SOodd", "SOeven", "U"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.dim < 0:
            raise ValueError("factor dimension must be nonnegative")
        if self.kind == "Sp" and self.dim % 2:
            raise ValueError("symplectic factors have even dimension")
        if self.kind == "SOodd" and self.dim % 2 == 0:
            raise ValueError("odd orthogonal factors have odd dimension")
        if self.kind == "SOeven":
            if self.dim % 2:
                raise ValueError("even orthogonal factors have even dimension")
            if self.sign not in (1, -1):
                raise ValueError("even orthogonal factors carry a sign")
            if self.dim == 0 and self.sign != 1:
                raise ValueError("the trivial orthogonal factor is split")
        elif self.sign != 0:
            raise ValueError("only even orthogonal factors carry a sign")

    @property
    def case(self) -> str:
        """Combinatorial case tag: i, ii, iii or u."""
        return {"SOodd": "i", "Sp": "ii", "SOeven": "iii", "U": "u"}[self.kind]

    @property
    def dual_dim(self) -> int:
        """Dimension of the dual-side space attached to the factor."""
        if self.kind == "Sp":
            return self.dim + 1
        if self.kind == "SOodd":
            return self.dim - 1
        return self.dim

    def __str__(self) -> str:
        if self.kind == "SOeven":
            return f"SO{'+' if self.sign > 0 else '-'}({self.dim})"
        if self.kind == "SOodd":
            return f"SO({self.dim})"
        return f"{self.kind}({self.dim})"


@dataclass(frozen=True)
class GroupSpec:
    """A classical group over the p-adic field with given residue data."""

    family: str
    dim: int
    witt: int
    aniso: tuple[int, int]
    field: FieldSpec
    epsilon: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.witt < 0:
            raise ValueError("Witt index must be nonnegative")
        needs_quadratic = self.family == "Uunram"
        if (self.field.ext == "quadratic") != needs_quadratic:
            raise ValueError("field involution does not match the family")
        if self.family == "Uram":
            if self.epsilon not in (1, -1):
                raise ValueError("ramified unitary groups need epsilon = +-1")
        elif self.epsilon != 0:
            raise ValueError("epsilon is only meaningful for ramified unitary groups")
        a1, a2 = self.aniso
        if self.dim != 2 * self.witt + a1 + a2:
            raise ValueError("dim must equal 2*witt + sum(aniso)")
        if self.family == "Sp":
            if self.aniso != (0, 0) or self.dim < 2:
                raise ValueError("symplectic groups are split of even dimension")
        elif self.family == "SOodd":
            if self.dim % 2 == 0 or self.aniso not in _SO_ODD_SPLITS:
                raise ValueError("bad odd orthogonal anisotropic split")
        elif self.family == "SOeven":
            if self.dim % 2 or self.aniso not in _SO_EVEN_SPLITS:
                raise ValueError("bad even orthogonal anisotropic split")
            if self.dim == 2 and self.aniso == (0, 0):
                raise ValueError("the two-dimensional split orthogonal group is excluded")
        elif self.family == "Uunram":
            if self.aniso not in (((0, 0), (1, 1)) if self.dim % 2 == 0 else ((1, 0), (0, 1))):
                raise ValueError("bad unramified unitary anisotropic split")
        else:  # Uram
            a_or = a1 if self.epsilon == 1 else a2
            a_sp = a2 if self.epsilon == 1 else a1
            if a_sp != 0 or a_or not in (0, 1, 2) or a_or % 2 != self.dim % 2:
                raise ValueError("bad ramified unitary anisotropic split")
        if self.dim < 1:
            raise ValueError("dimension must be positive")

    @property
    def slot_kinds(self) -> tuple[str, str]:
        """Factor kinds of the two parahoric slots (independent of N1)."""
        a1, a2 = self.aniso
        if self.family == "Sp":
            return ("Sp", "Sp")
        if self.family in ("SOodd", "SOeven"):
            return ("SOodd" if a1 % 2 else "SOeven", "SOodd" if a2 % 2 else "SOeven")
        if self.family == "Uunram":
            return ("U", "U")
        if self.epsilon == 1:
            return ("SOodd" if a1 % 2 else "SOeven", "Sp")
        return ("Sp", "SOodd" if a2 % 2 else "SOeven")

    def __str__(self) -> str:
        name = {"Sp": "Sp", "SOodd": "SO", "SOeven": "SO", "Uunram": "U", "Uram": "U"}[self.family]
        tags = [f"w{self.witt}", f"a{self.aniso[0]}{self.aniso[1]}"]
        if self.family == "Uram":
            tags.append("e+" if self.epsilon > 0 else "e-")
        if self.family == "Uunram":
            tags.append("ur")
        base = f"{name}({self.dim})"
        extra = ",".join(tags)
        return f"{base}[{extra}]/F{self.field.q}"


def dual_dimension(group: GroupSpec) -> int:
    """Dimension of the dual-side space N^ attached to the group."""
    if group.family == "Sp":
        return group.dim + 1
    if group.family == "SOodd":
        return group.dim - 1
    return group.dim


def _slot_factor(kind: str, n: int, a: int) -> FiniteFactor:
    dim = 2 * n + a
    if kind == "Sp":
        return FiniteFactor("Sp", dim)
    if kind == "SOodd":
        return FiniteFactor("SOodd", dim)
    if kind == "SOeven":
        return FiniteFactor("SOeven", dim, 1 if a == 0 else -1)
    return FiniteFactor("U", dim)


@dataclass(frozen=True)
class ParahoricSpec:
    """A vertex of the chain, labelled by the split (n1, n2) of the Witt index."""

    group: GroupSpec
    n1: int
    n2: int

    def __post_init__(self) -> None:
        if self.n1 < 0 or self.n2 < 0 or self.n1 + self.n2 != self.group.witt:
            raise ValueError("(n1, n2) must be a nonnegative split of the Witt index")

    @property
    def factors(self) -> tuple[FiniteFactor, FiniteFactor]:
        k1, k2 = self.group.slot_kinds
        a1, a2 = self.group.aniso
        return (_slot_factor(k1, self.n1, a1), _slot_factor(k2, self.n2, a2))

    @property
    def maximal(self) -> bool:
        """False exactly when a slot degenerates to the split SO(2) torus."""
        return not any(f.kind == "SOeven" and f.dim == 2 and f.sign == 1
                       for f in self.factors)

    def __str__(self) -> str:
        g = self.group
        name = str(g).split("[")[0]
        return f"{name}/F{g.field.q}:({self.n1},{self.n2})"


def enumerate_parahorics(group: GroupSpec) -> tuple[ParahoricSpec, ...]:
    """The N + 1 chain vertices, listed with n1 descending."""
    N = group.witt
    return tuple(ParahoricSpec(group, n1, N - n1) for n1 in range(N, -1, -1))


def component_group_order(parahoric: ParahoricSpec) -> int:
    """Order (1 or 2) of the stabilizer modulo the parahoric.

    The order is 2 exactly when a ramified unitary group has a nonzero
    orthogonal slot, or an orthogonal group has both slots nonzero.
    """
    group = parahoric.group
    f1, f2 = parahoric.factors
    if group.family == "Uram":
        orth = f1 if group.epsilon == 1 else f2
        return 2 if orth.dim > 0 else 1
    if group.family in ("SOodd", "SOeven"):
        return 2 if f1.dim > 0 and f2.dim > 0 else 1
    return 1
