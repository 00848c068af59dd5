"""Arithmetic of self-dual polynomial classes over small finite fields.

Semisimple classes in a finite classical group are encoded by monic
polynomials fixed by a duality on GF(q)[x].  Two dualities occur here:

* trivial involution: P~ is the monic reciprocal of P, whose roots are
  the inverses of the roots of P;
* quadratic involution: the coefficients of the reciprocal are also
  conjugated by the order-two automorphism of GF(q) over its index-two
  subfield, so the roots of P~ are the inverse conjugates of those of P.

The monic irreducibles with P~ = P and P(0) != 0 are the self-dual
classes.  Under the trivial involution they are x - 1, x + 1, and certain
polynomials of even degree 2m whose roots lie in the kernel of the norm
of GF(q^(2m)) over GF(q^m).  Under the quadratic involution every
self-dual class has odd degree, with roots in the norm-one torus of the
relevant quadratic extension.

Field elements are encoded as integers 0 <= a < q via base-p digits in
the power basis of a fixed defining polynomial, so 0 and 1 are the two
identities and the integers 0 .. p-1 form the prime subfield.  The
defining polynomial is the lexicographically smallest monic irreducible
of degree e over GF(p), ordering coefficient tuples from the constant
term up, such that x generates the unit group.

>>> F3 = FieldSpec(3)
>>> [c.label for c in enumerate_self_dual_classes(F3, 1)]
['x-1', 'x+1']
>>> [c.label for c in enumerate_self_dual_classes(F3, 2)]
['x^2+1']
>>> count_self_dual_classes(F3, 4)
2
>>> F9 = FieldSpec(3, 2, "quadratic")
>>> count_self_dual_classes(F9, 3)
8
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "FieldSpec",
    "FieldTable",
    "Poly",
    "SelfDualClass",
    "field_table",
    "poly_gcd",
    "is_irreducible",
    "sigma_dual",
    "enumerate_self_dual_classes",
    "count_self_dual_classes",
    "class_x_minus_one",
    "class_x_plus_one",
]

# Everything downstream is exact combinatorics over residue fields of
# size at most a few dozen, so the tables stay tiny.
_MAX_Q = 32
_MAX_ENUM_DEGREE = 8


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _mobius(n: int) -> int:
    value = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            value = -value
        d += 1
    if n > 1:
        value = -value
    return value


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """A small finite field GF(p^e) with a marked involution.

    ext is "trivial" for the identity involution and "quadratic" for the
    order-two automorphism over the subfield of size p^(e/2).
    """

    p: int
    e: int = 1
    ext: str = "trivial"

    def __post_init__(self) -> None:
        if not _is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")
        if self.e < 1:
            raise ValueError("e must be positive")
        if self.p ** self.e > _MAX_Q:
            raise ValueError(f"field size {self.p ** self.e} exceeds {_MAX_Q}")
        if self.ext not in ("trivial", "quadratic"):
            raise ValueError("ext must be 'trivial' or 'quadratic'")
        if self.ext == "quadratic" and self.e % 2 != 0:
            raise ValueError("a quadratic involution needs even e")

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def q0(self) -> int:
        """Size of the fixed field of the involution."""
        if self.ext == "quadratic":
            return self.p ** (self.e // 2)
        return self.q


def _poly_mul_mod(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Schoolbook product of digit vectors, reduced by x^e = -modulus."""
    e = len(modulus)
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i, mi in enumerate(modulus):
                prod[k - e + i] = (prod[k - e + i] - c * mi) % p
    prod = prod[:e]
    return prod + [0] * (e - len(prod))


def _quotient_pow(base: list[int], n: int, modulus: tuple[int, ...], p: int) -> list[int]:
    e = len(modulus)
    result = [1] + [0] * (e - 1)
    acc = list(base)
    while n:
        if n & 1:
            result = _poly_mul_mod(result, acc, modulus, p)
        acc = _poly_mul_mod(acc, acc, modulus, p)
        n >>= 1
    return result


def _defining_polynomial(p: int, e: int) -> tuple[int, ...]:
    """Lower coefficients (c0 .. c_{e-1}) of the chosen modulus for GF(p^e)."""
    if e > 3:
        raise ValueError("fields beyond degree 3 over the prime field are not needed")
    one = [1] + [0] * (e - 1)
    q = p ** e
    factors = _prime_divisors(q - 1)
    for cand in itertools.product(range(p), repeat=e):
        if cand[0] == 0:
            continue
        # Degree <= 3, so irreducibility is just the absence of roots.
        if any((pow(a, e, p) + sum(c * pow(a, i, p) for i, c in enumerate(cand))) % p == 0
               for a in range(p)):
            continue
        x = [0, 1] + [0] * (e - 2) if e >= 2 else [1]
        if _quotient_pow(x, q - 1, cand, p) != one:
            continue
        if all(_quotient_pow(x, (q - 1) // r, cand, p) != one for r in factors):
            return cand
    raise ValueError(f"no primitive modulus found for GF({p}^{e})")


class FieldTable:
    """Precomputed arithmetic for one FieldSpec.

    Elements are the integers 0 <= a < q; the base-p digits of a are the
    coordinates in the power basis of the defining polynomial.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.q = spec.q
        p, e, q = spec.p, spec.e, spec.q
        self.modulus = _defining_polynomial(p, e) if e > 1 else None

        def digits(a: int) -> list[int]:
            return [(a // p ** i) % p for i in range(e)]

        def undigits(ds: list[int]) -> int:
            return sum(d * p ** i for i, d in enumerate(ds))

        self._add = [[undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])
                      for b in range(q)] for a in range(q)]
        if e == 1:
            self._mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            self._mul = [[undigits(_poly_mul_mod(digits(a), digits(b), self.modulus, p))
                          for b in range(q)] for a in range(q)]
        self._neg = [self._add[a].index(0) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)
        self._frob = [self.pow(a, p) for a in range(q)]
        if spec.ext == "quadratic":
            self._sigma = [self.pow(a, spec.q0) for a in range(q)]
        else:
            self._sigma = list(range(q))

    @property
    def minus_one(self) -> int:
        return self._neg[1]

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        result = 1
        acc = a
        while n:
            if n & 1:
                result = self._mul[result][acc]
            acc = self._mul[acc][acc]
            n >>= 1
        return result

    def frob(self, a: int) -> int:
        return self._frob[a]

    def sigma(self, a: int) -> int:
        return self._sigma[a]

    def norm_one_elements(self) -> tuple[int, ...]:
        """Elements with a * sigma(a) = 1."""
        return tuple(a for a in range(1, self.q) if self._mul[a][self._sigma[a]] == 1)


@lru_cache(maxsize=None)
def field_table(spec: FieldSpec) -> FieldTable:
    return FieldTable(spec)


@dataclass(frozen=True)
class Poly:
    """A polynomial over GF(q); coeffs run from the constant term upward."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        q = self.field.q
        if any(not (0 <= c < q) for c in self.coeffs):
            raise ValueError("coefficient out of range for the field")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @staticmethod
    def make(field: FieldSpec, coeffs) -> "Poly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(field, tuple(cs))

    @staticmethod
    def zero(field: FieldSpec) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: FieldSpec) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def x(field: FieldSpec) -> "Poly":
        return Poly(field, (0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "Poly") -> "Poly":
        F = field_table(self.field)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly.make(self.field, out)

    def __neg__(self) -> "Poly":
        F = field_table(self.field)
        return Poly(self.field, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        F = field_table(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly.make(self.field, out)

    def pdivmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = field_table(self.field)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(self.field), self
        quo = [0] * (dq + 1)
        lead_inv = F.inv(other.coeffs[-1])
        for k in range(dq, -1, -1):
            c = F.mul(rem[k + len(other.coeffs) - 1], lead_inv)
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] = F.sub(rem[k + i], F.mul(c, b))
        return Poly.make(self.field, quo), Poly.make(self.field, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return self.pdivmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("the zero polynomial has no monic normalization")
        if self.is_monic:
            return self
        F = field_table(self.field)
        scale = F.inv(self.coeffs[-1])
        return Poly(self.field, tuple(F.mul(scale, c) for c in self.coeffs))

    def evaluate(self, a: int) -> int:
        F = field_table(self.field)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def pow_mod(self, n: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.field) % modulus
        acc = self % modulus
        while n:
            if n & 1:
                result = (result * acc) % modulus
            acc = (acc * acc) % modulus
            n >>= 1
        return result

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                power = "x" if i == 1 else f"x^{i}"
                terms.append(head + power)
        return "+".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def is_irreducible(poly: Poly) -> bool:
    """Rabin's criterion: x^(q^n) = x mod P, with no fixed points below."""
    n = poly.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    poly = poly.monic()
    q = poly.field.q
    x = Poly.x(poly.field)
    frob = {}
    h = x % poly
    for k in range(1, n + 1):
        h = h.pow_mod(q, poly)
        frob[k] = h
    if frob[n] != x % poly:
        return False
    for r in _prime_divisors(n):
        if poly_gcd(frob[n // r] - x, poly).degree != 0:
            return False
    return True


def sigma_dual(poly: Poly) -> Poly:
    """The monic polynomial whose roots are the inverse (conjugate) roots.

    Writing P = sum c_i x^i of degree n, the dual has coefficients
    sigma(c_{n-i}) / sigma(c_0).  It is an involution on monic
    polynomials with nonzero constant term.
    """
    cs = poly.coeffs
    if not cs or cs[0] == 0:
        raise ValueError("the dual needs a nonzero constant term")
    if cs[-1] != 1:
        raise ValueError("the dual is defined for monic polynomials")
    F = field_table(poly.field)
    scale = F.inv(F.sigma(cs[0]))
    n = len(cs) - 1
    return Poly(poly.field, tuple(F.mul(F.sigma(cs[n - i]), scale) for i in range(n + 1)))


@dataclass(frozen=True)
class SelfDualClass:
    """A monic irreducible polynomial equal to its own sigma-dual."""

    poly: Poly

    def __post_init__(self) -> None:
        p = self.poly
        if p.degree < 1 or not p.is_monic or p.coeffs[0] == 0:
            raise ValueError("a self-dual class is monic, nonconstant, and prime to x")
        if sigma_dual(p) != p:
            raise ValueError(f"{p} is not self-dual")
        if not is_irreducible(p):
            raise ValueError(f"{p} is not irreducible")

    @property
    def field(self) -> FieldSpec:
        return self.poly.field

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def is_linear(self) -> bool:
        return self.degree == 1

    @property
    def is_x_minus_one(self) -> bool:
        return self.degree == 1 and self.poly.coeffs[0] == field_table(self.field).minus_one

    @property
    def is_x_plus_one(self) -> bool:
        return self.degree == 1 and self.poly.coeffs[0] == 1

    @property
    def label(self) -> str:
        if self.is_x_minus_one:
            return "x-1"
        return str(self.poly)

    @property
    def sort_key(self) -> tuple:
        # x - 1 and x + 1 first; they play a distinguished role everywhere.
        if self.is_x_minus_one:
            rank = 0
        elif self.is_x_plus_one:
            rank = 1
        else:
            rank = 2
        return (self.degree, rank, self.poly.coeffs)

    def __str__(self) -> str:
        return self.label


@lru_cache(maxsize=None)
def class_x_minus_one(field: FieldSpec) -> SelfDualClass:
    return SelfDualClass(Poly(field, (field_table(field).minus_one, 1)))


@lru_cache(maxsize=None)
def class_x_plus_one(field: FieldSpec) -> SelfDualClass:
    return SelfDualClass(Poly(field, (1, 1)))


@lru_cache(maxsize=None)
def enumerate_self_dual_classes(field: FieldSpec, degree: int) -> tuple[SelfDualClass, ...]:
    """All self-dual classes of the given degree, in a fixed canonical order.

    The construction solves the functional equation for the coefficients
    and filters by irreducibility, so it touches q^(degree/2) candidates
    rather than q^degree.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    if degree > _MAX_ENUM_DEGREE:
        raise ValueError(f"enumeration is limited to degree {_MAX_ENUM_DEGREE}")
    F = field_table(field)
    q = field.q
    found = []
    if field.ext == "trivial":
        if degree == 1:
            found = [class_x_minus_one(field), class_x_plus_one(field)]
        elif degree % 2 == 0:
            # Self-dual with even degree forces a palindrome with P(0) = 1:
            # an anti-palindrome vanishes at 1 and cannot be irreducible.
            m = degree // 2
            for free in itertools.product(range(q), repeat=m):
                coeffs = (1,) + free + tuple(free[m - 1 - i] for i in range(1, m)) + (1,)
                cand = Poly(field, coeffs)
                if is_irreducible(cand):
                    found.append(SelfDualClass(cand))
    else:
        if degree % 2 == 1:
            # Coefficients below the middle are determined by those above;
            # the constant term runs over the norm-one torus.
            k = degree // 2
            for c0 in F.norm_one_elements():
                scale = F.inv(F.sigma(c0))
                for upper in itertools.product(range(q), repeat=k):
                    cs = [0] * (degree + 1)
                    cs[degree] = 1
                    cs[0] = c0
                    for i in range(1, k + 1):
                        cs[degree - i] = upper[i - 1]
                    for i in range(1, k + 1):
                        cs[i] = F.mul(F.sigma(cs[degree - i]), scale)
                    cand = Poly(field, tuple(cs))
                    if is_irreducible(cand):
                        found.append(SelfDualClass(cand))
    return tuple(sorted(found, key=lambda c: c.sort_key))


def count_self_dual_classes(field: FieldSpec, degree: int) -> int:
    """Census of self-dual classes by torus counting, without enumeration.

    Roots of a self-dual class of degree 2m (trivial involution, m >= 1)
    or degree d (quadratic involution, d odd) are the elements of exact
    degree in the norm-one torus of order q^m + 1, resp. q0^d + 1, so the
    census is Moebius inversion over the subtori.  The elements 1 and -1
    never carry an even-degree class; they sit in the smallest subtorus
    except when m is a power of two, where they are removed by hand.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    if field.ext == "trivial":
        if degree == 1:
            return 2
        if degree % 2 == 1:
            return 0
        m = degree // 2
        q = field.q
        total = sum(_mobius(m // d) * (q ** d + 1)
                    for d in _divisors(m) if (m // d) % 2 == 1)
        if m & (m - 1) == 0:
            total -= 2
        return total // degree
    if degree % 2 == 0:
        return 0
    q0 = field.q0
    total = sum(_mobius(degree // d) * (q0 ** d + 1) for d in _divisors(degree))
    return total // degree
