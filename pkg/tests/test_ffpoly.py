"""Brute-force oracles for the self-dual class census and field arithmetic."""

import doctest
import itertools

import pytest

from cuspred import ffpoly
from cuspred.ffpoly import (
    FieldSpec,
    Poly,
    SelfDualClass,
    class_x_minus_one,
    class_x_plus_one,
    count_self_dual_classes,
    enumerate_self_dual_classes,
    field_table,
    is_irreducible,
    poly_gcd,
    sigma_dual,
)

F3 = FieldSpec(3)
F5 = FieldSpec(5)
F9T = FieldSpec(3, 2, "trivial")
F9Q = FieldSpec(3, 2, "quadratic")
F25Q = FieldSpec(5, 2, "quadratic")

# Census values frozen from the torus closed forms: degree 1 gives x -+ 1
# (trivial) or the norm-one torus (quadratic); degree 2m gives
# (elements of exact degree in the torus of order q^m + 1) / 2m.
FROZEN_COUNTS = {
    (F3, 1): 2, (F3, 2): 1, (F3, 3): 0, (F3, 4): 2,
    (F5, 1): 2, (F5, 2): 2, (F5, 3): 0, (F5, 4): 6,
    (F9T, 1): 2, (F9T, 2): 4, (F9T, 3): 0, (F9T, 4): 20,
    (F9Q, 1): 4, (F9Q, 2): 0, (F9Q, 3): 8, (F9Q, 4): 0,
    (F25Q, 1): 6, (F25Q, 2): 0, (F25Q, 3): 40, (F25Q, 4): 0,
}


def all_monic(field, degree):
    for lower in itertools.product(range(field.q), repeat=degree):
        yield Poly(field, lower + (1,))


def oracle_irreducible(poly):
    """Trial division by every monic polynomial of degree up to deg/2."""
    n = poly.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for divisor in all_monic(poly.field, d):
            if (poly % divisor).is_zero:
                return False
    return True


def oracle_self_dual(poly):
    """Direct check of the coefficient functional equation."""
    F = field_table(poly.field)
    cs = poly.coeffs
    if not cs or cs[0] == 0 or cs[-1] != 1:
        return False
    n = len(cs) - 1
    scale = F.inv(F.sigma(cs[0]))
    return all(cs[i] == F.mul(F.sigma(cs[n - i]), scale) for i in range(n + 1))


def brute_force_classes(field, degree):
    out = []
    for cand in all_monic(field, degree):
        if cand.coeffs[0] == 0:
            continue
        if oracle_self_dual(cand) and oracle_irreducible(cand):
            out.append(cand.coeffs)
    return sorted(out)


class TestFieldTable:
    def test_defining_polynomials(self):
        # Smallest primitive monic irreducible, coefficients from the
        # constant term up: x^2 + x + 2 for both GF(9) and GF(25).
        assert field_table(F9Q).modulus == (2, 1)
        assert field_table(F25Q).modulus == (2, 1)
        assert field_table(F3).modulus is None

    @pytest.mark.parametrize("spec", [F3, F9Q, F25Q])
    def test_field_axioms_exhaustive(self, spec):
        F = field_table(spec)
        q = spec.q
        for a in range(q):
            assert F.add(a, 0) == a
            assert F.mul(a, 1) == a
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
        for a in range(q):
            for b in range(q):
                assert F.add(a, b) == F.add(b, a)
                assert F.mul(a, b) == F.mul(b, a)
        for a in range(q):
            for b in range(q):
                for c in range(0, q, max(1, q // 7)):
                    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)

    def test_frobenius_and_sigma(self):
        F = field_table(F9Q)
        for a in range(9):
            assert F.frob(a) == F.pow(a, 3)
            assert F.sigma(F.sigma(a)) == a
            for b in range(9):
                assert F.sigma(F.mul(a, b)) == F.mul(F.sigma(a), F.sigma(b))
                assert F.sigma(F.add(a, b)) == F.add(F.sigma(a), F.sigma(b))
        # sigma fixes exactly the prime subfield here
        assert [a for a in range(9) if F.sigma(a) == a] == [0, 1, 2]

    def test_norm_one_torus_size(self):
        assert len(field_table(F9Q).norm_one_elements()) == 4
        assert len(field_table(F25Q).norm_one_elements()) == 6

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            FieldSpec(2)
        with pytest.raises(ValueError):
            FieldSpec(4)
        with pytest.raises(ValueError):
            FieldSpec(3, 4)  # 81 > 32
        with pytest.raises(ValueError):
            FieldSpec(3, 1, "quadratic")
        with pytest.raises(ValueError):
            FieldSpec(3, 1, "weird")


class TestPoly:
    def test_divmod_roundtrip(self):
        for lower in itertools.product(range(3), repeat=4):
            a = Poly.make(F3, lower)
            b = Poly(F3, (1, 2, 1))
            quo, rem = a.pdivmod(b)
            assert quo * b + rem == a
            assert rem.degree < b.degree

    def test_str_rendering(self):
        assert str(Poly(F3, (1, 0, 1))) == "x^2+1"
        assert str(Poly(F3, (2, 1))) == "x+2"
        assert str(Poly.zero(F3)) == "0"
        assert str(Poly(F3, (0, 2, 1))) == "x^2+2x"

    def test_normalization(self):
        assert Poly.make(F3, [1, 2, 0, 0]).coeffs == (1, 2)
        with pytest.raises(ValueError):
            Poly(F3, (1, 0))
        with pytest.raises(ValueError):
            Poly(F3, (3, 1))


class TestIrreducibility:
    @pytest.mark.parametrize("field,maxdeg", [(F3, 4), (F5, 3), (F9Q, 3)])
    def test_matches_trial_division(self, field, maxdeg):
        for degree in range(1, maxdeg + 1):
            for cand in all_monic(field, degree):
                assert is_irreducible(cand) == oracle_irreducible(cand), str(cand)

    def test_gcd_is_monic_divisor(self):
        a = Poly(F3, (1, 0, 1)) * Poly(F3, (2, 1))
        b = Poly(F3, (2, 1)) * Poly(F3, (1, 1))
        g = poly_gcd(a, b)
        assert g == Poly(F3, (2, 1))


class TestSigmaDual:
    @pytest.mark.parametrize("field", [F3, F9Q])
    def test_involution_on_monic(self, field):
        for degree in (1, 2, 3):
            for cand in all_monic(field, degree):
                if cand.coeffs[0] == 0:
                    continue
                assert sigma_dual(sigma_dual(cand)) == cand

    def test_trivial_dual_is_reciprocal(self):
        p = Poly(F3, (2, 1, 0, 1))  # x^3 + x + 2
        dual = sigma_dual(p)
        # roots of the dual are the inverse roots: constant 2^{-1} = 2
        assert dual.coeffs == (2, 0, 2, 1)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            sigma_dual(Poly(F3, (0, 1)))
        with pytest.raises(ValueError):
            sigma_dual(Poly(F3, (1, 2)))


class TestCensus:
    @pytest.mark.parametrize("field,degree", sorted(FROZEN_COUNTS, key=str))
    def test_frozen_counts(self, field, degree):
        assert count_self_dual_classes(field, degree) == FROZEN_COUNTS[(field, degree)]
        if degree <= 4:
            assert len(enumerate_self_dual_classes(field, degree)) == FROZEN_COUNTS[(field, degree)]

    @pytest.mark.parametrize("field,maxdeg", [(F3, 4), (F5, 4), (F9T, 4), (F9Q, 3)])
    def test_enumeration_matches_brute_force(self, field, maxdeg):
        for degree in range(1, maxdeg + 1):
            got = sorted(c.poly.coeffs for c in enumerate_self_dual_classes(field, degree))
            assert got == brute_force_classes(field, degree), (field, degree)

    def test_parity_laws(self):
        # trivial involution: no odd degree beyond 1; quadratic: odd only
        for d in (3, 5, 7):
            assert count_self_dual_classes(F5, d) == 0
        for d in (2, 4, 6, 8):
            assert count_self_dual_classes(F9Q, d) == 0

    def test_classes_are_validated(self):
        with pytest.raises(ValueError):
            SelfDualClass(Poly(F3, (1, 1, 1)))  # x^2+x+1 has root 1
        with pytest.raises(ValueError):
            SelfDualClass(Poly(F3, (2, 0, 1)))  # x^2+2 not self-dual

    def test_linear_helpers(self):
        assert class_x_minus_one(F3).label == "x-1"
        assert class_x_minus_one(F3).poly.coeffs == (2, 1)
        assert class_x_plus_one(F3).label == "x+1"
        a, b = enumerate_self_dual_classes(F3, 1)
        assert a.is_x_minus_one and b.is_x_plus_one
        quad_linear = enumerate_self_dual_classes(F9Q, 1)
        assert quad_linear[0].is_x_minus_one and quad_linear[1].is_x_plus_one
        assert len(quad_linear) == 4


def test_doctests():
    failures, _ = doctest.testmod(ffpoly)
    assert failures == 0
