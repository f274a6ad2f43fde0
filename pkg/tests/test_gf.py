import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strangeci.errors import FieldMismatchError, InvalidInputError
from strangeci.gf import FieldElement, embed, make_field


def naive_polymul_mod(a, b, mod, p):
    """Independent schoolbook multiplication oracle on coefficient tuples."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic modulus
    deg = len(mod) - 1
    while len(prod) > deg:
        lead = prod.pop()
        if lead:
            for k in range(deg):
                prod[-deg + k] = (prod[-deg + k] - lead * mod[k]) % p
    return tuple(prod + [0] * (deg - len(prod)))


class TestConstruction:
    def test_prime_field(self):
        F = make_field(2, 1)
        assert F.p == 2 and F.m == 1 and F.order == 2

    def test_gf4_modulus_is_unique_irreducible(self):
        assert make_field(2, 2).modulus == (1, 1, 1)

    def test_gf9_modulus_matches_exhaustive_scan(self):
        # oracle: scan all 9 monic quadratics over GF(3) for irreducibility
        # (no roots in GF(3) suffices in degree 2)
        candidates = []
        for c0 in range(3):
            for c1 in range(3):
                if all((x * x + c1 * x + c0) % 3 != 0 for x in range(3)):
                    candidates.append((c0, c1))
        least = min(candidates)
        assert make_field(3, 2).modulus == (*least, 1)

    def test_non_prime_rejected(self):
        with pytest.raises(InvalidInputError):
            make_field(4, 1)

    def test_bad_extension_degree_rejected(self):
        with pytest.raises(InvalidInputError):
            make_field(2, 0)

    def test_deterministic(self):
        assert make_field(5, 3).modulus == make_field(5, 3).modulus


class TestArithmetic:
    def test_gf5_inverse(self):
        F = make_field(5)
        assert F.element(2).inverse().val == 3

    def test_gf4_against_multiplication_table_oracle(self):
        F = make_field(2, 2)
        # oracle: schoolbook polynomial multiplication mod t^2+t+1
        for a in range(4):
            for b in range(4):
                expect = naive_polymul_mod(F.coeffs(a), F.coeffs(b), F.modulus, 2)
                assert F.coeffs(F.mul(a, b)) == expect
        t = F.element(2)
        assert (t * F.element(3)).val == 1

    @pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 3), (3, 2), (5, 2), (2, 8)])
    def test_inverse_exhaustive(self, p, m):
        F = make_field(p, m)
        for a in range(1, F.order):
            assert F.mul(a, F.inv(a)) == 1

    @pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (5, 1), (2, 8)])
    def test_frobenius_additive_multiplicative(self, p, m):
        F = make_field(p, m)
        for a in range(F.order):
            for b in range(F.order):
                assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
                assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))

    def test_frobenius_fixes_prime_subfield(self):
        F = make_field(5, 2)
        for a in range(5):
            assert F.frobenius(a) == a

    def test_division_by_zero(self):
        F = make_field(3)
        with pytest.raises(ZeroDivisionError):
            F.inv(0)
        with pytest.raises(ZeroDivisionError):
            F.element(1) / F.element(0)

    def test_mixed_fields_rejected(self):
        a = make_field(2).element(1)
        b = make_field(3).element(1)
        with pytest.raises(FieldMismatchError):
            a + b

    @given(a=st.integers(0, 26), b=st.integers(0, 26), c=st.integers(0, 26))
    def test_gf27_ring_axioms(self, a, b, c):
        F = make_field(3, 3)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.add(a, F.neg(a)) == 0

    def test_pow_matches_repeated_multiplication(self):
        F = make_field(3, 2)
        for a in range(F.order):
            acc = 1
            for e in range(6):
                assert F.pow(a, e) == acc
                acc = F.mul(acc, a)


class TestEmbedding:
    def test_prime_into_extension_is_constant(self):
        F2, F4 = make_field(2), make_field(2, 2)
        assert embed(F2.element(1), F4).val == 1

    def test_homomorphism_random_pairs(self):
        import random

        rng = random.Random(7)
        F4, F16 = make_field(2, 2), make_field(2, 4)
        for _ in range(100):
            x = F4.element(rng.randrange(4))
            y = F4.element(rng.randrange(4))
            assert embed(x + y, F16) == embed(x, F16) + embed(y, F16)
            assert embed(x * y, F16) == embed(x, F16) * embed(y, F16)

    def test_generator_image_satisfies_source_modulus(self):
        F4, F16 = make_field(2, 2), make_field(2, 4)
        t = embed(F4.element(2), F16)
        # image is a root of t^2 + t + 1, found by exhaustive scan
        roots = [v for v in range(16) if F16.add(F16.add(F16.mul(v, v), v), 1) == 0]
        assert t.val == min(roots)
        assert t * t + t + F16.one == F16.zero

    def test_non_divisible_degrees_rejected(self):
        with pytest.raises(InvalidInputError):
            embed(make_field(2, 2).element(2), make_field(2, 3))

    def test_consistent_across_calls(self):
        F4, F16 = make_field(2, 2), make_field(2, 4)
        assert embed(F4.element(3), F16) == embed(F4.element(3), F16)


class TestTextForm:
    @pytest.mark.parametrize("p,m", [(2, 1), (5, 1), (2, 3), (3, 2)])
    def test_format_parse_roundtrip(self, p, m):
        F = make_field(p, m)
        for v in range(F.order):
            assert F.parse(F.format(v)) == v

    def test_extension_syntax(self):
        F8 = make_field(2, 3)
        assert F8.parse("t^2+t+1") == 7
        assert F8.format(3) == "t + 1"
