import random

import numpy as np
import pytest

from apnle import gf2, vbf
from apnle.gf2 import apply, block_diag, companion, identity, mat_to_lut, parse_poly
from apnle.vbf import (
    algebraic_degree, apn_witness, butterfly, butterfly_automorphism, ddt,
    dillon_fixture, field, fingerprint, graph_points, is_apn, is_permutation,
    lut_from_hex, lut_to_hex, monomial_lut, multinomial_automorphism,
    multinomial_lut, quadratic_shift_automorphism, verify_le_automorphism,
    walsh_matrix,
)


def _naive_is_apn(f):
    n = vbf.lut_dim(f)
    for a in range(1, 1 << n):
        for b in range(1 << n):
            c = 0
            for x in range(1 << n):
                if f[x] ^ f[x ^ a] == b:
                    c += 1
            if c > 2:
                return False
    return True


def _random_affine_compose(f, rng):
    n = vbf.lut_dim(f)
    la = mat_to_lut(gf2.random_invertible(n, rng))
    lb = mat_to_lut(gf2.random_invertible(n, rng))
    ca, cb = rng.randrange(1 << n), rng.randrange(1 << n)
    return [lb[f[la[x] ^ ca]] ^ cb for x in range(len(f))]


# ---------------------------------------------------------------------------
# DDT / APN
# ---------------------------------------------------------------------------

def test_ddt_identity():
    f = list(range(8))
    t = ddt(f)
    for a in range(8):
        assert t[a][a] == 8
        assert t[a].sum() == 8


def test_ddt_row_sums_and_evenness():
    rng = random.Random(0)
    for n in (3, 4, 5):
        f = [rng.randrange(1 << n) for _ in range(1 << n)]
        t = ddt(f)
        assert (t.sum(axis=1) == 1 << n).all()
        assert (t % 2 == 0).all()
        assert t[0][0] == 1 << n and t[0][1:].sum() == 0


def test_gold_cube_is_apn():
    t = ddt(monomial_lut(field(3), 3))
    assert set(np.unique(t[1:])) <= {0, 2}
    assert is_apn(monomial_lut(field(5), 3))


def test_identity_not_apn():
    for n in (2, 3, 4):
        f = list(range(1 << n))
        assert not is_apn(f)
        a, b, c = apn_witness(f)
        assert a != 0 and b == a and c == (1 << n)


def test_is_apn_matches_naive_oracle():
    rng = random.Random(1)
    for n in (3, 4, 5, 6):
        for _ in range(100):
            f = [rng.randrange(1 << n) for _ in range(1 << n)]
            assert is_apn(f) == _naive_is_apn(f)


def test_algebraic_degree():
    k = field(5)
    assert algebraic_degree(monomial_lut(k, 1)) == 1
    assert algebraic_degree(monomial_lut(k, 3)) == 2   # Gold: x^(2+1)
    assert algebraic_degree(monomial_lut(k, 7)) == 3
    assert algebraic_degree([0] * 32) == 0


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------

def test_field_axioms():
    k = field(6)
    rng = random.Random(2)
    for _ in range(200):
        a, b, c = (rng.randrange(64) for _ in range(3))
        assert k.mul(a, b) == k.mul(b, a)
        assert k.mul(a, k.mul(b, c)) == k.mul(k.mul(a, b), c)
        assert k.mul(a, 1) == a
        assert k.mul(a, b ^ c) == k.mul(a, b) ^ k.mul(a, c)
    for a in range(1, 64):
        assert k.mul(a, k.inv(a)) == 1


def test_field_pinned_moduli():
    assert field(3).modulus == parse_poly("X^3+X+1")
    assert field(6).modulus == parse_poly("X^6+X^4+X^3+X+1")
    assert field(7).modulus == parse_poly("X^7+X+1")
    assert field(8).modulus == parse_poly("X^8+X^4+X^3+X+1")
    # fallback dimensions get the least irreducible mask
    assert field(4).modulus == parse_poly("X^4+X+1")
    assert field(5).modulus == parse_poly("X^5+X^2+1")


def test_field_generator_order():
    for n in (3, 5, 8, 10):
        k = field(n)
        assert k.element_order(k.generator) == k.size - 1


def test_mult_matrix_is_multiplication():
    k = field(7)
    rng = random.Random(3)
    for _ in range(20):
        c = rng.randrange(1, 128)
        m = k.mult_matrix(c)
        for _ in range(20):
            x = rng.randrange(128)
            assert apply(m, x) == k.mul(c, x)


def test_monomial_lut_permutation_iff_gcd():
    k = field(6)
    assert monomial_lut(k, 1) == list(range(64))
    f3 = monomial_lut(k, 3)
    assert is_apn(f3) and not is_permutation(f3)  # gcd(3, 63) = 3


def test_n7_monomials_apn_permutations():
    k = field(7)
    for d in (5, 9, 63, 78, 85, 88):
        f = monomial_lut(k, d)
        assert is_permutation(f) and is_apn(f)


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def test_dillon_fixture():
    f = dillon_fixture()
    assert is_apn(f)
    assert not is_permutation(f)
    assert algebraic_degree(f) == 2


def test_butterfly_is_permutation():
    k = field(3)
    for alpha in range(8):
        for beta in range(1, 8):
            assert is_permutation(butterfly(alpha, beta))
    with pytest.raises(ValueError):
        butterfly(1, 0)


def test_butterfly_apn_cases():
    k = field(3)
    for alpha in range(1, 8):
        if k.trace(alpha) == 0:
            assert is_apn(butterfly(alpha, 1))


def test_butterfly_diagonal_automorphism():
    k = field(3)
    for zeta in range(1, 8):
        a = butterfly_automorphism(zeta)
        for alpha in range(8):
            for beta in (1, 3, 7):
                h = butterfly(alpha, beta)
                assert verify_le_automorphism(h, a, a)


def test_verify_le_automorphism_basics():
    f = monomial_lut(field(4), 7)
    assert verify_le_automorphism(f, identity(4), identity(4))
    with pytest.raises(ValueError):
        verify_le_automorphism(f, identity(5), identity(5))


def test_monomial_multiplication_automorphism():
    k = field(7)
    rng = random.Random(4)
    for d in (5, 9, 63):
        f = monomial_lut(k, d)
        alpha = rng.randrange(2, 128)
        a = k.mult_matrix(alpha)
        b = k.mult_matrix(k.pow(alpha, d))
        assert verify_le_automorphism(f, a, b)


def test_shift_invariant_automorphism():
    # polynomials with binary coefficients, written in a normal basis,
    # commute with the full cyclic shift on both sides
    for n, exps in ((5, [3]), (5, [3, 5]), (7, [5]), (6, [3, 5, 9])):
        shift = companion(parse_poly(f"X^{n}+1"))
        f = vbf.shift_invariant_lut(field(n), exps)
        assert verify_le_automorphism(f, shift, shift)


def test_multinomial_automorphism_binomial_order33():
    k = field(10)
    pair = multinomial_automorphism(k, [3, 36])
    assert pair is not None
    a, b = pair
    assert gf2.order(a) == 33
    rng = random.Random(5)
    for _ in range(3):
        w = rng.randrange(1, 1 << 10)
        f = multinomial_lut(k, [(1, 3), (w, 36)])
        assert verify_le_automorphism(f, a, b)


def test_multinomial_automorphism_monomial_case():
    k = field(6)
    pair = multinomial_automorphism(k, [3])
    assert pair is not None
    a, b = pair
    assert gf2.order(a) == 63  # any alpha != 1 works; g = 2^n - 1
    assert verify_le_automorphism(monomial_lut(k, 3), a, b)


def test_multinomial_automorphism_trivial_gcd():
    k = field(4)
    assert multinomial_automorphism(k, [1, 2]) is None  # gcd(1, 15) = 1


# ---------------------------------------------------------------------------
# quadratic graph automorphisms
# ---------------------------------------------------------------------------

def test_quadratic_shift_automorphism_preserves_graph():
    f = dillon_fixture()
    pts = set(graph_points(f))
    seen = set()
    for alpha in range(1, 64):
        sigma = quadratic_shift_automorphism(f, alpha)
        assert all(sigma(p) in pts for p in pts)
        seen.add(tuple(sigma(p) for p in sorted(pts)))
    assert len(seen) == 63  # distinct non-identity automorphisms


def test_quadratic_shift_automorphism_rejects_cubic():
    f = monomial_lut(field(5), 7)
    assert algebraic_degree(f) == 3
    with pytest.raises(ValueError):
        quadratic_shift_automorphism(f, 1)


def test_quadratic_shift_automorphism_linear_function():
    f = [apply(companion(parse_poly("X^4+X+1")), x) for x in range(16)]
    for alpha in range(1, 16):
        sigma = quadratic_shift_automorphism(f, alpha)
        pts = set(graph_points(f))
        assert all(sigma(p) in pts for p in pts)


# ---------------------------------------------------------------------------
# fingerprints
# ---------------------------------------------------------------------------

def test_walsh_matrix_parseval():
    rng = random.Random(6)
    for n in (3, 5):
        f = [rng.randrange(1 << n) for _ in range(1 << n)]
        w = walsh_matrix(f)
        assert (np.sum(w * w, axis=1) == 1 << (2 * n)).all()
        assert w[0][0] == 1 << n


def test_fingerprint_equal_for_inverse():
    k = field(5)
    f = monomial_lut(k, 5)
    finv = [0] * 32
    for x in range(32):
        finv[f[x]] = x
    assert fingerprint(f) == fingerprint(finv)


def test_fingerprint_affine_invariance():
    rng = random.Random(7)
    f = dillon_fixture()
    base = fingerprint(f)
    for _ in range(100):
        assert fingerprint(_random_affine_compose(f, rng)) == base


def test_fingerprint_separates_n7_gold_pair():
    k = field(7)
    assert fingerprint(monomial_lut(k, 5)) != fingerprint(monomial_lut(k, 9))


def test_fingerprint_partitions_n7_monomials_into_six():
    k = field(7)
    digests = {}
    for d in (5, 9, 63, 78, 85, 88):
        digests.setdefault(fingerprint(monomial_lut(k, d)).digest(), []).append(d)
    assert len(digests) == 6


def test_fingerprint_equates_ccz_equal_monomials():
    # inverse pairs modulo 2^7 - 1 land in the same CCZ class
    k = field(7)
    for d, e in ((3, 85), (13, 88), (57, 78)):
        assert (d * e) % 127 == 1
        assert fingerprint(monomial_lut(k, d)) == fingerprint(monomial_lut(k, e))


def test_fingerprint_dillon_matches_butterfly():
    k = field(3)
    alpha = next(a for a in range(1, 8) if k.trace(a) == 0)
    assert fingerprint(dillon_fixture()) == fingerprint(butterfly(alpha, 1))


def test_fingerprint_json_roundtrip_stability():
    fp = fingerprint(monomial_lut(field(5), 3))
    assert fp.digest() == fingerprint(monomial_lut(field(5), 3)).digest()
    d = fp.to_json_dict()
    assert d["schema"] == "apnle/fingerprint-v1"
    assert d["n"] == 5


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_lut_hex_roundtrip():
    rng = random.Random(8)
    for n in (3, 7, 9):
        f = [rng.randrange(1 << n) for _ in range(1 << n)]
        assert lut_from_hex(lut_to_hex(f)) == f


def test_lut_from_hex_rejects_bad_input():
    with pytest.raises(ValueError):
        lut_from_hex("0 1 2")      # not a power of two
    with pytest.raises(ValueError):
        lut_from_hex("0 1 2 9")    # out of range for n=2
