import pytest
import sys
import os

# Add the parent directory to sys.path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import itertools

import numpy as np

from qec_erasure.classical_bch import (
    BinaryPolynomial, DecodeOutcome, FiniteField, bch_code, bch_defining_set, berlekamp_massey,
    check_lemma7, consecutive_run, cyclic_code, cyclotomic_coset, cyclotomic_cosets,
    decode_erasures_only, decode_errors_and_erasures, dual_code, dual_defining_set,
    encode_classical, extension_field, extract_message, generator_polynomial, is_dual_pair,
    lemma7_violation, min_distance_bruteforce, nearest_codeword_bruteforce
)
from qec_erasure.settings import reset_settings

BCH_15_7 = {1, 2, 3, 4, 6, 8, 9, 12}


@pytest.fixture
def hamming():
    """The [7,4,3] BCH code"""
    return bch_code(7, 1, 3)


@pytest.fixture
def bch_15_7():
    """The [15,7,5] BCH code"""
    return bch_code(15, 1, 5)


def _random_codeword(code, rng):
    return encode_classical(code, rng.integers(0, 2, size=code.K))


# Polynomials
def test_polynomial_parsing_and_printing():
    poly = BinaryPolynomial.parse("x^3+x+1")
    assert poly.mask == 0b1011
    assert poly.degree == 3
    assert str(poly) == "x^3+x+1"
    assert poly.to_bits() == "1101"
    assert BinaryPolynomial.from_bits("1101") == poly
    assert poly.to_bits(7) == "1101000"
    with pytest.raises(ValueError):
        BinaryPolynomial.parse("x^3+2x")


def test_polynomial_arithmetic():
    """Addition is XOR and (x+1)^2 = x^2+1 over GF(2)"""
    x_plus_one = BinaryPolynomial.parse("x+1")
    assert str(x_plus_one * x_plus_one) == "x^2+1"
    assert (x_plus_one + x_plus_one).is_zero()
    quotient, remainder = divmod(BinaryPolynomial.x_n_minus_one(7), BinaryPolynomial.parse("x^3+x+1"))
    assert remainder.is_zero()
    assert str(quotient) == "x^4+x^2+x+1"
    with pytest.raises(ZeroDivisionError):
        divmod(x_plus_one, BinaryPolynomial())


# Finite fields
@pytest.mark.parametrize("m", range(2, 9))
def test_field_sanity(m):
    """alpha has order 2^m - 1 and log inverts exp"""
    gf = FiniteField(m)
    powers = [gf.exp(i) for i in range(gf.group_order)]
    assert len(set(powers)) == gf.group_order
    assert gf.pow(gf.exp(1), gf.group_order) == 1
    for element in range(1, gf.order):
        assert gf.exp(gf.log(element)) == element
        assert gf.mul(element, gf.inv(element)) == 1


def test_field_rejects_non_primitive_polynomial():
    """x^4+x^3+x^2+x+1 is irreducible but its root has order 5"""
    with pytest.raises(ValueError, match="not primitive"):
        FiniteField(4, 0b11111)


def test_field_polynomial_override(monkeypatch):
    """QEC_PRIMITIVE_POLYNOMIALS replaces the default table entry"""
    monkeypatch.setenv("QEC_PRIMITIVE_POLYNOMIALS", "4:0b11001")
    reset_settings()
    gf = extension_field(4)
    assert gf.primitive_polynomial == 0b11001
    assert str(gf.polynomial) == "x^4+x^3+1"


def test_berlekamp_massey_finds_single_error_locator():
    """One error at alpha^3 gives syndromes alpha^(3j) and locator 1 + alpha^3 x"""
    gf = FiniteField(4)
    X = gf.exp(3)
    syndromes = [gf.pow(X, j) for j in range(1, 5)]
    locator, length = berlekamp_massey(gf, syndromes)
    assert length == 1
    assert locator == [1, X]


# Cyclotomic cosets and defining sets
def test_cyclotomic_cosets():
    assert cyclotomic_coset(1, 7) == {1, 2, 4}
    assert cyclotomic_coset(3, 15) == {3, 6, 9, 12}
    assert cyclotomic_coset(0, 15) == {0}
    assert len(cyclotomic_cosets(15)) == 5
    with pytest.raises(ValueError, match="odd"):
        cyclotomic_coset(1, 8)


def test_bch_defining_sets():
    assert bch_defining_set(7, 1, 3) == {1, 2, 4}
    assert bch_defining_set(15, 1, 5) == BCH_15_7
    assert bch_defining_set(15, 1, 2) == {1, 2, 4, 8}
    assert consecutive_run(BCH_15_7, 15) == (1, 5)


def test_generator_polynomials():
    gf7 = extension_field(3)
    assert str(generator_polynomial({1, 2, 4}, gf7, 7)) == "x^3+x+1"
    generator = generator_polynomial(BCH_15_7, extension_field(4), 15)
    assert generator.degree == 8
    assert str(generator) == "x^8+x^7+x^6+x^4+1"
    assert generator_polynomial(set(), gf7, 7) == BinaryPolynomial.one()
    with pytest.raises(ValueError, match="doubling"):
        generator_polynomial({1, 2}, gf7, 7)


def test_generator_roots_are_exactly_the_defining_set(bch_15_7):
    gf, alpha = bch_15_7.gf, bch_15_7.alpha
    for i in range(15):
        root = bch_15_7.generator.evaluate(gf, gf.pow(alpha, i)) == 0
        assert root == (i in bch_15_7.defining_set)


def test_dual_defining_sets():
    assert dual_defining_set({1, 2, 4}, 7) == {0, 1, 2, 4}
    assert dual_defining_set(set(range(7)), 7) == set()
    assert dual_defining_set({1, 2, 4, 8}, 15) == {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}
    for I, N in (({1, 2, 4}, 7), (BCH_15_7, 15), ({0, 5, 10}, 15)):
        assert dual_defining_set(dual_defining_set(I, N), N) == I


@pytest.mark.parametrize("N", [7, 15, 31])
def test_dual_code_is_the_null_space(N):
    """The dual built from its defining set is orthogonal with complementary dimension"""
    for d_bch in range(2, N + 1, 2):
        code = bch_code(N, 1, d_bch)
        assert is_dual_pair(code, dual_code(code))


def test_dual_containment_check():
    assert check_lemma7({1, 2, 4}, 7)
    assert not check_lemma7(BCH_15_7, 15)
    assert lemma7_violation(BCH_15_7, 15) == (3, 12)
    assert not check_lemma7({0}, 15)


def test_dual_containment_matches_defining_set_inclusion():
    """The code contains its dual exactly when its defining set is inside the dual's"""
    for N in (7, 15, 21):
        for d_bch in range(2, N + 1):
            I = bch_defining_set(N, 1, d_bch)
            assert check_lemma7(I, N) == (I <= dual_defining_set(I, N))


def test_admissible_duals_are_self_orthogonal(hamming):
    """When the check passes, the dual code is orthogonal to itself"""
    dual = dual_code(hamming)
    G = dual.generator_matrix.astype(int)
    assert not np.any((G @ G.T) % 2)


# Codes
def test_describe_hamming_code(hamming):
    assert hamming.describe() == {
        "N": 7, "b": 1, "d_bch": 3, "m": 3, "primitive_poly": "x^3+x+1",
        "defining_set": [1, 2, 4], "generator": "1101", "K": 4,
    }


def test_bch_parameters_are_validated():
    with pytest.raises(ValueError, match="odd"):
        bch_code(8, 1, 3)
    with pytest.raises(ValueError):
        bch_code(7, 1, 9)
    with pytest.raises(ValueError):
        bch_code(7, 1, 1)


def test_full_space_code():
    code = cyclic_code(7, [])
    assert code.K == 7
    assert code.generator == BinaryPolynomial.one()
    assert min_distance_bruteforce(code) == 1


# Encoding
def test_systematic_encoding(hamming):
    codeword = encode_classical(hamming, [1, 0, 0, 0])
    assert ''.join(map(str, codeword)) == "1101000"
    assert codeword.sum() == 3
    assert hamming.contains(codeword)
    assert not any(hamming.syndromes(codeword))
    assert not encode_classical(hamming, [0, 0, 0, 0]).any()
    assert list(extract_message(hamming, encode_classical(hamming, [0, 1, 1, 0]))) == [0, 1, 1, 0]
    with pytest.raises(ValueError):
        encode_classical(hamming, [1, 0])


# Decoding
def test_single_error_is_corrected(bch_15_7, rng):
    codeword = _random_codeword(bch_15_7, rng)
    received = codeword.copy()
    received[5] ^= 1
    outcome = decode_errors_and_erasures(bch_15_7, received)
    assert outcome.status == "Corrected"
    assert outcome.corrected
    assert outcome.error_positions == {5}
    assert outcome.codeword == tuple(codeword)


def test_errors_and_erasures_are_corrected(bch_15_7, rng):
    """Erasures at 2 and 9 plus an error at 5 stay inside nu + 2t < 5"""
    codeword = _random_codeword(bch_15_7, rng)
    received = codeword.copy()
    received[[2, 9]] = rng.integers(0, 2, size=2)
    received[5] ^= 1
    outcome = decode_errors_and_erasures(bch_15_7, received, [2, 9])
    assert outcome.status == "Corrected"
    assert outcome.codeword == tuple(codeword)
    assert set(outcome.erasure_values) == {2, 9}


def test_clean_codeword_is_unchanged(bch_15_7, rng):
    codeword = _random_codeword(bch_15_7, rng)
    outcome = decode_errors_and_erasures(bch_15_7, codeword)
    assert outcome.codeword == tuple(codeword)
    assert outcome.error_positions == frozenset()


def test_too_many_erasures_fail(bch_15_7, rng):
    codeword = _random_codeword(bch_15_7, rng)
    outcome = decode_errors_and_erasures(bch_15_7, codeword, [0, 1, 2, 3, 4])
    assert outcome.status == "Failure"
    assert not outcome.corrected


def test_decoder_rejects_malformed_input(bch_15_7):
    with pytest.raises(ValueError):
        decode_errors_and_erasures(bch_15_7, [0] * 14)
    with pytest.raises(ValueError):
        decode_errors_and_erasures(bch_15_7, [0] * 15, [15])


def test_decoder_is_complete_within_the_designed_distance(bch_15_7, rng):
    """Every pattern with nu + 2t < 5 decodes to the transmitted word and to the exhaustive answer"""
    for nu, t in [(nu, t) for nu in range(5) for t in range(3) if nu + 2 * t < 5]:
        for erasures in itertools.combinations(range(15), nu):
            rest = [p for p in range(15) if p not in erasures]
            for errors in itertools.combinations(rest, t):
                for trial in range(20):
                    codeword = _random_codeword(bch_15_7, rng)
                    received = codeword.copy()
                    received[list(erasures)] = rng.integers(0, 2, size=nu)
                    received[list(errors)] ^= 1
                    outcome = decode_errors_and_erasures(bch_15_7, received, erasures)
                    assert outcome.codeword == tuple(codeword), (erasures, errors)
                    if trial == 0:
                        nearest, distance, unique = nearest_codeword_bruteforce(bch_15_7, received, erasures)
                        assert unique and distance == t
                        assert outcome.codeword == tuple(nearest)


def test_erasures_only_decoder(hamming, rng):
    codeword = _random_codeword(hamming, rng)
    received = codeword.copy()
    received[[0, 3]] ^= 1
    outcome = decode_erasures_only(hamming, received, [0, 3])
    assert outcome.status == "Corrected"
    assert outcome.codeword == tuple(codeword)
    flipped = codeword.copy()
    flipped[2] ^= 1
    assert decode_erasures_only(hamming, flipped, []).status == "Failure"


def test_decode_outcome_to_dict(hamming):
    received = [1, 1, 1, 1, 0, 0, 0]
    outcome = decode_errors_and_erasures(hamming, received, [2])
    assert outcome.to_dict() == {
        "status": "Corrected",
        "codeword": "1101000",
        "error_positions": [],
        "erasure_values": {"2": 0},
    }
    assert isinstance(DecodeOutcome("Failure", (0,)).to_dict()["erasure_values"], dict)


# Distances
def test_min_distance(hamming, bch_15_7):
    assert min_distance_bruteforce(hamming) == 3
    assert min_distance_bruteforce(bch_15_7) == 5


@pytest.mark.parametrize("N", [7, 15, 31])
def test_bch_bound(N):
    """The true distance is at least the designed distance"""
    for d_bch in range(2, N + 1):
        code = bch_code(N, 1, d_bch)
        if code.K > 20:
            continue
        assert min_distance_bruteforce(code) >= d_bch
