import pytest
import sys
import os

# Add the parent directory to sys.path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np

from qec_erasure.classical_bch import bch_code, codebook, dual_code, enumerate_row_space
from qec_erasure.code_analysis import check_erasure_kl, hadamard_dual_code
from qec_erasure.qbch import (
    InadmissibleCodeError, SparseCodeState, admissibility_report, admissible_bch_codes, build_css,
    build_qbch, coset_representatives, densify, describe_qbch, qbch_parameters, qbch_states,
    steane_code, to_quantum_code
)
from qec_erasure.settings import reset_settings


@pytest.fixture
def hamming():
    return bch_code(7, 1, 3)


@pytest.fixture
def steane_css(hamming):
    """[[7,1,3]] as a CSS code"""
    return build_qbch(hamming)


def _bits(word):
    return ''.join(str(int(bit)) for bit in word)


# Construction
def test_hamming_code_gives_seven_qubit_code(steane_css):
    assert steane_css.parameters == (7, 1, 3)
    assert str(steane_css) == "[[7,1,3]]"
    assert steane_css.distance_source == 'true'


def test_length_fifteen_designed_distance_two():
    """The [15,11,3] code contains its dual and gives [[15,7,3]]"""
    assert qbch_parameters(bch_code(15, 1, 2)) == (15, 7, 3)


def test_inadmissible_code_names_the_offending_cosets():
    with pytest.raises(InadmissibleCodeError) as excinfo:
        build_qbch(bch_code(15, 1, 5))
    assert excinfo.value.pair == (3, 12)
    assert "(3,12)" in str(excinfo.value)
    assert isinstance(excinfo.value, ValueError)


def test_designed_distance_when_enumeration_is_capped(monkeypatch, hamming):
    """Above the enumeration cap the designed distance is reported instead"""
    monkeypatch.setenv("QEC_MAX_BRUTEFORCE_DIMENSION", "3")
    reset_settings()
    code = build_qbch(hamming)
    assert code.d == 3
    assert code.distance_source == 'designed'
    assert code.describe()['designed_distance'] == 3


def test_admissible_bch_codes():
    """Only the smallest designed distances survive the containment check"""
    assert [(c.d_bch, c.N, c.K, c.d) for c in admissible_bch_codes(7)] == [(2, 7, 1, 3), (3, 7, 1, 3)]
    assert [(c.d_bch, c.K, c.d) for c in admissible_bch_codes(15)] == [(2, 7, 3), (3, 7, 3)]


def test_admissibility_report():
    document, message = admissibility_report({1, 2, 3, 4, 6, 8, 9, 12}, 15)
    assert message == "fails: cosets (3,12)"
    assert document == {'admissible': False, 'cosets': [3, 12], 'message': message}
    document, message = admissibility_report({1, 2, 4}, 7)
    assert document['admissible']
    assert message.startswith("passes")


# Cosets
def test_coset_representatives_are_coset_minima(hamming):
    """Representatives are sorted, start at zero and are the smallest member of their coset"""
    dual = dual_code(hamming)
    reps = coset_representatives(hamming.generator_matrix, dual.generator_matrix)
    assert len(reps) == 2
    assert not reps[0].any()
    assert [_bits(r) for r in reps] == sorted(_bits(r) for r in reps)
    subcode = enumerate_row_space(dual.generator_matrix)
    for rep in reps:
        assert _bits(rep) == min(_bits(word) for word in subcode ^ rep)


def test_coset_count_matches_logical_dimension():
    code = build_qbch(bch_code(15, 1, 2))
    assert len(code.coset_reps) == 2 ** code.K
    assert len({_bits(r) for r in code.coset_reps}) == 128


def test_coset_representatives_require_containment(hamming):
    """The Hamming code is not inside its dual"""
    dual = dual_code(hamming)
    with pytest.raises(ValueError, match="not contained"):
        coset_representatives(dual.generator_matrix, hamming.generator_matrix)


# States
def test_steane_logical_zero_is_the_even_subcode(steane_css, hamming):
    """|0_L> is uniform over the eight even-weight Hamming codewords"""
    zero, one = qbch_states(steane_css)
    even = {_bits(word) for word in codebook(hamming) if word.sum() % 2 == 0}
    assert zero.support == even
    assert len(one.support) == 8
    assert not zero.support & one.support
    assert all(bits.count('1') % 2 == 1 for bits in one.support)


def test_densify_is_uniform(steane_css):
    state = qbch_states(steane_css)[0].densify()
    nonzero = state.amplitudes[np.abs(state.amplitudes) > 0]
    assert len(nonzero) == 8
    assert np.allclose(nonzero, 1 / np.sqrt(8))


def test_densify_respects_qubit_cap():
    with pytest.raises(ValueError, match="dense simulation cap"):
        densify(SparseCodeState(15, frozenset({"0" * 15})))
    with pytest.raises(ValueError):
        SparseCodeState(3, frozenset({"01"}))


def test_dense_steane_code_corrects_two_erasures(steane_css):
    code = to_quantum_code(steane_css)
    assert code.name == "[[7,1,3]]"
    assert check_erasure_kl(code, 2).passed
    assert steane_code().name == "Steane7"
    assert all(a.equals_up_to_phase(b) for a, b in zip(steane_code().basis, code.basis))


# CSS from arbitrary generator matrices
def test_build_css_from_hamming_pair(hamming):
    G = hamming.generator_matrix
    assert build_css(G, G).parameters == (7, 1, 3)


def test_build_css_rejects_bad_pairs(hamming):
    simplex = dual_code(hamming).generator_matrix
    with pytest.raises(ValueError, match="not contained"):
        build_css(simplex, simplex)
    with pytest.raises(ValueError, match="lengths"):
        build_css(hamming.generator_matrix, np.eye(5, dtype=np.uint8))


def test_describe_qbch(steane_css):
    description = describe_qbch(steane_css)
    assert description['N'] == 7
    assert description['K'] == 4
    assert description['quantum']['K'] == 1
    assert description['quantum']['coset_reps'][0] == "0000000"


def test_steane_codespace_is_hadamard_invariant(steane_css):
    """H on every qubit maps the [[7,1,3]] codespace onto itself"""
    code = to_quantum_code(steane_css)
    dual = hadamard_dual_code(code)
    projector = code.matrix @ code.matrix.conj().T
    assert np.allclose(dual.matrix @ dual.matrix.conj().T, projector, atol=1e-12)
    assert np.allclose(np.trace(projector), 2)
