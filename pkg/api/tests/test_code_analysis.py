import pytest
import sys
import os

# Add the parent directory to sys.path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import itertools

import numpy as np
from scipy.stats import unitary_group

import qec_erasure as qe
from qec_erasure.code_analysis import (
    QuantumCode, check_erasure_kl, check_general_kl, detect_factor, erasure_implies_general,
    falsify_short_codes, find_product_state, hadamard_dual_code, is_product_state,
    local_unitary_transform, one_error_operator_basis, pauli_error_basis, product_factors,
    product_residual, random_code, shorten_code
)
from qec_erasure.quantum_core import HADAMARD, StateVector, basis_state, make_state, random_state


def _even_weight_signs(n, sign_positions):
    """Expected Hadamard-dual amplitudes: +-1/sqrt(2^(n-1)) on even-weight strings"""
    amplitudes = np.zeros(2 ** n)
    for bits in itertools.product((0, 1), repeat=n):
        if sum(bits) % 2 == 0:
            index = int(''.join(map(str, bits)), 2)
            sign = (-1) ** sum(bits[p - 1] for p in sign_positions)
            amplitudes[index] = sign / np.sqrt(2 ** (n - 1))
    return amplitudes


# Codes
def test_quantum_code_rejects_non_orthogonal_codewords():
    """Codewords must be orthonormal"""
    plus = make_state(1, [("0", 1), ("1", 1)])
    with pytest.raises(ValueError, match="orthonormal"):
        QuantumCode.from_states([basis_state("0"), plus])


def test_quantum_code_rejects_wrong_dimension():
    """A k-qubit code needs 2^k codewords"""
    with pytest.raises(ValueError, match="2\\^1"):
        QuantumCode(1, 1, (basis_state("0"),))


def test_builtin_codes_are_orthonormal(four_qubit_code, four_qubit_code_k2):
    """The shipped codes carry the expected shapes"""
    assert (four_qubit_code.n, four_qubit_code.k) == (4, 1)
    assert (four_qubit_code_k2.n, four_qubit_code_k2.k) == (4, 2)
    gram = four_qubit_code_k2.matrix.conj().T @ four_qubit_code_k2.matrix
    assert np.allclose(gram, np.eye(4))


# Operator bases
def test_operator_bases_have_four_to_the_t_elements():
    assert len(one_error_operator_basis(4, [1, 3])) == 16
    assert len(pauli_error_basis(4, [2])) == 4
    with pytest.raises(ValueError):
        one_error_operator_basis(4, [5])


# Knill-Laflamme conditions
def test_four_qubit_code_corrects_one_erasure(four_qubit_code):
    """Every single-qubit erasure satisfies the erasure conditions"""
    report = check_erasure_kl(four_qubit_code, 1)
    assert report.passed
    assert report.witness is None
    assert report.worst_expectation_gap < 1e-9
    assert report.worst_off_diagonal < 1e-9


def test_four_qubit_code_does_not_correct_one_unknown_error(four_qubit_code):
    """One arbitrary error at an unknown position is beyond four qubits"""
    report = check_general_kl(four_qubit_code, 1)
    assert not report.passed
    assert report.witness is not None
    assert len(report.witness.positions) == 2


def test_general_check_direct_mode_agrees(four_qubit_code, steane):
    """Pairwise enumeration gives the same verdicts as the 2t-erasure reduction"""
    assert not check_general_kl(four_qubit_code, 1, direct=True).passed
    assert check_general_kl(steane, 1, direct=True).passed
    assert check_general_kl(steane, 1).passed


def test_two_erasures_are_beyond_the_four_qubit_code(four_qubit_code):
    report = check_erasure_kl(four_qubit_code, 2)
    assert not report.passed
    assert len(report.to_dict()["witness"]["positions"]) == 2


def test_pauli_basis_agrees_with_projector_basis(four_qubit_code, four_qubit_code_k2):
    """The verdict does not depend on the local operator basis"""
    for code in (four_qubit_code, four_qubit_code_k2):
        for t in (1, 2):
            assert check_erasure_kl(code, t, basis="pauli").passed == check_erasure_kl(code, t).passed


def test_two_logical_qubit_code_corrects_one_erasure(four_qubit_code_k2):
    assert check_erasure_kl(four_qubit_code_k2, 1).passed


def test_zero_erasures_always_pass(rng):
    """With nothing erased, the conditions reduce to orthonormality"""
    assert check_erasure_kl(random_code(3, 2, rng), 0).passed


def test_check_rejects_invalid_arguments(four_qubit_code):
    with pytest.raises(ValueError):
        check_erasure_kl(four_qubit_code, 5)
    with pytest.raises(ValueError):
        check_erasure_kl(four_qubit_code, 1, basis="gellmann")


def test_steane_corrects_two_erasures(steane):
    """A code correcting one error corrects two erasures"""
    assert check_erasure_kl(steane, 2).passed
    assert not check_erasure_kl(steane, 3).passed
    assert erasure_implies_general(steane, 1)


def test_errors_imply_double_erasures_on_random_codes(rng):
    """Random five-qubit codes never correct t errors without correcting 2t erasures"""
    for _ in range(10):
        code = random_code(5, 2, rng)
        for t in (1, 2):
            assert erasure_implies_general(code, t)


@pytest.mark.parametrize("t", [1, 2])
def test_direct_general_check_matches_erasure_reduction(t, rng, four_qubit_code, four_qubit_code_k2, steane):
    """Pairwise enumeration and the min(2t, n) erasure check give the same verdict"""
    codes = [four_qubit_code, four_qubit_code_k2, steane, random_code(3, 2, rng), random_code(4, 2, rng)]
    for code in codes:
        direct = check_general_kl(code, t, direct=True)
        reduced = check_erasure_kl(code, min(2 * t, code.n))
        assert direct.passed == reduced.passed, code.name


def test_passing_is_monotone_in_t(four_qubit_code, four_qubit_code_k2, steane, rng):
    """Correcting t erasures implies correcting every smaller number"""
    for code in (four_qubit_code, four_qubit_code_k2, steane, random_code(3, 2, rng)):
        verdicts = [check_erasure_kl(code, t).passed for t in range(code.n + 1)]
        for t, passed in enumerate(verdicts):
            if passed:
                assert all(verdicts[:t]), code.name


def test_tolerance_override(four_qubit_code):
    """A huge tolerance makes any code pass"""
    assert check_general_kl(four_qubit_code, 1, tolerance=10.0).passed


# Product states
def test_product_state_exists_in_every_two_qubit_plane(rng):
    """1000 random two-dimensional subspaces each contain a product state"""
    for _ in range(1000):
        result = find_product_state(random_state(2, rng), random_state(2, rng))
        assert result.found
        assert result.residual < 1e-9
        first, second = product_factors(result.state)
        assert StateVector(2, np.kron(first.amplitudes, second.amplitudes)).equals_up_to_phase(result.state)


def test_product_state_in_bell_plane():
    """The plane of two Bell states contains |00> and |11>"""
    b1 = make_state(2, [("00", 1), ("11", 1)])
    b2 = make_state(2, [("00", 1), ("11", -1)])
    result = find_product_state(b1, b2)
    assert is_product_state(result.state)
    assert product_residual(b1) == pytest.approx(0.5)


def test_product_basis_vector_is_returned_directly():
    """If b1 is already a product it is the answer"""
    result = find_product_state(basis_state("01"), make_state(2, [("00", 1), ("11", 1)]))
    assert result.state.equals_up_to_phase(basis_state("01"))


def test_product_state_stays_in_span_of_non_orthogonal_inputs(rng):
    """The product state is a combination of b1 and b2 even when they overlap"""
    for _ in range(200):
        b1 = random_state(2, rng)
        b2 = StateVector.from_vector(b1.amplitudes + 0.5 * random_state(2, rng).amplitudes, 2)
        assert abs(b1.inner(b2)) > 0.1
        result = find_product_state(b1, b2)
        span = np.column_stack([b1.amplitudes, b2.amplitudes])
        coefficients, *_ = np.linalg.lstsq(span, result.state.amplitudes, rcond=None)
        assert np.linalg.norm(span @ coefficients - result.state.amplitudes) < 1e-10
        assert result.residual < 1e-9


def test_product_state_rejects_dependent_inputs():
    b1 = make_state(2, [("00", 1), ("11", 1)])
    with pytest.raises(ValueError, match="dependent"):
        find_product_state(b1, b1)
    with pytest.raises(ValueError):
        find_product_state(basis_state("000"), basis_state("001"))


# Factors and shortening
def test_detect_and_shorten_common_factor():
    """A code with a fixed first qubit shortens to the remaining qubits"""
    code = QuantumCode.from_states([basis_state("00"), basis_state("01")])
    position, factor = detect_factor(code)
    assert position == 1
    assert factor.equals_up_to_phase(basis_state("0"))
    shortened = shorten_code(code, 1)
    assert (shortened.n, shortened.k) == (1, 1)
    assert shortened.basis[1].equals_up_to_phase(basis_state("1"))


def test_shortening_preserves_verdicts():
    """{|000>+|110>, |010>+|100>} carries |0> on qubit 3; dropping it changes no verdict"""
    code = QuantumCode.from_states([
        make_state(3, [("000", 1), ("110", 1)]),
        make_state(3, [("010", 1), ("100", 1)]),
    ])
    position, factor = detect_factor(code)
    assert position == 3
    assert factor.equals_up_to_phase(basis_state("0"))
    shortened = shorten_code(code, position)
    assert shortened.basis[0].equals_up_to_phase(make_state(2, [("00", 1), ("11", 1)]))
    assert shortened.basis[1].equals_up_to_phase(make_state(2, [("01", 1), ("10", 1)]))
    for t in range(shortened.n + 1):
        assert check_erasure_kl(code, t).passed == check_erasure_kl(shortened, t).passed
    assert check_general_kl(code, 1).passed == check_general_kl(shortened, 1).passed


def test_four_qubit_code_has_no_factor(four_qubit_code):
    assert detect_factor(four_qubit_code) is None
    with pytest.raises(ValueError, match="common factor"):
        shorten_code(four_qubit_code, 2)


def test_local_unitaries_preserve_erasure_correction(four_qubit_code):
    """Erasure correction is invariant under local unitaries"""
    rotated = local_unitary_transform(four_qubit_code, 3, HADAMARD)
    assert check_erasure_kl(rotated, 1).passed
    with pytest.raises(ValueError, match="unitary"):
        local_unitary_transform(four_qubit_code, 1, np.array([[1, 1], [0, 1]]))


def test_local_unitaries_leave_every_verdict_unchanged(four_qubit_code, four_qubit_code_k2, rng):
    """Random one-qubit unitaries on each position keep every erasure and error verdict"""
    for code in (four_qubit_code, four_qubit_code_k2, random_code(3, 2, rng)):
        for position in range(1, code.n + 1):
            rotated = local_unitary_transform(code, position, unitary_group.rvs(2, random_state=rng))
            for t in range(code.n + 1):
                assert check_erasure_kl(rotated, t).passed == check_erasure_kl(code, t).passed
            assert check_general_kl(rotated, 1).passed == check_general_kl(code, 1).passed


# Hadamard duals
def test_hadamard_dual_signs(four_qubit_code_k2):
    """H on every qubit maps the codewords to signed even-weight superpositions"""
    dual = hadamard_dual_code(four_qubit_code_k2)
    sign_positions = [(), (1, 4), (1, 2), (1, 3)]
    for codeword, positions in zip(dual.basis, sign_positions):
        assert np.allclose(codeword.amplitudes, _even_weight_signs(4, positions), atol=1e-12)
    assert check_erasure_kl(dual, 1).passed


# Short-code falsification
@pytest.mark.parametrize("n", [2, 3])
def test_no_short_code_corrects_an_erasure(n):
    """Random one-qubit codes on two or three qubits never pass"""
    assert falsify_short_codes(n, 10000, seed=7) == 0


def test_injected_code_is_counted(four_qubit_code):
    """The harness notices a code that does pass"""
    assert falsify_short_codes(4, 0, seed=0, injected=[four_qubit_code]) == 1


def test_falsify_requires_short_lengths():
    with pytest.raises(ValueError):
        falsify_short_codes(5, 10, seed=0)


def test_package_exports_certification_api():
    assert qe.check_erasure_kl is check_erasure_kl
    assert "falsify_short_codes" in qe.__all__
