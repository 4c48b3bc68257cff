"""
Certification of quantum codes

Knill-Laflamme conditions for erasures (operators supported on one known
position set) and for arbitrary errors, factor detection and shortening,
product states in two-qubit subspaces, and a random-subspace harness that
tries to falsify the non-existence of one-erasure codes on two and three
qubits.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .quantum_core import (
    PAULI_MATRICES, LocalOperator, StateVector, apply_local, hadamard_all, ket_bra, reduced_density
)
from .settings import get_settings
from .type_defs import ConditionReportDict, OperatorBasisName, WitnessDict
from .validation import validate_operator_basis, validate_positions

logger = logging.getLogger(__name__)

# (i, j) pairs of the projector basis |i><j|, in the order P_00, P_01, P_10, P_11
PROJECTOR_INDICES: Tuple[Tuple[int, int], ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class QuantumCode:
    """
    An orthonormal list of codewords spanning the codespace.

    ``basis[j]`` is the image of the logical basis state ``|j>``.
    """

    n: int
    k: int
    basis: Tuple[StateVector, ...]
    name: Optional[str] = None

    def __post_init__(self):
        basis = tuple(self.basis)
        object.__setattr__(self, 'basis', basis)
        if len(basis) != 2 ** self.k:
            raise ValueError(f"Invalid code: expected 2^{self.k} codewords, got {len(basis)}")
        for i, codeword in enumerate(basis):
            if codeword.num_qubits != self.n:
                raise ValueError(
                    f"Invalid code: codeword {i} has {codeword.num_qubits} qubits, expected {self.n}"
                )
        gram = self.matrix.conj().T @ self.matrix
        error = np.max(np.abs(gram - np.eye(len(basis))))
        if error >= get_settings().state_tolerance:
            raise ValueError(f"Invalid code: codewords are not orthonormal (deviation {error:.3e})")

    @classmethod
    def from_states(cls, states: Sequence[StateVector], name: Optional[str] = None) -> 'QuantumCode':
        """Build a code from 2^k states on a common number of qubits"""
        if not states:
            raise ValueError("Invalid code: no codewords")
        k = int(round(np.log2(len(states))))
        return cls(states[0].num_qubits, k, tuple(states), name)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, name: Optional[str] = None) -> 'QuantumCode':
        """Build a code from a (2^n, 2^k) matrix of orthonormal columns"""
        n = int(round(np.log2(matrix.shape[0])))
        states = [StateVector(n, matrix[:, j]) for j in range(matrix.shape[1])]
        return cls.from_states(states, name)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> np.ndarray:
        """Codewords as the columns of a (2^n, 2^k) matrix"""
        return np.column_stack([codeword.amplitudes for codeword in self.basis])


@dataclass(frozen=True)
class Witness:
    """Operator and codeword pair that violated a condition"""

    positions: Tuple[int, ...]
    operator: str
    pair: Tuple[int, int]

    def to_dict(self) -> WitnessDict:
        return {
            'positions': list(self.positions),
            'operator': self.operator,
            'pair': (int(self.pair[0]), int(self.pair[1])),
        }


@dataclass(frozen=True)
class ConditionReport:
    """
    Verdict of a Knill-Laflamme check.

    ``worst_expectation_gap`` is the largest ``|<c_k|A|c_k> - <c_l|A|c_l>|``
    and ``worst_off_diagonal`` the largest ``|<c_k|A|c_l>|`` for ``k != l``.
    """

    passed: bool
    worst_expectation_gap: float
    worst_off_diagonal: float
    witness: Optional[Witness] = None

    def to_dict(self) -> ConditionReportDict:
        return {
            'passed': self.passed,
            'worst_expectation_gap': float(self.worst_expectation_gap),
            'worst_off_diagonal': float(self.worst_off_diagonal),
            'witness': self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class ProductStateResult:
    """Product state found in a two-dimensional subspace of two qubits"""

    found: bool
    eta: Tuple[complex, complex]
    state: StateVector
    coefficients: Tuple[complex, complex, complex]

    @property
    def residual(self) -> float:
        return product_residual(self.state)


@dataclass
class _Worst:
    """Running maxima while scanning operators"""

    tolerance: float
    gap: float = 0.0
    off: float = 0.0
    witness: Optional[Witness] = None
    _violation: float = field(default=0.0, repr=False)

    def update(self, gap: float, gap_witness, off: float, off_witness):
        self.gap = max(self.gap, gap)
        self.off = max(self.off, off)
        for value, candidate in ((gap, gap_witness), (off, off_witness)):
            if value >= self.tolerance and value > self._violation:
                self._violation = value
                self.witness = candidate()

    def report(self) -> ConditionReport:
        passed = self.gap < self.tolerance and self.off < self.tolerance
        return ConditionReport(passed, self.gap, self.off, None if passed else self.witness)


def _operator_label(basis: OperatorBasisName, index: int, t: int) -> str:
    if basis == 'pauli':
        letters = 'IXYZ'
        return ''.join(letters[(index >> (2 * (t - 1 - q))) & 3] for q in range(t))
    rows, cols = divmod(index, 2 ** t)
    labels = [
        f"P_{(rows >> (t - 1 - q)) & 1}{(cols >> (t - 1 - q)) & 1}" for q in range(t)
    ]
    return ','.join(labels)


def one_error_operator_basis(n: int, positions: Iterable[int]) -> List[Tuple[LocalOperator, ...]]:
    """
    Tensor-product basis of operators supported on ``positions``.

    Each element is a tuple of ``|i><j|`` operators, one per position, with
    the identity implied elsewhere; there are 4^t of them.
    """
    positions = sorted(positions)
    is_valid, error = validate_positions(positions, n)
    if not is_valid:
        raise ValueError(f"Invalid position set: {error}")
    return [
        tuple(LocalOperator(position, ket_bra(i, j)) for position, (i, j) in zip(positions, choice))
        for choice in itertools.product(PROJECTOR_INDICES, repeat=len(positions))
    ]


def pauli_error_basis(n: int, positions: Iterable[int]) -> List[Tuple[LocalOperator, ...]]:
    """Same as :func:`one_error_operator_basis` with the local basis {I, X, Y, Z}"""
    positions = sorted(positions)
    is_valid, error = validate_positions(positions, n)
    if not is_valid:
        raise ValueError(f"Invalid position set: {error}")
    return [
        tuple(LocalOperator(position, PAULI_MATRICES[letter]) for position, letter in zip(positions, word))
        for word in itertools.product('IXYZ', repeat=len(positions))
    ]


def _local_pauli_stack(t: int) -> np.ndarray:
    """All 4^t Pauli products on t qubits, shape (4^t, 2^t, 2^t)"""
    stack = [np.ones((1, 1), dtype=np.complex128)]
    for _ in range(t):
        stack = [np.kron(m, PAULI_MATRICES[letter]) for m in stack for letter in 'IXYZ']
    return np.array(stack)


def _split_codewords(matrix: np.ndarray, n: int, subset: Sequence[int]) -> np.ndarray:
    """Codewords as (K, 2^t, 2^(n-t)) with the subset's qubits first"""
    K = matrix.shape[1]
    tensor = matrix.T.reshape((K,) + (2,) * n)
    axes = [q for q in subset]
    rest = [q for q in range(1, n + 1) if q not in subset]
    return np.transpose(tensor, [0] + axes + rest).reshape(K, 2 ** len(subset), -1)


def _subset_expectations(matrix: np.ndarray, n: int, subset: Sequence[int],
                         basis: OperatorBasisName) -> np.ndarray:
    """
    E[k, l, p] = <c_k| A_p |c_l> for every basis operator A_p on ``subset``.

    Projector index p = i * 2^t + j stands for |i><j|.
    """
    psi = _split_codewords(matrix, n, subset)
    gram = np.einsum('kir,ljr->klij', psi.conj(), psi)
    if basis == 'pauli':
        return np.einsum('pij,klij->klp', _local_pauli_stack(len(subset)), gram)
    K = matrix.shape[1]
    return gram.reshape(K, K, -1)


def _scan_expectations(worst: _Worst, E: np.ndarray, describe) -> None:
    """Fold E[k, l, p] into the running maxima; describe(p) gives (positions, operator label)"""
    K = E.shape[0]
    diagonal = E[np.arange(K), np.arange(K), :]
    gaps = np.abs(diagonal[:, None, :] - diagonal[None, :, :])
    gap_index = np.unravel_index(np.argmax(gaps), gaps.shape)
    off_diagonal = np.abs(E) * (1 - np.eye(K))[:, :, None]
    off_index = np.unravel_index(np.argmax(off_diagonal), off_diagonal.shape)
    worst.update(
        float(gaps[gap_index]),
        lambda: Witness(*describe(gap_index[2]), (int(gap_index[0]), int(gap_index[1]))),
        float(off_diagonal[off_index]),
        lambda: Witness(*describe(off_index[2]), (int(off_index[0]), int(off_index[1]))),
    )


def check_erasure_kl(code: QuantumCode, t: int, basis: OperatorBasisName = 'projector',
                     tolerance: Optional[float] = None) -> ConditionReport:
    """
    Erasure form of the Knill-Laflamme conditions.

    For every set of ``t`` positions and every basis operator ``A`` supported
    there, the codewords must satisfy ``<c_k|A|c_k> = <c_l|A|c_l>`` and
    ``<c_k|A|c_l> = 0`` for ``k != l``. The code then corrects any ``t``
    erasures.

    Args:
        code: Code to certify
        t: Number of erased positions
        basis: Local operator basis, 'projector' (|i><j|) or 'pauli'
        tolerance: Override for the condition tolerance

    Returns:
        A ConditionReport, with a witness on failure
    """
    is_valid, error = validate_operator_basis(basis)
    if not is_valid:
        raise ValueError(error)
    if not 0 <= t <= code.n:
        raise ValueError(f"Invalid erasure count: t={t} must lie in [0..{code.n}]")
    worst = _Worst(get_settings().condition_tolerance if tolerance is None else tolerance)
    matrix = code.matrix
    for subset in itertools.combinations(range(1, code.n + 1), t):
        E = _subset_expectations(matrix, code.n, subset, basis)
        _scan_expectations(worst, E, lambda p, s=subset: (s, _operator_label(basis, p, t) if t else 'I'))
    report = worst.report()
    if not report.passed:
        logger.debug(f"Erasure conditions fail for t={t}: {report.witness}")
    return report


def _error_images(matrix: np.ndarray, n: int, t: int) -> Tuple[np.ndarray, List[Tuple[Tuple[int, ...], str]]]:
    """
    A|c_l> for every projector-basis operator on every t-subset.

    Returns an array of shape (ops, K, 2^n) and a label per operator.
    """
    K = matrix.shape[1]
    images = []
    labels = []
    for subset in itertools.combinations(range(1, n + 1), t):
        for choice in itertools.product(PROJECTOR_INDICES, repeat=t):
            vectors = matrix.T.copy()
            for position, (i, j) in zip(subset, choice):
                vectors = np.stack([apply_local(v, n, position, ket_bra(i, j)) for v in vectors])
            images.append(vectors.reshape(K, -1))
            labels.append((subset, ','.join(f"P_{i}{j}" for i, j in choice) or 'I'))
    return np.array(images), labels


def check_general_kl(code: QuantumCode, t: int, direct: bool = False,
                     tolerance: Optional[float] = None) -> ConditionReport:
    """
    Knill-Laflamme conditions for ``t`` arbitrary errors at unknown positions.

    The products ``A_i^dagger A_j`` of t-error operators span the 2t-error
    operators, so by default this evaluates the erasure conditions on
    ``min(2t, n)`` positions. ``direct=True`` instead enumerates every pair
    through the Gram matrix of all vectors ``A|c_k>`` for cross-validation.
    """
    if not 0 <= t <= code.n:
        raise ValueError(f"Invalid error count: t={t} must lie in [0..{code.n}]")
    if not direct:
        return check_erasure_kl(code, min(2 * t, code.n), tolerance=tolerance)

    worst = _Worst(get_settings().condition_tolerance if tolerance is None else tolerance)
    images, labels = _error_images(code.matrix, code.n, t)
    ops, K, _ = images.shape
    flat = images.reshape(ops * K, -1)
    gram = (flat.conj() @ flat.T).reshape(ops, K, ops, K)
    # E[k, l, (a, b)] = <c_k| A_a^dagger A_b |c_l>
    E = np.transpose(gram, (1, 3, 0, 2)).reshape(K, K, ops * ops)

    def describe(index):
        a, b = divmod(index, ops)
        support = tuple(sorted(set(labels[a][0]) | set(labels[b][0])))
        return support, f"({labels[a][1]})^dag({labels[b][1]})"

    _scan_expectations(worst, E, describe)
    return worst.report()


def erasure_implies_general(code: QuantumCode, t: int, tolerance: Optional[float] = None) -> bool:
    """
    Check that correcting t errors implies correcting 2t erasures.

    The general conditions are evaluated pair by pair, independently of the
    erasure checker, and the implication's truth value is returned.
    """
    if 2 * t > code.n:
        raise ValueError(f"Invalid error count: 2t={2 * t} exceeds n={code.n}")
    general = check_general_kl(code, t, direct=True, tolerance=tolerance)
    if not general.passed:
        return True
    holds = check_erasure_kl(code, 2 * t, tolerance=tolerance).passed
    if not holds:
        logger.warning(f"Code {code.name or '<anonymous>'} corrects {t} errors but not {2 * t} erasures")
    return holds


def product_residual(state: StateVector) -> float:
    """|<00|pi><11|pi> - <01|pi><10|pi>|, zero exactly for two-qubit product states"""
    if state.num_qubits != 2:
        raise ValueError(f"Invalid state: expected 2 qubits, got {state.num_qubits}")
    a = state.amplitudes
    return float(abs(a[0] * a[3] - a[1] * a[2]))


def is_product_state(state: StateVector, tolerance: Optional[float] = None) -> bool:
    tolerance = get_settings().condition_tolerance if tolerance is None else tolerance
    return product_residual(state) < tolerance


def product_factors(state: StateVector) -> Tuple[StateVector, StateVector]:
    """Split a two-qubit product state into |pi_1>|pi_2> (global phase on the first factor)"""
    if not is_product_state(state):
        raise ValueError("Invalid state: not a product state")
    u, s, vh = np.linalg.svd(state.amplitudes.reshape(2, 2))
    return StateVector.from_vector(u[:, 0] * s[0], 1), StateVector.from_vector(vh[0, :], 1)


def _orthonormalize_pair(b1: StateVector, b2: StateVector) -> Tuple[np.ndarray, np.ndarray]:
    first = b1.amplitudes / np.linalg.norm(b1.amplitudes)
    second = b2.amplitudes - np.vdot(first, b2.amplitudes) * first
    norm = np.linalg.norm(second)
    if norm < get_settings().state_tolerance:
        raise ValueError("Invalid subspace: b1 and b2 are linearly dependent")
    return first, second / norm


def find_product_state(b1: StateVector, b2: StateVector) -> ProductStateResult:
    """
    Find a product state in span{b1, b2} of two qubits.

    A state is a product iff <00|pi><11|pi> = <01|pi><10|pi>. Substituting
    pi = eta1 b1 + eta2 b2 gives c1 eta1^2 + c12 eta1 eta2 + c2 eta2^2 = 0;
    if c1 or c2 vanishes the corresponding basis vector is already a product,
    otherwise a root of the quadratic gives one. The basis is orthonormalized
    first, keeping the direction of b1.

    Raises:
        ValueError: If the inputs are not two-qubit states or are dependent
    """
    for state in (b1, b2):
        if state.num_qubits != 2:
            raise ValueError(f"Invalid state: expected 2 qubits, got {state.num_qubits}")
    u, v = _orthonormalize_pair(b1, b2)
    c1 = u[0] * u[3] - u[1] * u[2]
    c12 = u[0] * v[3] + u[3] * v[0] - u[1] * v[2] - u[2] * v[1]
    c2 = v[0] * v[3] - v[1] * v[2]
    coefficients = (complex(c1), complex(c12), complex(c2))
    tolerance = get_settings().condition_tolerance

    if abs(c1) < tolerance:
        eta = (1.0 + 0j, 0j)
    elif abs(c2) < tolerance:
        eta = (0j, 1.0 + 0j)
    else:
        root = np.sqrt(c12 * c12 - 4 * c1 * c2)
        # pick the sign that avoids cancellation against c12
        if np.real(np.conj(c12) * root) < 0:
            root = -root
        q = -0.5 * (c12 + root)
        ratio = q / c1 if abs(q) > tolerance else -c12 / (2 * c1)
        eta = (complex(ratio), 1.0 + 0j)
    norm = np.hypot(abs(eta[0]), abs(eta[1]))
    eta = (eta[0] / norm, eta[1] / norm)
    state = StateVector.from_vector(eta[0] * u + eta[1] * v, 2)
    return ProductStateResult(True, eta, state, coefficients)


def _single_qubit_factor(codeword: StateVector, position: int, tolerance: float) -> Optional[np.ndarray]:
    rho = reduced_density(codeword, [position])
    if abs(rho.purity() - 1.0) >= tolerance:
        return None
    eigenvalues, eigenvectors = np.linalg.eigh(rho.entries)
    return eigenvectors[:, np.argmax(eigenvalues)]


def _canonical_phase(vector: np.ndarray) -> np.ndarray:
    pivot = vector[np.argmax(np.abs(vector) > 1e-12)]
    return vector * (abs(pivot) / pivot)


def detect_factor(code: QuantumCode) -> Optional[Tuple[int, StateVector]]:
    """
    Find a position where every codeword carries the same one-qubit factor.

    A codeword has a factor at position k when its one-qubit reduced density
    matrix is pure; the factor is common when all codewords agree up to phase.

    Returns:
        (position, factor) for the first such position, or None
    """
    tolerance = get_settings().condition_tolerance
    for position in range(1, code.n + 1):
        factors = []
        for codeword in code.basis:
            factor = _single_qubit_factor(codeword, position, tolerance)
            if factor is None:
                break
            factors.append(factor)
        else:
            reference = factors[0]
            if all(abs(abs(np.vdot(reference, other)) - 1.0) < tolerance for other in factors[1:]):
                return position, StateVector(1, _canonical_phase(reference))
    return None


def shorten_code(code: QuantumCode, position: int) -> QuantumCode:
    """
    Delete a common one-qubit factor, giving an (n-1)-qubit code of equal dimension.

    Raises:
        ValueError: If ``position`` does not carry a common factor
    """
    is_valid, error = validate_positions([position], code.n)
    if not is_valid:
        raise ValueError(f"Invalid position: {error}")
    if code.n < 2:
        raise ValueError("Invalid code: a one-qubit code cannot be shortened")
    tolerance = get_settings().condition_tolerance
    factors = [_single_qubit_factor(codeword, position, tolerance) for codeword in code.basis]
    if any(factor is None for factor in factors) or any(
        abs(abs(np.vdot(factors[0], other)) - 1.0) >= tolerance for other in factors[1:]
    ):
        raise ValueError(f"Invalid position: qubit {position} is not a common factor of the code")
    theta = factors[0]
    shortened = []
    for codeword in code.basis:
        tensor = np.moveaxis(codeword.tensor(), position - 1, 0)
        remainder = np.tensordot(theta.conj(), tensor, axes=([0], [0])).reshape(-1)
        shortened.append(StateVector.from_vector(remainder, code.n - 1))
    name = f"{code.name}-shortened" if code.name else None
    return QuantumCode(code.n - 1, code.k, tuple(shortened), name)


def local_unitary_transform(code: QuantumCode, position: int, unitary: np.ndarray) -> QuantumCode:
    """Apply the same single-qubit unitary to every codeword"""
    is_valid, error = validate_positions([position], code.n)
    if not is_valid:
        raise ValueError(f"Invalid position: {error}")
    unitary = np.asarray(unitary, dtype=np.complex128)
    if not np.allclose(unitary.conj().T @ unitary, np.eye(2), atol=get_settings().state_tolerance):
        raise ValueError("Invalid operator: not unitary")
    states = [
        StateVector.from_vector(apply_local(codeword.amplitudes, code.n, position, unitary), code.n)
        for codeword in code.basis
    ]
    return QuantumCode(code.n, code.k, tuple(states), code.name)


def random_code(n: int, dimension: int, rng: np.random.Generator) -> QuantumCode:
    """Haar-random subspace: orthonormalized complex Gaussian vectors"""
    draws = rng.standard_normal((2 ** n, dimension)) + 1j * rng.standard_normal((2 ** n, dimension))
    q, _ = np.linalg.qr(draws)
    return QuantumCode.from_matrix(q)


def falsify_short_codes(n: int, trials: int, seed: int, injected: Sequence[QuantumCode] = (),
                        tolerance: Optional[float] = None) -> int:
    """
    Count random one-qubit codes on n qubits that correct one erasure.

    Each trial draws a Haar-random two-dimensional subspace from its own
    stream ``default_rng([seed, trial])`` and runs the t = 1 erasure check,
    so the count does not depend on evaluation order. Codes in ``injected``
    are checked as extra trials (this is how the harness is run on n = 4
    with a known code).

    Returns:
        Number of passing trials, expected to be zero for n in {2, 3}
    """
    if n not in (2, 3) and not injected:
        raise ValueError(f"Invalid length: falsification is defined for n in [2, 3], got {n}")
    if trials < 0:
        raise ValueError(f"Invalid trial count: {trials}")
    logger.info(f"Falsifying one-erasure codes on {n} qubits with {trials} random trials (seed {seed})")
    passes = 0
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        if check_erasure_kl(random_code(n, 2, rng), 1, tolerance=tolerance).passed:
            passes += 1
            logger.warning(f"Random code passed the erasure check at trial {trial}")
    for code in injected:
        if code.n != n:
            raise ValueError(f"Invalid injected code: {code.n} qubits, expected {n}")
        if check_erasure_kl(code, 1, tolerance=tolerance).passed:
            passes += 1
    logger.info(f"Falsification on {n} qubits finished: {passes} passes")
    return passes


def hadamard_dual_code(code: QuantumCode) -> QuantumCode:
    """The code spanned by H^{(x)n} applied to each codeword (bit and phase flips swap roles)"""
    states = tuple(hadamard_all(codeword) for codeword in code.basis)
    name = f"{code.name}-dual" if code.name else None
    return QuantumCode(code.n, code.k, states, name)
