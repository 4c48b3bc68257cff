"""
Dense n-qubit linear algebra

States are complex numpy vectors of length 2^n. Qubit 1 is the leftmost ket
factor and the most significant bit of the basis index, so ``|1001>`` is
index 9 for n = 4. Operators act on 1-based qubit positions and are applied
by tensor contraction rather than by building 2^n x 2^n matrices.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import sparse

from .settings import get_settings
from .validation import (
    validate_local_matrix, validate_num_qubits, validate_positions, validate_terms
)

logger = logging.getLogger(__name__)

HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)

PAULI_MATRICES = {
    'I': np.eye(2, dtype=np.complex128),
    'X': np.array([[0, 1], [1, 0]], dtype=np.complex128),
    'Y': np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    'Z': np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def ket_bra(i: int, j: int) -> np.ndarray:
    """Single-qubit operator |i><j|"""
    matrix = np.zeros((2, 2), dtype=np.complex128)
    matrix[i, j] = 1.0
    return matrix


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class StateVector:
    """
    Normalized pure state on ``num_qubits`` qubits.

    Use :func:`make_state` or :meth:`from_vector` to build one from
    unnormalized data.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        is_valid, error = validate_num_qubits(self.num_qubits, get_settings().max_dense_qubits)
        if not is_valid:
            raise ValueError(f"Invalid state: {error}")
        amplitudes = _frozen(np.ravel(self.amplitudes))
        if amplitudes.shape != (2 ** self.num_qubits,):
            raise ValueError(
                f"Invalid state: expected {2 ** self.num_qubits} amplitudes, got {amplitudes.shape[0]}"
            )
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > get_settings().state_tolerance:
            raise ValueError(f"Invalid state: norm is {norm!r}, expected 1")
        object.__setattr__(self, 'amplitudes', amplitudes)

    @classmethod
    def from_vector(cls, vector: Sequence[complex], num_qubits: Optional[int] = None) -> 'StateVector':
        """Normalize an arbitrary nonzero vector into a state"""
        vector = np.asarray(vector, dtype=np.complex128).ravel()
        if num_qubits is None:
            num_qubits = int(round(np.log2(vector.size))) if vector.size else 0
        norm = np.linalg.norm(vector)
        if norm < get_settings().state_tolerance:
            raise ValueError("Invalid state: null state")
        return cls(num_qubits, vector / norm)

    @property
    def dimension(self) -> int:
        return 2 ** self.num_qubits

    def amplitude(self, bits: str) -> complex:
        """Amplitude of a basis ket given as a bitstring, qubit 1 first"""
        if len(bits) != self.num_qubits:
            raise ValueError(f"Invalid bitstring: expected length {self.num_qubits}, got {len(bits)}")
        return complex(self.amplitudes[int(bits, 2)])

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped so axis k-1 is qubit k"""
        return self.amplitudes.reshape((2,) * self.num_qubits)

    def inner(self, other: 'StateVector') -> complex:
        """<self|other>"""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def equals_up_to_phase(self, other: 'StateVector', tolerance: Optional[float] = None) -> bool:
        tolerance = get_settings().state_tolerance if tolerance is None else tolerance
        if self.num_qubits != other.num_qubits:
            return False
        return abs(abs(self.inner(other)) - 1.0) < tolerance


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed state: Hermitian, unit trace and positive semidefinite"""

    num_qubits: int
    entries: np.ndarray

    def __post_init__(self):
        settings = get_settings()
        is_valid, error = validate_num_qubits(self.num_qubits, settings.max_dense_qubits)
        if not is_valid:
            raise ValueError(f"Invalid density matrix: {error}")
        entries = _frozen(self.entries)
        dim = 2 ** self.num_qubits
        if entries.shape != (dim, dim):
            raise ValueError(f"Invalid density matrix: expected shape {(dim, dim)}, got {entries.shape}")
        if np.max(np.abs(entries - entries.conj().T)) > settings.state_tolerance:
            raise ValueError("Invalid density matrix: not Hermitian")
        trace = np.trace(entries).real
        if abs(trace - 1.0) > settings.state_tolerance:
            raise ValueError(f"Invalid density matrix: trace is {trace!r}, expected 1")
        min_eigenvalue = np.linalg.eigvalsh(entries).min()
        if min_eigenvalue < -settings.psd_tolerance:
            raise ValueError(f"Invalid density matrix: eigenvalue {min_eigenvalue!r} is negative")
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_state(cls, state: StateVector) -> 'DensityMatrix':
        return cls(state.num_qubits, np.outer(state.amplitudes, state.amplitudes.conj()))

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def purity(self) -> float:
        """tr(rho^2)"""
        return float(np.real(np.vdot(self.entries, self.entries)))


@dataclass(frozen=True)
class LocalOperator:
    """A 2x2 operator acting on the qubit at 1-based ``position``"""

    position: int
    matrix: np.ndarray

    def __post_init__(self):
        is_valid, error = validate_local_matrix(self.matrix)
        if not is_valid:
            raise ValueError(f"Invalid local operator: {error}")
        if isinstance(self.position, bool) or self.position < 1:
            raise ValueError(f"Invalid local operator: position {self.position} must be >= 1")
        object.__setattr__(self, 'matrix', _frozen(self.matrix))


@dataclass(frozen=True)
class PauliString:
    """Tensor product of Pauli letters, qubit 1 first"""

    n: int
    letters: str

    def __post_init__(self):
        if len(self.letters) != self.n:
            raise ValueError(f"Invalid Pauli string: {self.letters!r} does not have length {self.n}")
        if any(letter not in PAULI_MATRICES for letter in self.letters):
            raise ValueError(f"Invalid Pauli string: {self.letters!r} uses letters outside IXYZ")

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(k + 1 for k, letter in enumerate(self.letters) if letter != 'I')

    def local_operators(self) -> List[LocalOperator]:
        return [
            LocalOperator(k + 1, PAULI_MATRICES[letter])
            for k, letter in enumerate(self.letters) if letter != 'I'
        ]


def make_state(n: int, terms: Sequence[Tuple[str, complex]]) -> StateVector:
    """
    Build a normalized superposition from a ket list.

    Duplicate bitstrings are summed, so normalization factors can be omitted
    as in hand-written code tables.

    Args:
        n: Number of qubits
        terms: (bitstring, coefficient) pairs, qubit 1 leftmost

    Returns:
        The normalized state

    Raises:
        ValueError: On malformed terms or a null state after summation
    """
    is_valid, error = validate_num_qubits(n, get_settings().max_dense_qubits)
    if not is_valid:
        raise ValueError(f"Invalid state: {error}")
    is_valid, error = validate_terms(n, terms)
    if not is_valid:
        raise ValueError(f"Invalid state: {error}")
    vector = np.zeros(2 ** n, dtype=np.complex128)
    for bits, coefficient in terms:
        vector[int(bits, 2)] += complex(coefficient)
    return StateVector.from_vector(vector, n)


def basis_state(bits: str) -> StateVector:
    return make_state(len(bits), [(bits, 1)])


def apply_local(vector: np.ndarray, n: int, position: int, matrix: np.ndarray) -> np.ndarray:
    """Apply a 2x2 matrix to qubit ``position`` of a raw length-2^n vector"""
    tensor = np.asarray(vector, dtype=np.complex128).reshape((2,) * n)
    axis = position - 1
    tensor = np.tensordot(matrix, tensor, axes=([1], [axis]))
    return np.moveaxis(tensor, 0, axis).reshape(-1)


def apply_local_batch(vectors: np.ndarray, n: int, position: int, matrix: np.ndarray) -> np.ndarray:
    """Apply a 2x2 matrix to qubit ``position`` of each row of a (K, 2^n) array"""
    vectors = np.asarray(vectors, dtype=np.complex128)
    tensor = vectors.reshape((vectors.shape[0],) + (2,) * n)
    tensor = np.tensordot(matrix, tensor, axes=([1], [position]))
    return np.moveaxis(tensor, 0, position).reshape(vectors.shape[0], -1)


def _raw(state: Union[StateVector, np.ndarray]) -> Tuple[np.ndarray, int]:
    if isinstance(state, StateVector):
        return state.amplitudes, state.num_qubits
    vector = np.asarray(state, dtype=np.complex128).ravel()
    return vector, int(round(np.log2(vector.size)))


def apply_operator(state: Union[StateVector, np.ndarray], op: LocalOperator) -> np.ndarray:
    """Apply a local operator; the result is generally unnormalized"""
    vector, n = _raw(state)
    if op.position > n:
        raise ValueError(f"Invalid local operator: position {op.position} out of range [1..{n}]")
    return apply_local(vector, n, op.position, op.matrix)


def apply_operators(state: Union[StateVector, np.ndarray], ops: Iterable[LocalOperator]) -> np.ndarray:
    """Apply local operators in sequence"""
    vector, n = _raw(state)
    for op in ops:
        vector = apply_operator(vector, op)
    return vector


def apply_pauli(state: Union[StateVector, np.ndarray], pauli: PauliString) -> np.ndarray:
    return apply_operators(state, pauli.local_operators())


def embed_local(op: LocalOperator, n: int) -> sparse.csr_matrix:
    """
    Embed a local operator into the full 2^n space.

    Returns a sparse matrix acting as ``op`` on qubit ``op.position`` and as
    the identity elsewhere.
    """
    is_valid, error = validate_positions([op.position], n)
    if not is_valid:
        raise ValueError(f"Invalid local operator: {error}")
    left = sparse.identity(2 ** (op.position - 1), dtype=np.complex128, format='csr')
    right = sparse.identity(2 ** (n - op.position), dtype=np.complex128, format='csr')
    return sparse.kron(sparse.kron(left, sparse.csr_matrix(op.matrix)), right, format='csr')


def embed_product(ops: Sequence[LocalOperator], n: int) -> sparse.csr_matrix:
    """Embed a product of local operators on distinct positions"""
    result = sparse.identity(2 ** n, dtype=np.complex128, format='csr')
    for op in ops:
        result = embed_local(op, n) @ result
    return result.tocsr()


def hadamard_all(s: StateVector) -> StateVector:
    """Apply H on every qubit"""
    vector = s.amplitudes
    for position in range(1, s.num_qubits + 1):
        vector = apply_local(vector, s.num_qubits, position, HADAMARD)
    return StateVector.from_vector(vector, s.num_qubits)


@lru_cache(maxsize=None)
def hamming_weights(n: int) -> np.ndarray:
    """Hamming weight of every basis index for n qubits"""
    indices = np.arange(2 ** n)
    weights = np.zeros(2 ** n, dtype=np.int64)
    for bit in range(n):
        weights += (indices >> bit) & 1
    weights.setflags(write=False)
    return weights


def parity_probabilities(s: StateVector) -> Tuple[float, float]:
    """Probabilities of even and odd Hamming weight in the computational basis"""
    probabilities = np.abs(s.amplitudes) ** 2
    odd = float(probabilities[hamming_weights(s.num_qubits) % 2 == 1].sum())
    even = float(probabilities.sum()) - odd
    return even, odd


def reduced_density(rho: Union[DensityMatrix, StateVector], keep: Iterable[int]) -> DensityMatrix:
    """
    Partial trace over every qubit not in ``keep``.

    Kept qubits appear in increasing position order in the result.

    Args:
        rho: A density matrix or pure state
        keep: 1-based positions to keep

    Returns:
        The reduced density matrix
    """
    n = rho.num_qubits
    keep = sorted(keep)
    is_valid, error = validate_positions(keep, n)
    if not is_valid:
        raise ValueError(f"Invalid subsystem: {error}")
    axes = [k - 1 for k in keep]
    rest = [q for q in range(n) if q not in axes]
    if isinstance(rho, StateVector):
        tensor = np.transpose(rho.tensor(), axes + rest).reshape(2 ** len(axes), -1)
        return DensityMatrix(len(axes), tensor @ tensor.conj().T)
    tensor = rho.entries.reshape((2,) * (2 * n))
    width = n
    for q in reversed(rest):
        tensor = np.trace(tensor, axis1=q, axis2=q + width)
        width -= 1
    dim = 2 ** len(axes)
    return DensityMatrix(len(axes), tensor.reshape(dim, dim))


def fidelity(rho: DensityMatrix, psi: StateVector) -> float:
    """<psi|rho|psi>, clipped to [0, 1]"""
    if rho.num_qubits != psi.num_qubits:
        raise ValueError(
            f"Invalid fidelity arguments: {rho.num_qubits} qubits vs {psi.num_qubits} qubits"
        )
    value = np.real(np.vdot(psi.amplitudes, rho.entries @ psi.amplitudes))
    return float(min(1.0, max(0.0, value)))


def random_state(n: int, rng: np.random.Generator) -> StateVector:
    """Haar-random pure state from a complex Gaussian draw"""
    vector = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    return StateVector.from_vector(vector, n)


def bitstring(index: int, n: int) -> str:
    return format(index, f'0{n}b')
