"""
Erasure channel simulation

An erasure hits known positions: the qubits there are reset, or hit by a
random Pauli or a random unitary, and the decoder is told where. Recovery
projects onto the error subspaces spanned by Paulis on the erased positions
and undoes the Pauli of the branch that fired.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.stats import unitary_group

from .code_analysis import QuantumCode
from .quantum_core import (
    PAULI_MATRICES, DensityMatrix, StateVector, apply_local_batch, fidelity,
    hadamard_all, ket_bra, make_state, parity_probabilities, random_state
)
from .settings import get_settings
from .type_defs import BuiltinCodeName, ErasureModelAlias, ErasureModelName, TrialReportDict
from .validation import (
    ERASURE_MODEL_ALIASES, validate_erasure_model, validate_positions
)

logger = logging.getLogger(__name__)

RESET_KRAUS: Tuple[np.ndarray, np.ndarray] = (ket_bra(0, 0), ket_bra(0, 1))

# singular values below this mark a Pauli branch already covered by earlier ones
SUBSPACE_OVERLAP_THRESHOLD = 1e-9

_FOUR_QUBIT_TERMS: Dict[str, Tuple[Tuple[str, ...], ...]] = {
    'FourQubit_K1': (('0000', '1111'), ('1001', '0110')),
    'FourQubit_K2': (('0000', '1111'), ('1001', '0110'), ('1100', '0011'), ('1010', '0101')),
}


@dataclass(frozen=True)
class ErasureModel:
    """What happens to an erased qubit"""

    kind: ErasureModelName

    def __post_init__(self):
        is_valid, error = validate_erasure_model(self.kind)
        if not is_valid:
            raise ValueError(error)
        object.__setattr__(self, 'kind', ERASURE_MODEL_ALIASES.get(self.kind.lower(), self.kind))

    @classmethod
    def parse(cls, name: Union[ErasureModelName, ErasureModelAlias]) -> 'ErasureModel':
        """Accepts ResetToZero, RandomPauli, RandomUnitary or the aliases reset, pauli, unitary"""
        return cls(name)

    @property
    def is_random(self) -> bool:
        return self.kind != 'ResetToZero'


@dataclass(frozen=True)
class ErasureEvent:
    """Announced erasure locations on an n-qubit register"""

    num_qubits: int
    positions: Tuple[int, ...]

    def __post_init__(self):
        positions = tuple(sorted(self.positions))
        is_valid, error = validate_positions(positions, self.num_qubits)
        if not is_valid:
            raise ValueError(f"Invalid erasure event: {error}")
        object.__setattr__(self, 'positions', positions)

    @classmethod
    def random(cls, n: int, size: int, rng: np.random.Generator) -> 'ErasureEvent':
        """Uniformly random set of ``size`` distinct positions"""
        if not 1 <= size <= n:
            raise ValueError(f"Invalid erasure size: {size} must lie in [1..{n}]")
        positions = rng.choice(np.arange(1, n + 1), size=size, replace=False)
        return cls(n, tuple(int(p) for p in positions))

    @property
    def size(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class TrialStatistics:
    trials: int
    mean_fidelity: float
    min_fidelity: float
    failures: int

    def to_report(self, code: str, model: ErasureModel, erasure_size: int, seed: int) -> TrialReportDict:
        """Experiment report with a fixed key order"""
        return {
            'code': code,
            'model': model.kind,
            'erasure_size': erasure_size,
            'trials': self.trials,
            'mean_fidelity': self.mean_fidelity,
            'min_fidelity': self.min_fidelity,
            'failures': self.failures,
            'seed': seed,
        }


@dataclass(frozen=True)
class ParityDiagnosis:
    """Odd-parity probabilities in the computational and the Hadamard basis"""

    computational_odd: float
    hadamard_odd: float

    @property
    def bit_flip_detected(self) -> bool:
        return self.computational_odd > get_settings().condition_tolerance

    @property
    def phase_flip_detected(self) -> bool:
        return self.hadamard_odd > get_settings().condition_tolerance


def _cat(n: int, strings: Sequence[str]) -> StateVector:
    return make_state(n, [(bits, 1.0) for bits in strings])


def builtin_code(name: BuiltinCodeName) -> QuantumCode:
    """
    Codes shipped with the toolkit.

    FourQubit_K1 is the four-qubit one-erasure code, FourQubit_K2 its
    extension to two logical qubits and Steane7 the [[7,1,3]] code built
    from the [7,4,3] BCH code.
    """
    if name in _FOUR_QUBIT_TERMS:
        states = [_cat(4, strings) for strings in _FOUR_QUBIT_TERMS[name]]
        return QuantumCode.from_states(states, name)
    if name == 'Steane7':
        from .qbch import steane_code
        return steane_code()
    raise ValueError(
        f"Invalid code name: {name}. Expected one of: FourQubit_K1, FourQubit_K2, Steane7"
    )


def encode(code: QuantumCode, logical: StateVector) -> StateVector:
    """Map logical |j> to codeword j, extended linearly"""
    if logical.num_qubits != code.k:
        raise ValueError(
            f"Invalid logical state: {logical.num_qubits} qubits, code encodes {code.k}"
        )
    return StateVector(code.n, code.matrix @ logical.amplitudes)


def _conjugate(entries: np.ndarray, n: int, position: int, kraus: np.ndarray) -> np.ndarray:
    """K rho K^dagger with K acting on one qubit"""
    left = apply_local_batch(entries.T, n, position, kraus).T
    return apply_local_batch(left.conj(), n, position, kraus).conj()


def _density_entries(state: Union[StateVector, DensityMatrix]) -> np.ndarray:
    if isinstance(state, StateVector):
        return np.outer(state.amplitudes, state.amplitudes.conj())
    return np.array(state.entries)


def _hermitian(entries: np.ndarray) -> np.ndarray:
    entries = 0.5 * (entries + entries.conj().T)
    return entries / np.trace(entries).real


def apply_erasure(state: Union[StateVector, DensityMatrix], event: ErasureEvent,
                  model: ErasureModel, seed: int) -> DensityMatrix:
    """
    Erase the qubits at the event's positions.

    ResetToZero is the exact channel with Kraus operators |0><0| and |0><1|
    on each position. RandomPauli and RandomUnitary draw one operator per
    position from ``default_rng(seed)``.
    """
    n = state.num_qubits
    if event.num_qubits != n:
        raise ValueError(f"Invalid erasure event: built for {event.num_qubits} qubits, state has {n}")
    entries = _density_entries(state)
    rng = np.random.default_rng(seed)
    for position in event.positions:
        if model.kind == 'ResetToZero':
            entries = sum(_conjugate(entries, n, position, kraus) for kraus in RESET_KRAUS)
        elif model.kind == 'RandomPauli':
            letter = 'IXYZ'[int(rng.integers(4))]
            entries = _conjugate(entries, n, position, PAULI_MATRICES[letter])
        else:
            unitary = unitary_group.rvs(2, random_state=rng)
            entries = _conjugate(entries, n, position, unitary)
    return DensityMatrix(n, _hermitian(entries))


def _pauli_images(basis: np.ndarray, n: int, positions: Sequence[int], word: Sequence[str]) -> np.ndarray:
    rows = basis.T
    for position, letter in zip(positions, word):
        if letter != 'I':
            rows = apply_local_batch(rows, n, position, PAULI_MATRICES[letter])
    return rows.T


def recovery_operators(code: QuantumCode, event: ErasureEvent) -> List[np.ndarray]:
    """
    Kraus operators of the recovery for erasures at the event's positions.

    Pauli strings on the erased positions are visited in I, X, Y, Z order,
    identity first. Each contributes the part of its error subspace
    ``P V`` orthogonal to the subspaces already accepted; a branch with
    nothing new is dropped. On the new piece ``U S W`` the recovery maps
    ``U`` back to the codespace by ``V (U W)^dagger``.
    """
    V = code.matrix
    accepted = np.zeros((V.shape[0], 0), dtype=np.complex128)
    operators = []
    for word in itertools.product('IXYZ', repeat=event.size):
        images = _pauli_images(V, code.n, event.positions, word)
        images = images - accepted @ (accepted.conj().T @ images)
        u, s, wh = np.linalg.svd(images, full_matrices=False)
        keep = s ** 2 > SUBSPACE_OVERLAP_THRESHOLD
        if not np.any(keep):
            continue
        U = u[:, keep]
        operators.append(V @ (U @ wh[keep]).conj().T)
        accepted = np.hstack([accepted, U])
    logger.debug(f"Recovery for positions {event.positions} uses {len(operators)} branches")
    return operators


def recover(rho: DensityMatrix, code: QuantumCode, event: ErasureEvent) -> DensityMatrix:
    """
    Syndrome-projection recovery for known erasure positions.

    Probability that falls outside every error subspace is mapped to the
    first codeword, so the map is trace preserving.
    """
    if rho.num_qubits != code.n:
        raise ValueError(f"Invalid state: {rho.num_qubits} qubits, code has {code.n}")
    entries = np.zeros_like(rho.entries)
    for R in recovery_operators(code, event):
        entries = entries + R @ rho.entries @ R.conj().T
    leftover = max(0.0, 1.0 - np.trace(entries).real)
    if leftover > get_settings().condition_tolerance:
        logger.debug(f"Recovery left {leftover:.3e} of the state outside the error subspaces")
    first = code.basis[0].amplitudes
    entries = entries + leftover * np.outer(first, first.conj())
    return DensityMatrix(code.n, _hermitian(entries))


def erase_and_recover(code: QuantumCode, logical: StateVector, event: ErasureEvent,
                      model: ErasureModel, seed: int) -> float:
    """Encode, erase, recover and return the fidelity with the encoded state"""
    encoded = encode(code, logical)
    recovered = recover(apply_erasure(encoded, event, model, seed), code, event)
    return fidelity(recovered, encoded)


def parity_diagnose(state: StateVector) -> ParityDiagnosis:
    """
    Parity checks in both bases.

    Codewords of the four-qubit code have even weight in the computational
    basis and in the Hadamard basis; odd parity in either basis signals an
    error.
    """
    _, odd = parity_probabilities(state)
    _, hadamard_odd = parity_probabilities(hadamard_all(state))
    return ParityDiagnosis(odd, hadamard_odd)


def run_trials(code: QuantumCode, model: ErasureModel, erasure_size: int, trials: int,
               master_seed: int) -> TrialStatistics:
    """
    Monte Carlo fidelity experiment.

    Trial i draws its logical state, erasure positions and model seed from
    ``default_rng([master_seed, i])``, so results are independent of
    evaluation order and identical across runs.
    """
    if code.k < 1:
        raise ValueError(f"Invalid code: {code.name or 'code'} encodes no logical qubits (k={code.k})")
    if not 1 <= erasure_size <= code.n:
        raise ValueError(f"Invalid erasure size: {erasure_size} must lie in [1..{code.n}]")
    if trials < 1:
        raise ValueError(f"Invalid trial count: {trials}")
    threshold = 1.0 - get_settings().fidelity_failure_threshold
    logger.info(
        f"Running {trials} trials of {model.kind} erasures of size {erasure_size} "
        f"on {code.name or 'code'} (seed {master_seed})"
    )
    fidelities = np.empty(trials)
    for trial in range(trials):
        rng = np.random.default_rng([master_seed, trial])
        logical = random_state(code.k, rng)
        event = ErasureEvent.random(code.n, erasure_size, rng)
        model_seed = int(rng.integers(2 ** 63 - 1))
        fidelities[trial] = erase_and_recover(code, logical, event, model, model_seed)
    failures = int(np.count_nonzero(fidelities < threshold))
    stats = TrialStatistics(trials, float(np.mean(fidelities)), float(np.min(fidelities)), failures)
    if failures:
        logger.warning(f"{failures} of {trials} trials fell below fidelity {threshold}")
    logger.info(f"Mean fidelity {stats.mean_fidelity:.12f}, minimum {stats.min_fidelity:.12f}")
    return stats
