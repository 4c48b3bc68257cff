"""
Quantum BCH codes

A binary code C whose dual is contained in it gives a CSS code whose
codewords are uniform superpositions over the cosets v + C^perp, v in
C / C^perp. For cyclic codes containment is read off the defining set: no
element may have its negative in it.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from .classical_bch import (
    GF2, CyclicCodeSpec, bch_code, bch_defining_set, dual_code, gf2_rank,
    enumerate_row_space, lemma7_violation, min_weight, row_space_contains
)
from .code_analysis import QuantumCode
from .quantum_core import StateVector
from .settings import get_settings
from .type_defs import DistanceSource, QuantumDescriptionDict

logger = logging.getLogger(__name__)


class InadmissibleCodeError(ValueError):
    """The dual of the classical code is not contained in it"""

    def __init__(self, pair: Tuple[int, int], N: int):
        self.pair = pair
        self.N = N
        super().__init__(
            f"Inadmissible code: cosets ({pair[0]},{pair[1]}) are negatives of each other mod {N}, "
            f"so the dual is not contained in the code"
        )


def _bits(vector) -> str:
    return ''.join(str(int(bit)) for bit in vector)


def _reduced_basis(generator: np.ndarray) -> np.ndarray:
    """RREF over GF(2) with zero rows removed"""
    generator = np.asarray(generator, dtype=int)
    if generator.size == 0:
        return generator.reshape(0, generator.shape[-1] if generator.ndim == 2 else 0)
    reduced = np.array(GF2(generator % 2).row_reduce(), dtype=np.uint8)
    return reduced[np.any(reduced != 0, axis=1)]


def coset_representatives(C: np.ndarray, C_dual: np.ndarray) -> List[np.ndarray]:
    """
    One representative per coset of C_dual in C.

    Each representative is the lexicographically smallest member of its
    coset (bit 0 first); the list is sorted, so the zero vector comes first.

    Args:
        C: Generator matrix of the larger code
        C_dual: Generator matrix of the subcode, contained in C

    Raises:
        ValueError: If C_dual is not contained in C or there are too many cosets
    """
    C = np.asarray(C, dtype=np.uint8)
    C_dual = np.asarray(C_dual, dtype=np.uint8).reshape(-1, C.shape[1])
    if not row_space_contains(C, C_dual):
        raise ValueError("Invalid coset space: the subcode is not contained in the code")
    R = _reduced_basis(C_dual)
    pivots = [int(np.argmax(row)) for row in R]
    reduced = []
    for row in _reduced_basis(C):
        row = row.copy()
        for pivot, r in zip(pivots, R):
            if row[pivot]:
                row ^= r
        reduced.append(row)
    T = _reduced_basis(np.array(reduced, dtype=np.uint8).reshape(-1, C.shape[1]))
    K = T.shape[0]
    cap = get_settings().max_enumerated_logical_qubits
    if K > cap:
        raise ValueError(f"Invalid code: {K} logical qubits exceed the coset enumeration cap {cap}")
    # combinations of T vanish on every pivot of R, which makes them coset minima
    representatives = [
        np.bitwise_xor.reduce(T[list(choice)], axis=0) if choice else np.zeros(C.shape[1], dtype=np.uint8)
        for size in range(K + 1)
        for choice in itertools.combinations(range(K), size)
    ]
    return sorted(representatives, key=_bits)


@dataclass(frozen=True)
class SparseCodeState:
    """Uniform superposition over a set of N-bit strings (string index 0 is qubit 1)"""

    N: int
    support: FrozenSet[str]

    def __post_init__(self):
        support = frozenset(self.support)
        if not support:
            raise ValueError("Invalid state: empty support")
        if any(len(bits) != self.N or set(bits) - {'0', '1'} for bits in support):
            raise ValueError(f"Invalid state: support strings must be {self.N}-bit binary strings")
        object.__setattr__(self, 'support', support)

    def densify(self) -> StateVector:
        return densify(self)


@dataclass(frozen=True, eq=False)
class CSSCode:
    """
    CSS code [[N, K, d]] from a code C1 and a subcode C2^perp.

    ``generator`` spans C1 and ``dual_generator`` spans C2^perp. For quantum
    BCH codes C1 = C2 = C and ``classical_code`` is C.
    """

    N: int
    K: int
    d: int
    generator: np.ndarray
    dual_generator: np.ndarray
    classical_code: Optional[CyclicCodeSpec] = None
    designed_distance: Optional[int] = None
    distance_source: DistanceSource = 'true'
    name: Optional[str] = field(default=None)

    @cached_property
    def coset_reps(self) -> List[np.ndarray]:
        return coset_representatives(self.generator, self.dual_generator)

    @property
    def parameters(self) -> Tuple[int, int, int]:
        return self.N, self.K, self.d

    def describe(self) -> QuantumDescriptionDict:
        return {
            'N': self.N,
            'K': self.K,
            'd': self.d,
            'distance_source': self.distance_source,
            'designed_distance': self.designed_distance if self.designed_distance is not None else self.d,
            'coset_reps': [_bits(v) for v in self.coset_reps],
        }

    def __str__(self) -> str:
        return f"[[{self.N},{self.K},{self.d}]]"


def _distance(generator: np.ndarray, designed: Optional[int]) -> Tuple[int, DistanceSource]:
    if generator.shape[0] <= get_settings().max_bruteforce_dimension:
        return min_weight(generator), 'true'
    if designed is None:
        raise ValueError(
            f"Invalid code: dimension {generator.shape[0]} is too large to compute the distance exhaustively"
        )
    return designed, 'designed'


def build_qbch(classical: CyclicCodeSpec) -> CSSCode:
    """
    Quantum BCH code from a classical code containing its dual.

    Raises:
        InadmissibleCodeError: If some i in the defining set has -i mod N in it too
    """
    violation = lemma7_violation(classical.defining_set, classical.N)
    if violation is not None:
        raise InadmissibleCodeError(violation, classical.N)
    dual = dual_code(classical)
    if not row_space_contains(classical.generator_matrix, dual.generator_matrix):
        raise ArithmeticError("dual code is not contained in an admissible code")
    K = 2 * classical.K - classical.N
    d, source = _distance(classical.generator_matrix, classical.d_bch)
    code = CSSCode(
        classical.N, K, d, classical.generator_matrix, dual.generator_matrix,
        classical, classical.d_bch, source,
    )
    logger.info(f"Built quantum BCH code {code} from the [{classical.N},{classical.K}] code ({source} distance)")
    return code


def build_css(C1: np.ndarray, C2: np.ndarray) -> CSSCode:
    """
    CSS code from generator matrices of C1 and C2 with C2^perp contained in C1.

    Returns:
        [[N, K1 - (N - K2), min(d1, d2)]]
    """
    C1 = _reduced_basis(C1)
    C2 = _reduced_basis(C2)
    N = C1.shape[1]
    if C2.shape[1] != N:
        raise ValueError(f"Invalid CSS pair: lengths {N} and {C2.shape[1]} differ")
    C2_perp = _reduced_basis(np.array(GF2(C2.astype(int)).null_space(), dtype=np.uint8).reshape(-1, N))
    if not row_space_contains(C1, C2_perp):
        raise ValueError("Invalid CSS pair: C2^perp is not contained in C1")
    K1, K2 = gf2_rank(C1), gf2_rank(C2)
    d1, _ = _distance(C1, None)
    d2, _ = _distance(C2, None)
    return CSSCode(N, K1 - (N - K2), min(d1, d2), C1, C2_perp)


def qbch_parameters(classical: CyclicCodeSpec) -> Tuple[int, int, int]:
    """[[N, 2 dim C - N, d(C)]]"""
    return build_qbch(classical).parameters


def qbch_states(code: CSSCode) -> List[SparseCodeState]:
    """One state per coset representative v, supported on v + C^perp"""
    subcode = enumerate_row_space(_reduced_basis(code.dual_generator))
    states = []
    for v in code.coset_reps:
        support = frozenset(_bits(word) for word in subcode ^ v)
        states.append(SparseCodeState(code.N, support))
    return states


def densify(state: SparseCodeState) -> StateVector:
    """Dense state with amplitude 1/sqrt(|support|) on each support string"""
    cap = get_settings().max_dense_qubits
    if state.N > cap:
        raise ValueError(f"Invalid state: {state.N} qubits exceed the dense simulation cap {cap}")
    vector = np.zeros(2 ** state.N, dtype=np.complex128)
    vector[[int(bits, 2) for bits in state.support]] = 1.0
    return StateVector.from_vector(vector, state.N)


def to_quantum_code(code: CSSCode, name: Optional[str] = None) -> QuantumCode:
    """Dense QuantumCode whose logical basis state j is coset state j"""
    states = [densify(state) for state in qbch_states(code)]
    return QuantumCode(code.N, code.K, tuple(states), name or code.name or str(code))


@lru_cache(maxsize=1)
def steane_code() -> QuantumCode:
    """[[7,1,3]] from the [7,4,3] BCH code"""
    return to_quantum_code(build_qbch(bch_code(7, 1, 3)), 'Steane7')


@dataclass(frozen=True)
class AdmissibleCode:
    d_bch: int
    N: int
    K: int
    d: int
    distance_source: DistanceSource


def admissible_bch_codes(N: int, b: int = 1) -> List[AdmissibleCode]:
    """Designed distances 2..N whose BCH code contains its dual, with the resulting [[N,K,d]]"""
    admissible = []
    for d_bch in range(2, N + 1):
        if lemma7_violation(bch_defining_set(N, b, d_bch), N) is not None:
            continue
        code = build_qbch(bch_code(N, b, d_bch))
        admissible.append(AdmissibleCode(d_bch, code.N, code.K, code.d, code.distance_source))
    logger.info(f"Found {len(admissible)} admissible designed distances for N={N}")
    return admissible


def describe_qbch(code: CSSCode) -> dict:
    """Classical description with the quantum parameters under ``"quantum"``"""
    description = dict(code.classical_code.describe()) if code.classical_code is not None else {'N': code.N}
    description['quantum'] = code.describe()
    return description


def admissibility_report(defining_set, N: int) -> Tuple[dict, str]:
    """
    Dual-containment check as a document plus a one-line message.

    The message names the first offending coset pair, e.g. ``fails: cosets (3,12)``.
    """
    violation = lemma7_violation(defining_set, N)
    if violation is None:
        return {'admissible': True, 'cosets': None}, "passes: dual is contained in the code"
    message = f"fails: cosets ({violation[0]},{violation[1]})"
    return {'admissible': False, 'cosets': list(violation), 'message': message}, message
