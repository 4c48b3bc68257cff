"""
Type definitions for the QEC erasure toolkit

This module provides the Literal names and TypedDict shapes shared by the
library, the command line and the HTTP service, so the JSON that leaves one
layer is checked against the same vocabulary the next layer reads.
"""

from typing import Dict, List, Optional, Tuple, Union

from typing_extensions import Literal, TypedDict

# Erasure channel models (short aliases are accepted on input)
ErasureModelName = Literal['ResetToZero', 'RandomPauli', 'RandomUnitary']
ErasureModelAlias = Literal['reset', 'pauli', 'unitary']

# Codes shipped with the toolkit
BuiltinCodeName = Literal['FourQubit_K1', 'FourQubit_K2', 'Steane7']

# Which Knill-Laflamme family to evaluate
KLMode = Literal['erasure', 'general']

# Local operator basis used on the erased positions
OperatorBasisName = Literal['projector', 'pauli']

# Outcome of classical errors-and-erasures decoding
DecodeStatusName = Literal['Corrected', 'Failure']

# Where the reported quantum distance came from
DistanceSource = Literal['true', 'designed']

# Output format of the command line
OutputFormat = Literal['json', 'table']

# Complex numbers travel as [re, im]
ComplexPair = Tuple[float, float]


class StateDict(TypedDict):
    """State file: normalized amplitudes keyed by bitstring"""
    n: int
    terms: List[Tuple[str, ComplexPair]]


class CodeDict(TypedDict, total=False):
    """Code file: an orthonormal list of codewords"""
    n: int
    k: int
    basis: List[StateDict]
    name: Optional[str]


class WitnessDict(TypedDict):
    """Operator and codeword pair that violated a condition"""
    positions: List[int]
    operator: str
    pair: Tuple[int, int]


class ConditionReportDict(TypedDict):
    """Serialized Knill-Laflamme verdict"""
    passed: bool
    worst_expectation_gap: float
    worst_off_diagonal: float
    witness: Optional[WitnessDict]


class TrialReportDict(TypedDict):
    """Monte Carlo erasure experiment report"""
    code: str
    model: ErasureModelName
    erasure_size: int
    trials: int
    mean_fidelity: float
    min_fidelity: float
    failures: int
    seed: int


class BchDescriptionDict(TypedDict, total=False):
    """Cyclic/BCH code description (generator as low-to-high bit string)"""
    N: int
    b: int
    d_bch: int
    m: int
    primitive_poly: str
    defining_set: List[int]
    generator: str
    K: int


class QuantumDescriptionDict(TypedDict):
    """Quantum parameters of a QBCH code"""
    N: int
    K: int
    d: int
    distance_source: DistanceSource
    designed_distance: int
    coset_reps: List[str]


class DecodeOutcomeDict(TypedDict):
    """Serialized classical decoding outcome"""
    status: DecodeStatusName
    codeword: str
    error_positions: List[int]
    erasure_values: Dict[str, int]


class ApiErrorResponse(TypedDict):
    """Error response format for API endpoints"""
    error: str
    details: Optional[Dict[str, Union[str, int, float]]]
