"""
Input validation utilities for the QEC erasure toolkit

Every function returns ``(is_valid, error_message)``. Library constructors
turn a failed check into ``ValueError("Invalid <thing>: <reason>")``; the
command line and the HTTP service report the message as a usage error.
"""

from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

# Valid erasure model names and their short aliases
VALID_ERASURE_MODELS = {'ResetToZero', 'RandomPauli', 'RandomUnitary'}
ERASURE_MODEL_ALIASES = {
    'reset': 'ResetToZero',
    'pauli': 'RandomPauli',
    'unitary': 'RandomUnitary',
}

# Valid Knill-Laflamme modes
VALID_KL_MODES = {'erasure', 'general'}

# Valid operator bases
VALID_OPERATOR_BASES = {'projector', 'pauli'}

# Lengths accepted by the short-code falsification harness
FALSIFIABLE_LENGTHS = {2, 3}


def validate_num_qubits(n: Any, cap: Optional[int] = None) -> Tuple[bool, Optional[str]]:
    """
    Validate a qubit count

    Args:
        n: Number of qubits
        cap: Largest count allowed for dense simulation

    Returns:
        Tuple of (is_valid, error_message)
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        return False, "Number of qubits must be an integer"
    if n < 1:
        return False, "Number of qubits must be at least 1"
    if cap is not None and n > cap:
        return False, f"Dense simulation is capped at {cap} qubits, got {n}"
    return True, None


def validate_bitstring(bits: Any, length: Optional[int] = None) -> Tuple[bool, Optional[str]]:
    """Validate a 0/1 string, optionally of a fixed length"""
    if not isinstance(bits, str):
        return False, "Bitstring must be a string"
    if not bits or any(ch not in '01' for ch in bits):
        return False, f"Bitstring must contain only 0 and 1, got {bits!r}"
    if length is not None and len(bits) != length:
        return False, f"Bitstring {bits!r} must have length {length}"
    return True, None


def validate_terms(n: int, terms: Sequence[Tuple[str, complex]]) -> Tuple[bool, Optional[str]]:
    """
    Validate a ket list for make_state

    Args:
        n: Number of qubits
        terms: (bitstring, coefficient) pairs

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not terms:
        return False, "At least one term is required"
    for bits, coefficient in terms:
        is_valid, error = validate_bitstring(bits, n)
        if not is_valid:
            return False, error
        if not np.isfinite(complex(coefficient)):
            return False, f"Coefficient of {bits} is not finite"
    return True, None


def validate_positions(positions: Iterable[int], n: int, allow_empty: bool = False) -> Tuple[bool, Optional[str]]:
    """
    Validate 1-based qubit positions

    Args:
        positions: Qubit indices in [1..n]
        n: Number of qubits
        allow_empty: Whether an empty set is acceptable

    Returns:
        Tuple of (is_valid, error_message)
    """
    positions = list(positions)
    if not positions and not allow_empty:
        return False, "Position set cannot be empty"
    for position in positions:
        if isinstance(position, bool) or not isinstance(position, (int, np.integer)):
            return False, f"Position {position!r} must be an integer"
        if not 1 <= position <= n:
            return False, f"Position {position} out of range [1..{n}]"
    if len(set(positions)) != len(positions):
        return False, "Positions must be distinct"
    return True, None


def validate_local_matrix(matrix: Any) -> Tuple[bool, Optional[str]]:
    """Validate a single-qubit operator"""
    array = np.asarray(matrix)
    if array.shape != (2, 2):
        return False, f"Local operator must be 2x2, got shape {array.shape}"
    if not np.all(np.isfinite(array)):
        return False, "Local operator has non-finite entries"
    return True, None


def validate_erasure_model(name: Any) -> Tuple[bool, Optional[str]]:
    """Validate an erasure model name or alias"""
    if not isinstance(name, str) or not name:
        return False, "Empty erasure model"
    if name not in VALID_ERASURE_MODELS and name.lower() not in ERASURE_MODEL_ALIASES:
        expected = sorted(VALID_ERASURE_MODELS) + sorted(ERASURE_MODEL_ALIASES)
        return False, f"Invalid erasure model. Expected one of: {', '.join(expected)}"
    return True, None


def validate_kl_mode(mode: Any) -> Tuple[bool, Optional[str]]:
    """Validate a Knill-Laflamme mode"""
    if mode not in VALID_KL_MODES:
        return False, f"Invalid mode. Expected one of: {', '.join(sorted(VALID_KL_MODES))}"
    return True, None


def validate_operator_basis(basis: Any) -> Tuple[bool, Optional[str]]:
    """Validate an operator basis name"""
    if basis not in VALID_OPERATOR_BASES:
        return False, f"Invalid operator basis. Expected one of: {', '.join(sorted(VALID_OPERATOR_BASES))}"
    return True, None


def validate_bch_parameters(N: Any, b: Any, d_bch: Any) -> Tuple[bool, Optional[str]]:
    """
    Validate BCH construction parameters

    Args:
        N: Code length (odd)
        b: First consecutive root exponent
        d_bch: Designed distance (at least 2)

    Returns:
        Tuple of (is_valid, error_message)
    """
    for label, value in (('N', N), ('b', b), ('d_bch', d_bch)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            return False, f"{label} must be an integer"
    if N < 1:
        return False, "N must be positive"
    if N % 2 == 0:
        return False, f"N must be odd for binary cyclic codes, got {N}"
    if d_bch < 2:
        return False, f"d_bch must be at least 2, got {d_bch}"
    if d_bch > N:
        return False, f"d_bch must not exceed N={N}, got {d_bch}"
    return True, None


def validate_received_word(bits: Sequence[int], N: int) -> Tuple[bool, Optional[str]]:
    """Validate a received binary word of length N"""
    if len(bits) != N:
        return False, f"Received word must have length {N}, got {len(bits)}"
    if any(bit not in (0, 1) for bit in bits):
        return False, "Received word must be binary"
    return True, None


def validate_erasure_positions(erasures: Iterable[int], N: int) -> Tuple[bool, Optional[str]]:
    """Validate 0-based classical erasure positions"""
    erasures = list(erasures)
    for position in erasures:
        if isinstance(position, bool) or not isinstance(position, (int, np.integer)):
            return False, f"Erasure position {position!r} must be an integer"
        if not 0 <= position < N:
            return False, f"Erasure position {position} out of range [0..{N - 1}]"
    if len(set(erasures)) != len(erasures):
        return False, "Erasure positions must be distinct"
    return True, None


def validate_state_data(data: Any) -> Tuple[bool, Optional[str]]:
    """
    Validate a state file object ``{"n": ..., "terms": [[bits, [re, im]], ...]}``

    Args:
        data: Parsed JSON

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not isinstance(data, dict):
        return False, "State must be a JSON object"
    if 'n' not in data:
        return False, "Missing required field: n"
    if 'terms' not in data:
        return False, "Missing required field: terms"
    is_valid, error = validate_num_qubits(data['n'])
    if not is_valid:
        return False, error
    terms = data['terms']
    if not isinstance(terms, list) or not terms:
        return False, "Terms must be a non-empty array"
    for i, term in enumerate(terms):
        if not isinstance(term, (list, tuple)) or len(term) != 2:
            return False, f"Term at index {i} must be a [bitstring, [re, im]] pair"
        bits, value = term
        is_valid, error = validate_bitstring(bits, data['n'])
        if not is_valid:
            return False, f"Term at index {i}: {error}"
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            return False, f"Term at index {i}: amplitude must be [re, im]"
    return True, None


def validate_code_data(data: Any) -> Tuple[bool, Optional[str]]:
    """Validate a code file object ``{"n": ..., "k": ..., "basis": [...]}``"""
    if not isinstance(data, dict):
        return False, "Code must be a JSON object"
    for field in ('n', 'k', 'basis'):
        if field not in data:
            return False, f"Missing required field: {field}"
    basis = data['basis']
    if not isinstance(basis, list) or not basis:
        return False, "Basis must be a non-empty array"
    if isinstance(data['k'], bool) or not isinstance(data['k'], int) or data['k'] < 0:
        return False, "k must be a non-negative integer"
    if len(basis) != 2 ** data['k']:
        return False, f"Basis must contain 2^k = {2 ** data['k']} states, got {len(basis)}"
    for i, state in enumerate(basis):
        is_valid, error = validate_state_data(state)
        if not is_valid:
            return False, f"Invalid basis state at index {i}: {error}"
        if state['n'] != data['n']:
            return False, f"Basis state at index {i} has {state['n']} qubits, expected {data['n']}"
    return True, None


def validate_simulation_request(data: Dict[str, Any]) -> Tuple[bool, Optional[str]]:
    """
    Validate a simulate request (HTTP body or parsed CLI flags)

    Args:
        data: Dictionary with code, model, erasure_size, trials and seed

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not data:
        return False, "Empty request data"
    for field in ('code', 'model', 'erasure_size', 'trials', 'seed'):
        if field not in data:
            return False, f"Missing required field: {field}"
    is_valid, error = validate_erasure_model(data['model'])
    if not is_valid:
        return False, error
    for field in ('erasure_size', 'trials', 'seed'):
        value = data[field]
        if isinstance(value, bool) or not isinstance(value, int):
            return False, f"{field} must be an integer"
    if data['erasure_size'] < 1:
        return False, "erasure_size must be at least 1"
    if data['trials'] < 1:
        return False, "trials must be at least 1"
    if data['seed'] < 0:
        return False, "seed must be non-negative"
    return True, None


def validate_falsify_request(n: Any, trials: Any, seed: Any) -> Tuple[bool, Optional[str]]:
    """Validate short-code falsification parameters"""
    if n not in FALSIFIABLE_LENGTHS:
        return False, f"Falsification is defined for n in {sorted(FALSIFIABLE_LENGTHS)}, got {n}"
    for label, value in (('trials', trials), ('seed', seed)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            return False, f"{label} must be a non-negative integer"
    return True, None
