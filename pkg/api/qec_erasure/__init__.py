"""
QEC Erasure

A toolkit for quantum codes that correct erasures: errors at positions that
are known to the decoder.

Basic usage:
    ```python
    from qec_erasure import builtin_code, check_erasure_kl, check_general_kl

    code = builtin_code("FourQubit_K1")
    check_erasure_kl(code, t=1).passed   # True: one erasure is correctable
    check_general_kl(code, t=1).passed   # False: one unknown error is not
    ```

Quantum BCH codes:
    ```python
    from qec_erasure import bch_code, build_qbch, to_quantum_code

    classical = bch_code(7, b=1, d_bch=3)
    steane = build_qbch(classical)        # [[7,1,3]]
    dense = to_quantum_code(steane)
    ```
"""

import logging

from .settings import Settings, get_settings, reset_settings

# Configure logging
logger = logging.getLogger(__name__)
if not logger.handlers:
    handler = logging.StreamHandler()
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)
    logger.addHandler(handler)
logger.setLevel(get_settings().log_level)

__version__ = "1.0.0"

from .quantum_core import (  # noqa: E402
    DensityMatrix, LocalOperator, PauliString, StateVector, apply_operator, apply_operators,
    apply_pauli, basis_state, embed_local, fidelity, hadamard_all, make_state,
    parity_probabilities, reduced_density
)
from .code_analysis import (  # noqa: E402
    ConditionReport, ProductStateResult, QuantumCode, Witness, check_erasure_kl,
    check_general_kl, detect_factor, erasure_implies_general, falsify_short_codes,
    find_product_state, hadamard_dual_code, is_product_state, local_unitary_transform,
    one_error_operator_basis, pauli_error_basis, product_factors, shorten_code
)
from .erasure_channel import (  # noqa: E402
    ErasureEvent, ErasureModel, ParityDiagnosis, TrialStatistics, apply_erasure,
    builtin_code, encode, erase_and_recover, parity_diagnose, recover, run_trials
)
from .classical_bch import (  # noqa: E402
    BinaryPolynomial, CyclicCodeSpec, DecodeOutcome, FiniteField, bch_code, bch_defining_set,
    check_lemma7, cyclotomic_coset, decode_erasures_only, decode_errors_and_erasures,
    dual_code, dual_defining_set, encode_classical, generator_polynomial,
    min_distance_bruteforce, nearest_codeword_bruteforce
)
from .qbch import (  # noqa: E402
    CSSCode, InadmissibleCodeError, SparseCodeState, admissibility_report, admissible_bch_codes, build_css,
    build_qbch, coset_representatives, densify, qbch_parameters, qbch_states, to_quantum_code
)

__all__ = [
    # Configuration
    'Settings', 'get_settings', 'reset_settings',

    # Dense states and operators
    'StateVector', 'DensityMatrix', 'LocalOperator', 'PauliString', 'make_state',
    'basis_state', 'apply_operator', 'apply_operators', 'apply_pauli', 'embed_local',
    'hadamard_all', 'parity_probabilities', 'reduced_density', 'fidelity',

    # Code certification
    'QuantumCode', 'ConditionReport', 'Witness', 'ProductStateResult',
    'one_error_operator_basis', 'pauli_error_basis', 'check_erasure_kl', 'check_general_kl',
    'erasure_implies_general', 'find_product_state', 'is_product_state', 'product_factors',
    'detect_factor', 'shorten_code', 'local_unitary_transform', 'hadamard_dual_code',
    'falsify_short_codes',

    # Erasure channel
    'ErasureModel', 'ErasureEvent', 'TrialStatistics', 'ParityDiagnosis', 'builtin_code',
    'encode', 'apply_erasure', 'recover', 'erase_and_recover', 'parity_diagnose', 'run_trials',

    # Classical BCH
    'FiniteField', 'BinaryPolynomial', 'CyclicCodeSpec', 'DecodeOutcome', 'cyclotomic_coset',
    'bch_defining_set', 'generator_polynomial', 'dual_defining_set', 'check_lemma7',
    'bch_code', 'dual_code', 'encode_classical', 'decode_errors_and_erasures',
    'decode_erasures_only', 'nearest_codeword_bruteforce', 'min_distance_bruteforce',

    # Quantum BCH
    'CSSCode', 'SparseCodeState', 'InadmissibleCodeError', 'build_qbch', 'build_css',
    'coset_representatives', 'qbch_states', 'densify', 'qbch_parameters', 'to_quantum_code',
    'admissibility_report', 'admissible_bch_codes',

    '__version__',
]
