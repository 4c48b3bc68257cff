"""
Utility functions for the QEC Erasure API.
"""
from typing import Any, Dict, Optional, Tuple

from flask import jsonify

from qec_erasure.classical_bch import CyclicCodeSpec, bch_code
from qec_erasure.code_analysis import QuantumCode
from qec_erasure.erasure_channel import builtin_code
from qec_erasure.serialization import code_from_dict, cyclic_code_from_dict
from qec_erasure.type_defs import ApiErrorResponse
from qec_erasure.validation import validate_bch_parameters
from models.store import codes_store

BUILTIN_CODES = ('FourQubit_K1', 'FourQubit_K2', 'Steane7')


def error_response(message: str, status: int = 400, details: Optional[Dict[str, Any]] = None):
    """JSON error body in the ApiErrorResponse shape"""
    body: ApiErrorResponse = {"error": message, "details": details}
    return jsonify(body), status


def load_code_payload(payload: Any) -> Tuple[str, QuantumCode]:
    """
    Resolve the ``code`` field of a request.

    Args:
        payload: A built-in name (case-insensitive), the name of a registered
                 code, or an inline code file object

    Returns:
        (name, code)

    Raises:
        ValueError: If the code is unknown or malformed
    """
    if isinstance(payload, dict):
        code = code_from_dict(payload)
        return code.name or "inline", code
    if not isinstance(payload, str) or not payload:
        raise ValueError("code must be a code name or a code object")
    if payload in codes_store:
        return payload, codes_store[payload]
    canonical = {name.lower(): name for name in BUILTIN_CODES}.get(payload.lower())
    if canonical is None:
        raise ValueError(f"Unknown code: {payload}")
    return canonical, builtin_code(canonical)


def load_bch_payload(data: Dict[str, Any]) -> CyclicCodeSpec:
    """A BCH code from ``N``/``b``/``d_bch`` fields or a ``code`` description object"""
    if isinstance(data.get('code'), dict):
        return cyclic_code_from_dict(data['code'])
    for field in ('N', 'd_bch'):
        if field not in data:
            raise ValueError(f"Missing required field: {field}")
    N, b, d_bch = data['N'], data.get('b', 1), data['d_bch']
    is_valid, error = validate_bch_parameters(N, b, d_bch)
    if not is_valid:
        raise ValueError(error)
    return bch_code(N, b, d_bch)
