"""
Endpoints for registering and certifying quantum codes.
"""
import logging

from flask import request, jsonify, Blueprint

from qec_erasure.code_analysis import (
    check_erasure_kl, check_general_kl, falsify_short_codes, find_product_state
)
from qec_erasure.serialization import code_from_dict, code_to_dict, product_state_to_dict, state_from_dict
from qec_erasure.validation import (
    validate_falsify_request, validate_kl_mode, validate_operator_basis
)
from models.store import codes_store, register_code
from utils.utils import BUILTIN_CODES, error_response, load_code_payload

logger = logging.getLogger(__name__)

# Create a Blueprint for the code routes
codes_bp = Blueprint('codes', __name__)


@codes_bp.route('/', methods=['GET'])
def get_codes():
    """
    List the built-in and registered codes
    ---
    tags:
      - Codes
    responses:
      200:
        description: Names of the available codes
        schema:
          type: object
          properties:
            builtin:
              type: array
              items:
                type: string
              example: ["FourQubit_K1", "FourQubit_K2", "Steane7"]
            registered:
              type: array
              items:
                type: object
                properties:
                  name:
                    type: string
                  n:
                    type: integer
                  k:
                    type: integer
    """
    registered = [{'name': name, 'n': code.n, 'k': code.k} for name, code in sorted(codes_store.items())]
    return jsonify({'builtin': list(BUILTIN_CODES), 'registered': registered})


@codes_bp.route('/', methods=['POST'])
def add_code():
    """
    Register a code under its name
    ---
    tags:
      - Codes
    parameters:
      - name: body
        in: body
        required: true
        schema:
          $ref: '#/definitions/CodeFile'
    responses:
      201:
        description: The stored code
        schema:
          $ref: '#/definitions/CodeFile'
      400:
        description: Invalid code file or missing name
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json
    if not isinstance(data, dict):
        return error_response("Request body must be a code object")
    try:
        code = code_from_dict(data)
    except ValueError as e:
        return error_response(str(e))
    if not code.name:
        return error_response("Missing required field: name")
    if code.name.lower() in {name.lower() for name in BUILTIN_CODES}:
        return error_response(f"Code name {code.name} is reserved for a built-in code")

    register_code(code.name, code)
    logger.info(f"Registered code {code.name} with n={code.n}, k={code.k}")
    return jsonify(code_to_dict(code)), 201


@codes_bp.route('/kl-check', methods=['POST'])
def kl_check():
    """
    Check the erasure or general Knill-Laflamme conditions
    ---
    tags:
      - Codes
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - code
            - t
          properties:
            code:
              description: Built-in or registered code name, or an inline code object
              example: "FourQubit_K1"
            t:
              type: integer
              example: 1
            mode:
              type: string
              enum: [erasure, general]
              default: erasure
            basis:
              type: string
              enum: [projector, pauli]
              default: projector
            direct:
              type: boolean
              default: false
              description: Enumerate operator pairs instead of the 2t-erasure reduction
            tolerance:
              type: number
    responses:
      200:
        description: The check report; failing codes report passed false
        schema:
          $ref: '#/definitions/ConditionReport'
      400:
        description: Invalid input
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    if 'code' not in data or 't' not in data:
        return error_response("Missing required fields: code and t")

    mode = data.get('mode', 'erasure')
    basis = data.get('basis', 'projector')
    for is_valid, error in (validate_kl_mode(mode), validate_operator_basis(basis)):
        if not is_valid:
            return error_response(error)
    t = data['t']
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        return error_response(f"t must be a non-negative integer, got {t!r}")

    try:
        name, code = load_code_payload(data['code'])
        if mode == 'erasure':
            report = check_erasure_kl(code, t, basis=basis, tolerance=data.get('tolerance'))
        else:
            report = check_general_kl(code, t, direct=bool(data.get('direct', False)),
                                      tolerance=data.get('tolerance'))
    except ValueError as e:
        return error_response(str(e))

    document = {'code': name, 'n': code.n, 'k': code.k, 't': t, 'mode': mode}
    document.update(report.to_dict())
    return jsonify(document)


@codes_bp.route('/product-state', methods=['POST'])
def product_state():
    """
    Find a product state in the span of two 2-qubit states
    ---
    tags:
      - Codes
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - b1
            - b2
          properties:
            b1:
              $ref: '#/definitions/StateFile'
            b2:
              $ref: '#/definitions/StateFile'
    responses:
      200:
        description: The coefficients and the resulting product state
      400:
        description: Invalid or dependent states
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    if 'b1' not in data or 'b2' not in data:
        return error_response("Missing required fields: b1 and b2")
    try:
        result = find_product_state(state_from_dict(data['b1']), state_from_dict(data['b2']))
    except ValueError as e:
        return error_response(str(e))
    return jsonify(product_state_to_dict(result))


@codes_bp.route('/falsify', methods=['POST'])
def falsify():
    """
    Count random one-qubit codes on 2 or 3 qubits that correct one erasure
    ---
    tags:
      - Codes
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - n
          properties:
            n:
              type: integer
              enum: [2, 3]
            trials:
              type: integer
              default: 1000
            seed:
              type: integer
              default: 0
    responses:
      200:
        description: Number of passing trials, expected to be zero
        schema:
          type: object
          properties:
            n:
              type: integer
            trials:
              type: integer
            seed:
              type: integer
            passes:
              type: integer
      400:
        description: Invalid input
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    n, trials, seed = data.get('n'), data.get('trials', 1000), data.get('seed', 0)
    is_valid, error = validate_falsify_request(n, trials, seed)
    if not is_valid:
        return error_response(error)

    passes = falsify_short_codes(n, trials, seed, tolerance=data.get('tolerance'))
    return jsonify({'n': n, 'trials': trials, 'seed': seed, 'passes': passes})
