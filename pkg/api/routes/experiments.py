"""
Endpoints for erasure experiments.
"""
import logging

from flask import request, jsonify, Blueprint

from qec_erasure.erasure_channel import ErasureModel, run_trials
from qec_erasure.validation import validate_simulation_request
from utils.utils import error_response, load_code_payload

logger = logging.getLogger(__name__)

# Create a Blueprint for the experiment routes
experiments_bp = Blueprint('experiments', __name__)


@experiments_bp.route('/simulate', methods=['POST'])
def simulate():
    """
    Encode random logical states, erase qubits and recover
    ---
    tags:
      - Experiments
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - code
            - model
            - erasure_size
            - trials
            - seed
          properties:
            code:
              description: Built-in or registered code name, or an inline code object
              example: "FourQubit_K1"
            model:
              type: string
              enum: [ResetToZero, RandomPauli, RandomUnitary, reset, pauli, unitary]
              example: "RandomUnitary"
            erasure_size:
              type: integer
              example: 1
            trials:
              type: integer
              example: 100
            seed:
              type: integer
              example: 42
    responses:
      200:
        description: Fidelity statistics; identical for identical requests
        schema:
          $ref: '#/definitions/TrialReport'
      400:
        description: Invalid input
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    is_valid, error = validate_simulation_request(data)
    if not is_valid:
        return error_response(error)

    try:
        name, code = load_code_payload(data['code'])
        model = ErasureModel.parse(data['model'])
        stats = run_trials(code, model, data['erasure_size'], data['trials'], data['seed'])
    except ValueError as e:
        logger.warning(f"Rejected simulate request: {e}")
        return error_response(str(e))
    return jsonify(stats.to_report(name, model, data['erasure_size'], data['seed']))
