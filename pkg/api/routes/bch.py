"""
Endpoints for classical and quantum BCH codes.
"""
import logging

from flask import request, jsonify, Blueprint

from qec_erasure.classical_bch import decode_erasures_only, decode_errors_and_erasures
from qec_erasure.qbch import admissibility_report, admissible_bch_codes, build_qbch, describe_qbch
from qec_erasure.validation import (
    validate_bch_parameters, validate_erasure_positions, validate_received_word
)
from utils.utils import error_response, load_bch_payload

logger = logging.getLogger(__name__)

# Create a Blueprint for the BCH routes
bch_bp = Blueprint('bch', __name__)


@bch_bp.route('/', methods=['POST'])
def describe_bch():
    """
    Build a BCH code and optionally its quantum BCH code
    ---
    tags:
      - BCH
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - N
            - d_bch
          properties:
            N:
              type: integer
              example: 15
            b:
              type: integer
              default: 1
            d_bch:
              type: integer
              example: 5
            check_lemma7:
              type: boolean
              default: false
              description: Report whether the code contains its dual
            qbch:
              type: boolean
              default: false
              description: Build the quantum code when the dual is contained
    responses:
      200:
        description: The code description, with a lemma7 section when requested
        schema:
          $ref: '#/definitions/BchDescription'
      400:
        description: Invalid parameters
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    try:
        classical = load_bch_payload(data)
    except ValueError as e:
        return error_response(str(e))

    document = dict(classical.describe())
    want_quantum = bool(data.get('qbch', False))
    if data.get('check_lemma7') or want_quantum:
        document['lemma7'], _ = admissibility_report(classical.defining_set, classical.N)
    if want_quantum and document['lemma7']['admissible']:
        try:
            lemma7 = document['lemma7']
            document = describe_qbch(build_qbch(classical))
            document['lemma7'] = lemma7
        except ValueError as e:
            return error_response(str(e))
    return jsonify(document)


@bch_bp.route('/admissible', methods=['POST'])
def admissible():
    """
    List the designed distances whose BCH code contains its dual
    ---
    tags:
      - BCH
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - N
          properties:
            N:
              type: integer
              example: 15
            b:
              type: integer
              default: 1
    responses:
      200:
        description: Admissible designed distances with their quantum parameters
      400:
        description: Invalid parameters
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    N, b = data.get('N'), data.get('b', 1)
    is_valid, error = validate_bch_parameters(N, b, 2)
    if not is_valid:
        return error_response(error)
    try:
        entries = [
            {'d_bch': e.d_bch, 'N': e.N, 'K': e.K, 'd': e.d, 'distance_source': e.distance_source}
            for e in admissible_bch_codes(N, b)
        ]
    except ValueError as e:
        return error_response(str(e))
    return jsonify({'N': N, 'b': b, 'admissible': entries})


@bch_bp.route('/decode', methods=['POST'])
def decode():
    """
    Decode a received word with known erasure positions
    ---
    tags:
      - BCH
    parameters:
      - name: body
        in: body
        required: true
        schema:
          type: object
          required:
            - received
          properties:
            N:
              type: integer
              example: 7
            b:
              type: integer
              default: 1
            d_bch:
              type: integer
              example: 3
            code:
              $ref: '#/definitions/BchDescription'
            received:
              type: string
              description: Received bits, position 0 first
              example: "1111000"
            erasures:
              type: array
              items:
                type: integer
              description: 0-based erased positions
              example: [2]
            erasures_only:
              type: boolean
              default: false
    responses:
      200:
        description: The decode outcome; uncorrectable words report status Failure
        schema:
          $ref: '#/definitions/DecodeOutcome'
      400:
        description: Invalid input
        schema:
          $ref: '#/definitions/Error'
    """
    data = request.json or {}
    try:
        code = load_bch_payload(data)
    except ValueError as e:
        return error_response(str(e))

    received = data.get('received')
    if not isinstance(received, str) or set(received) - {'0', '1'}:
        return error_response("received must be a string of 0s and 1s")
    bits = [int(bit) for bit in received]
    erasures = data.get('erasures', [])
    if not isinstance(erasures, list):
        return error_response("erasures must be a list of positions")
    for is_valid, error in (validate_received_word(bits, code.N), validate_erasure_positions(erasures, code.N)):
        if not is_valid:
            return error_response(error)

    decoder = decode_erasures_only if data.get('erasures_only') else decode_errors_and_erasures
    outcome = decoder(code, bits, erasures)
    logger.info(f"Decoded a length-{code.N} word with {len(erasures)} erasures: {outcome.status}")
    return jsonify(outcome.to_dict())
