"""
Documentation routes for the QEC Erasure API.
"""
from flask import jsonify, Blueprint, send_from_directory, current_app
import os

from qec_erasure import __version__
from qec_erasure.validation import ERASURE_MODEL_ALIASES, VALID_ERASURE_MODELS
from utils.utils import BUILTIN_CODES

# Create a Blueprint for the documentation routes
docs_bp = Blueprint('docs', __name__)

@docs_bp.route('/', methods=['GET'])
def api_info():
    """
    QEC Erasure API overview
    ---
    tags:
      - Documentation
    description: |
      Service name and version, the built-in codes, the erasure models and a
      map of the available endpoints.
    produces:
      - application/json
    responses:
      200:
        description: Service information
        schema:
          type: object
          properties:
            name:
              type: string
              example: "QEC Erasure API"
            version:
              type: string
              example: "1.0.0"
            builtin_codes:
              type: array
              items:
                type: string
            erasure_models:
              type: object
            endpoints:
              type: object
    """
    return jsonify({
        "name": "QEC Erasure API",
        "version": __version__,
        "description": "Certify quantum codes against erasures, build quantum BCH codes and simulate erasure recovery",
        "builtin_codes": list(BUILTIN_CODES),
        "erasure_models": {
            "names": sorted(VALID_ERASURE_MODELS),
            "aliases": ERASURE_MODEL_ALIASES,
        },
        "conventions": {
            "quantum_bitstrings": "qubit 1 is the leftmost character",
            "classical_words": "coefficients low-to-high, position 0 first",
            "failures": "a failed check is a 200 response with passed false or status Failure",
        },
        "endpoints": {
            "GET /codes/": "List built-in and registered codes",
            "POST /codes/": "Register a code file under its name",
            "POST /codes/kl-check": "Erasure or general Knill-Laflamme check",
            "POST /codes/product-state": "Product state in the span of two 2-qubit states",
            "POST /codes/falsify": "Random search for 2- and 3-qubit erasure codes",
            "POST /bch/": "BCH code description, dual containment and quantum parameters",
            "POST /bch/admissible": "Designed distances giving quantum BCH codes",
            "POST /bch/decode": "Errors-and-erasures or erasures-only decoding",
            "POST /experiments/simulate": "Encode, erase and recover experiment",
            "GET /apidocs/": "Swagger UI",
            "GET /sphinx-docs/": "Sphinx documentation",
        },
    })

@docs_bp.route('/sphinx-docs/')
@docs_bp.route('/sphinx-docs/<path:path>')
def sphinx_docs(path='index.html'):
    """
    Serve Sphinx documentation
    ---
    tags:
      - Documentation
    produces:
      - text/html
    parameters:
      - name: path
        in: path
        type: string
        required: false
        default: index.html
        description: Path to the documentation file
    responses:
      200:
        description: HTML documentation
      404:
        description: Documentation file not found
    """
    docs_dir = os.path.join(current_app.root_path, 'docs', '_build', 'html')
    return send_from_directory(docs_dir, path)
