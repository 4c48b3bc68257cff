"""
Swagger configuration for the QEC Erasure API.
"""

def get_swagger_template():
    """
    Returns the Swagger template for the API.
    """
    return {
        "swagger": "2.0",
        "info": {
            "title": "QEC Erasure API",
            "description": """
            # Quantum Erasure Code Toolkit

            ## Overview
            This API certifies small quantum codes against erasures, builds classical and quantum BCH codes,
            decodes classical words with known erasure positions and runs erasure experiments on dense
            simulations of encoded states.

            ## Core Concepts
            - **Erasure**: an error whose position is known to the decoder
            - **Knill-Laflamme check**: the erasure or general form of the correctability conditions
            - **BCH code**: a cyclic code whose defining set contains a run of consecutive exponents
            - **Quantum BCH code**: the CSS code of a BCH code that contains its dual

            ## Conventions
            - Quantum bitstrings are written with qubit 1 as the leftmost character
            - Classical words are written low-to-high, so position 0 is the first character
            - Failed checks are successful responses with `passed: false`; malformed input returns 400

            ## Documentation
            Full documentation lives at [Sphinx Documentation](/sphinx-docs/).
            """,
            "version": "1.0.0",
            "license": {
                "name": "MIT",
                "url": "https://opensource.org/licenses/MIT"
            }
        },
        "tags": [
            {
                "name": "Codes",
                "description": "Register quantum codes and certify them against erasures"
            },
            {
                "name": "BCH",
                "description": "Classical BCH codes, quantum BCH codes and erasure decoding"
            },
            {
                "name": "Experiments",
                "description": "Encode, erase and recover simulations"
            },
            {
                "name": "Documentation",
                "description": "API documentation and guidelines"
            }
        ],
        "definitions": {
            "StateFile": {
                "type": "object",
                "description": "A pure state as a list of nonzero amplitudes",
                "required": ["n", "terms"],
                "properties": {
                    "n": {
                        "type": "integer",
                        "description": "Number of qubits",
                        "example": 2
                    },
                    "terms": {
                        "type": "array",
                        "description": "Pairs of bitstring and [real, imag] amplitude",
                        "items": {
                            "type": "array"
                        },
                        "example": [["00", [0.7071067811865476, 0.0]], ["11", [0.7071067811865476, 0.0]]]
                    }
                }
            },
            "CodeFile": {
                "type": "object",
                "description": "A quantum code as an orthonormal list of logical basis states",
                "required": ["n", "k", "basis"],
                "properties": {
                    "n": {
                        "type": "integer",
                        "description": "Number of physical qubits"
                    },
                    "k": {
                        "type": "integer",
                        "description": "Number of logical qubits, so the basis holds 2^k states"
                    },
                    "basis": {
                        "type": "array",
                        "items": {
                            "$ref": "#/definitions/StateFile"
                        }
                    },
                    "name": {
                        "type": "string",
                        "description": "Optional code name used as the registry key"
                    }
                }
            },
            "Witness": {
                "type": "object",
                "description": "The positions, operator and codeword pair behind the largest violation",
                "properties": {
                    "positions": {
                        "type": "array",
                        "items": {
                            "type": "integer"
                        }
                    },
                    "operator": {
                        "type": "string",
                        "example": "|0><1|"
                    },
                    "pair": {
                        "type": "array",
                        "items": {
                            "type": "integer"
                        }
                    }
                }
            },
            "ConditionReport": {
                "type": "object",
                "description": "Outcome of a Knill-Laflamme check",
                "properties": {
                    "passed": {
                        "type": "boolean"
                    },
                    "worst_expectation_gap": {
                        "type": "number",
                        "description": "Largest |<c_k|A|c_k> - <c_l|A|c_l>|"
                    },
                    "worst_off_diagonal": {
                        "type": "number",
                        "description": "Largest |<c_k|A|c_l>| with k != l"
                    },
                    "witness": {
                        "$ref": "#/definitions/Witness"
                    }
                }
            },
            "TrialReport": {
                "type": "object",
                "description": "Fidelity statistics of an erasure experiment",
                "properties": {
                    "code": {"type": "string"},
                    "model": {"type": "string", "enum": ["ResetToZero", "RandomPauli", "RandomUnitary"]},
                    "erasure_size": {"type": "integer"},
                    "trials": {"type": "integer"},
                    "mean_fidelity": {"type": "number"},
                    "min_fidelity": {"type": "number"},
                    "failures": {"type": "integer"},
                    "seed": {"type": "integer"}
                }
            },
            "BchDescription": {
                "type": "object",
                "description": "A classical BCH code with an optional quantum section",
                "properties": {
                    "N": {"type": "integer", "example": 7},
                    "b": {"type": "integer", "example": 1},
                    "d_bch": {"type": "integer", "example": 3},
                    "m": {"type": "integer", "example": 3},
                    "primitive_poly": {"type": "string", "example": "x^3+x+1"},
                    "defining_set": {
                        "type": "array",
                        "items": {"type": "integer"},
                        "example": [1, 2, 4]
                    },
                    "generator": {
                        "type": "string",
                        "description": "Generator coefficients, lowest degree first",
                        "example": "1101"
                    },
                    "K": {"type": "integer", "example": 4},
                    "quantum": {
                        "type": "object",
                        "properties": {
                            "N": {"type": "integer"},
                            "K": {"type": "integer"},
                            "d": {"type": "integer"},
                            "distance_source": {"type": "string", "enum": ["true", "designed"]},
                            "designed_distance": {"type": "integer"},
                            "coset_reps": {"type": "array", "items": {"type": "string"}}
                        }
                    }
                }
            },
            "DecodeOutcome": {
                "type": "object",
                "description": "Result of decoding a received word",
                "properties": {
                    "status": {"type": "string", "enum": ["Corrected", "Failure"]},
                    "codeword": {"type": "string", "example": "1101000"},
                    "error_positions": {"type": "array", "items": {"type": "integer"}},
                    "erasure_values": {
                        "type": "object",
                        "additionalProperties": {"type": "integer"}
                    }
                }
            },
            "Error": {
                "type": "object",
                "properties": {
                    "error": {
                        "type": "string",
                        "description": "Error message"
                    },
                    "details": {
                        "type": "object",
                        "description": "Optional structured context"
                    }
                }
            }
        }
    }
