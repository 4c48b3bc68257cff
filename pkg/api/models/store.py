"""
In-memory storage for registered quantum codes.
"""
import logging
from typing import Dict

from qec_erasure.code_analysis import QuantumCode

logger = logging.getLogger(__name__)

# Codes registered through POST /codes, keyed by name
codes_store: Dict[str, QuantumCode] = {}


def register_code(name: str, code: QuantumCode) -> None:
    if name in codes_store:
        logger.info(f"Replacing registered code {name}")
    codes_store[name] = code


def clear_codes() -> None:
    codes_store.clear()
