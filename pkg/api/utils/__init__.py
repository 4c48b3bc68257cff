"""
Utility package for the QEC Erasure API.
"""
from utils.utils import error_response, load_code_payload, load_bch_payload
