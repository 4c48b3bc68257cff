"""
Models package for the QEC Erasure API.
"""
from models.store import codes_store, register_code, clear_codes
