"""
Configuration package for the QEC Erasure API.
"""
from .swagger import get_swagger_template
