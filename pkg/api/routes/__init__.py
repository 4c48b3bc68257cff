"""
Routes package for the QEC Erasure API.
"""
from .docs import docs_bp
from .codes import codes_bp
from .bch import bch_bp
from .experiments import experiments_bp
