# Sphinx configuration for the qec_erasure documentation.
#
# The API pages autodoc the installed package (``pip install .`` from the
# repository root installs qec_erasure out of api/); the Flask service is
# not documented here.

from datetime import datetime
from importlib.metadata import PackageNotFoundError, version as package_version

# -- Project information -----------------------------------------------------

project = 'qec_erasure'
author = 'QEC Erasure Toolkit Team'
copyright = f'{datetime.now().year}, {author}'

try:
    release = package_version('qec_erasure')
except PackageNotFoundError:
    release = '1.0.0'
version = '.'.join(release.split('.')[:2])

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx_autodoc_typehints',
    'myst_parser',
]

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_title = f'qec_erasure {release}'
html_static_path = ['_static']

# -- Autodoc -----------------------------------------------------------------

autodoc_member_order = 'bysource'
autodoc_typehints = 'description'
autodoc_default_options = {
    'members': True,
    'show-inheritance': True,
    # pydantic internals add nothing to the file-format pages
    'exclude-members': 'model_config, model_fields, model_computed_fields',
}

# Docstrings use the Args:/Returns:/Raises: layout
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_use_param = True
napoleon_use_rtype = True
napoleon_attr_annotations = True

typehints_fully_qualified = False
always_document_param_types = False

# -- Intersphinx -------------------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
    'pydantic': ('https://docs.pydantic.dev/latest', None),
}

myst_enable_extensions = [
    'colon_fence',
    'dollarmath',
]
