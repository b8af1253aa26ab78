# Sphinx configuration for the pywhite documentation.
import os
import sys

sys.path.insert(0, os.path.abspath('..'))

project = 'pywhite'
copyright = '2026, The pywhite developers'
author = 'The pywhite developers'
version = '0.1.0'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx_autodoc_typehints',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx_paramlinks',
    'sphinx_design'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = "en"
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = "trac"

html_theme = 'alabaster'
html_theme_options = {
    'logo_name': True,
    'fixed_sidebar': True,
    'font_family': "Helvetica Neue, sans-serif"
}
html_static_path = []
htmlhelp_basename = 'pywhitedoc'

latex_elements = {
    'papersize': 'a4paper',
}
latex_documents = [
    (master_doc, 'pywhite.tex', 'pywhite Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'pywhite', 'pywhite Documentation', [author], 1)
]

autodoc_default_options = {
    "members": True,
    "undoc-members": True,
    "show-inheritance": True,
    "member-order": "bysource",
}
autoclass_content = "both"
