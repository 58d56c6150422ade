"""Sphinx configuration for the chainspec documentation."""

import sys
import os

sys.path.insert(0, os.path.abspath('../..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinxarg.ext',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'chainspec'
copyright = u'2024, chainspec developers'  # pylint: disable=redefined-builtin
author = u'chainspec developers'

autodoc_member_order = 'bysource'
napoleon_include_special_with_doc = True

version = u'0.1.0'
release = u'0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'chainspec-doc'

latex_documents = [
    (master_doc, 'chainspec-doc.tex', u'chainspec Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'chainspec', u'chainspec Documentation', [author], 1)
]
