"""
Sphinx configuration for the romanus documentation.
"""

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from romanus.config import VERSION  # noqa: E402

project = 'romanus'
author = 'romanus contributors'
release = VERSION

extensions = ['sphinx.ext.autodoc']
autodoc_member_order = 'bysource'
exclude_patterns = ['_build']
