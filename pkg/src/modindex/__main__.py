"""Entry point for ``python -m modindex``."""

import sys

from .cli import main

sys.exit(main())
