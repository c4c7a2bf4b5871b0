"""Allow ``python -m beitoric``."""

import sys

from .cli import main

sys.exit(main())
