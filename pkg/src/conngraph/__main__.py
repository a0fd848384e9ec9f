"""Allow running the CLI as `python -m conngraph`."""

import sys

from .cli import main

sys.exit(main())
