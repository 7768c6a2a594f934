"""Entry point for running as a module: python -m acfgm"""

import sys

from acfgm.main import main

if __name__ == "__main__":
    sys.exit(main())
