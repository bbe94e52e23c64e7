#!/usr/bin/env python3
"""
liecert entry point

    python3 main.py verify --n 3 --suite all --format json
    python3 main.py dims --n 4
    python3 main.py decompose --target so-split --under sp --n 3
"""

import sys

from audit_cli import main

if __name__ == "__main__":
    sys.exit(main())
