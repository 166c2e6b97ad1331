#!/usr/bin/env python3
"""
bsfan command line launcher

Usage:
    python bsfan_cli.py pure --degrees 0,2,3,4,6,8 --n 5
    python bsfan_cli.py decompose betti config/tables/b11.json
    python bsfan_cli.py facet --degrees -1,0,2,3 --tau 1 --rows -4,2 --method both
"""

import os
import sys

# Add the current directory to sys.path for imports
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from bsfan.cli import main

if __name__ == "__main__":
    main()
