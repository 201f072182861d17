"""Rebuild every table at the default bounds and print the report.

    python3 scripts/reproduce_tables.py [--table T] [--row R] [--max-N K] [--json]

Extra arguments are passed to ``hrlie reproduce-tables``.
"""

import sys

from hrlie.cli import run

if __name__ == "__main__":
    sys.exit(run(["reproduce-tables"] + sys.argv[1:]))
