#!/usr/bin/python

'''
Computes filters, filtra, fixfilters and sobrifications from JSON documents and
runs the law suite over them. See --help for the subcommands.
'''

import sys
from os import path

sys.path.insert(0, path.dirname(path.dirname(path.abspath(__file__))))

from filtrum.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
