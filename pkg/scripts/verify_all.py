"""Run the check registry and print a one-line summary per check (same as `pezzo verify-all`)."""

import sys

from pezzo.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-all", *sys.argv[1:]]))
