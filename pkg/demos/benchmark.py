"""Time the kernel computation and the full distinguisher on growing inputs.

The instances are planted square set-cover systems (n = m); they are not
oracle-verified, since exhaustive search is hopeless at these sizes.  All
arithmetic stays exact, so the interesting question is how the integer
Hermite reduction scales.

Run as: python demos/benchmark.py [max_size]
"""

import sys

from gapcover.cli import main as cli_main


def main():
    stop = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    sizes = ",".join(str(s) for s in range(10, stop + 1, 10))
    raise SystemExit(cli_main(["bench", "--sizes", sizes, "--seed", "4"]))


if __name__ == "__main__":
    main()
