"""Four notions of convergence on the registered example sequences.

For each example the script prints the verdict of every topology, the
expected verdict and the outcome of the theorem gates.

Run:  python demos/topologies_tour.py [ID ...]
"""

import sys

from radonfourier import registry


def main(ids):
    for cid in ids:
        res = registry.run_case(cid)
        print(res.summary())
        print(f"  => {'all expectations met' if res.passed else res.mismatches} "
              f"({res.seconds:.1f} s)\n")


if __name__ == "__main__":
    main(sys.argv[1:] or ["DELTA_INV", "TEMPDIS", "EX417"])
