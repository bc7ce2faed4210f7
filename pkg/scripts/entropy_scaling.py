#!/usr/bin/env python3
"""Print the entropy scaling grid: string length (horizontal) vs base (vertical).

Counts grow exponentially along the length axis at fixed base and as a
power law along the base axis at fixed length.
"""

import argparse

from qcorolla.qusym import scaling_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-length", type=int, default=8)
    parser.add_argument("--bases", default="2,4,8,16,128", help="comma-separated bases")
    args = parser.parse_args()

    lengths = list(range(1, args.max_length + 1))
    bases = [int(b) for b in args.bases.split(",")]
    rows = scaling_table(lengths, bases)

    print(f"{'length':>6} {'base':>5} {'entropy (bits)':>15} {'strings':>24}")
    for row in rows:
        count = str(row.string_count)
        if len(count) > 24:
            count = f"~10^{len(count) - 1}"
        print(f"{row.length:>6} {row.base:>5} {row.entropy_bits:>15.6f} {count:>24}")


if __name__ == "__main__":
    main()
