"""Soft topology counts per context next to crisp counts on the product set."""

import argparse

from softtop import Context, crisp
from softtop.oracle import enumerate_topologies


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-cells", type=int, default=4)
    args = p.parse_args()
    print("n  m  cells  soft  crisp")
    for cells in range(1, args.max_cells + 1):
        expected = crisp.count_topologies(cells)
        for n in range(1, cells + 1):
            if cells % n:
                continue
            got = len(enumerate_topologies(Context.of_size(n, cells // n)))
            flag = "" if got == expected else "  MISMATCH"
            print(f"{n}  {cells // n}  {cells:5d}  {got:4d}  {expected:5d}{flag}")


if __name__ == "__main__":
    main()
