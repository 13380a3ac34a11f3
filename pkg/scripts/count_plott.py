"""Count Plott functions on n-element sets and time each enumeration strategy."""
import argparse
import time

from plott import GroundSet, enumerate_plott
from plott.lattice import BRUTE_CAP, GEOMETRY_CAP


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4, help="largest ground size (at most 5)")
    args = parser.parse_args()
    print(f"{'n':>2} {'strategy':>9} {'count':>7} {'seconds':>8}")
    for n in range(args.max_n + 1):
        ground = GroundSet(tuple("abcde"[:n]))
        strategies = ["brute", "geometry"] if n <= BRUTE_CAP else ["geometry"]
        if n > GEOMETRY_CAP:
            break
        for strategy in strategies:
            start = time.perf_counter()
            count = sum(1 for _ in enumerate_plott(ground, strategy))
            print(f"{n:>2} {strategy:>9} {count:>7} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
