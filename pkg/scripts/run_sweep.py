"""Verify the stabiliser factorisation on every face of every type and print a scoreboard."""
import argparse
import sys
import time

from poincare_cascade.rootsys import all_types, build
from poincare_cascade.theorem import verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=8)
    args = ap.parse_args()

    total = bad = 0
    print(f"{'type':<6}{'faces':>7}{'pass':>7}{'|Xi|':>6}{'seconds':>9}")
    for t in all_types(args.max_rank):
        rs = build(t)
        start = time.perf_counter()
        reps = verify_all(rs)
        n_ok = sum(r.ok for r in reps)
        n_xi = len({e.node.index for r in reps for e in r.xi_lambda})
        total += len(reps)
        bad += len(reps) - n_ok
        print(f"{str(t):<6}{len(reps):>7}{n_ok:>7}{n_xi:>6}{time.perf_counter() - start:>9.2f}")
    print(f"{total - bad}/{total} faces pass")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
