"""Check the p^(jk) divisibility and integrality of eta_k / p^k over prime-power degrees.

    python scripts/lemma_sweep.py --primes 2 3 5 7 --s-max 3 --a-max 500
"""

import argparse
import collections
import time

from purefield.sweep import LemmaConfig, eta_integral, lemma_cases, lemma_divisibility_failures


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--s-max", type=int, default=3)
    ap.add_argument("--a-max", type=int, default=500)
    args = ap.parse_args()
    cfg = LemmaConfig(primes=tuple(args.primes), s_max=args.s_max, a_max=args.a_max)

    counts = collections.Counter()
    failures = []
    t0 = time.perf_counter()
    for f, p, s, k, ap_ in lemma_cases(cfg):
        counts[p, s, k] += 1
        bad_j = lemma_divisibility_failures(f, p, k, ap_)
        if bad_j or not eta_integral(f, p, k, ap_):
            failures.append((p, s, f.a, k, ap_, bad_j))
    dt = time.perf_counter() - t0
    print(f"{cfg}: {sum(counts.values())} cases in {dt:.1f}s, {len(failures)} failures")
    for key in sorted(counts):
        print("  p=%d s=%d k=%d: %d radicands" % (*key, counts[key]))
    for row in failures[:20]:
        print("  FAIL", row)


if __name__ == "__main__":
    main()
