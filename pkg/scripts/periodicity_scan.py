"""Transfer checks between squarefree radicands congruent modulo n * prod(p | n).

With --modulus the scan probes a smaller modulus and lists the pairs where
integrality does not transfer.

    python scripts/periodicity_scan.py --n 4 6 8 9 12 --pairs 20
    python scripts/periodicity_scan.py --n 6 --modulus 12 --pairs 40
"""

import argparse

from purefield.arith import is_squarefree
from purefield.basis import validate_field
from purefield.periodicity import period_modulus, transfer_check
from purefield.sweep import periodicity_reports


def probe(n, modulus, limit, a_max):
    found = []
    for a in range(2, a_max):
        if not is_squarefree(a):
            continue
        b = a + modulus
        if not is_squarefree(b):
            continue
        rep = transfer_check(validate_field(n, a), b, modulus=modulus)
        if not rep.passed:
            found.append((a, b, rep.failures()))
            if len(found) >= limit:
                break
    return found


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[4, 6, 8, 9, 12])
    ap.add_argument("--pairs", type=int, default=20)
    ap.add_argument("--a-max", type=int, default=500)
    ap.add_argument("--modulus", type=int)
    args = ap.parse_args()
    for n in args.n:
        if args.modulus:
            found = probe(n, args.modulus, args.pairs, args.a_max)
            print(f"n={n} modulus={args.modulus} (period {period_modulus(n)}): "
                  f"{len(found)} non-transferring pairs")
            for a, b, fails in found:
                print(f"  {a} -> {b}: {fails}")
            continue
        reps = periodicity_reports(n, count=args.pairs, a_max=args.a_max)
        good = sum(r.passed for r in reps)
        print(f"n={n} modulus={period_modulus(n)}: {good}/{len(reps)} pairs transfer both ways")


if __name__ == "__main__":
    main()
