"""Run the full verifier over the catalog and summarise by check."""

import argparse
import time
from collections import Counter
from fractions import Fraction

from derivscope import verifier as ver


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-set", default="-2,-1,1/2,2,3")
    ap.add_argument("--workers", type=int, default=None,
                    help="thread count (default: DERIVSCOPE_THREADS or sequential)")
    ap.add_argument("--show-failures", action="store_true")
    args = ap.parse_args(argv)
    config = ver.VerifyConfig(t_set=tuple(Fraction(x) for x in args.t_set.split(",")))
    start = time.perf_counter()
    reports = ver.run_all(config, workers=args.workers)
    elapsed = time.perf_counter() - start
    by_check = {}
    for r in reports:
        by_check.setdefault(r.check_name, Counter())[r.status] += 1
    print(f"{'check':26} {'pass':>5} {'n/a':>5} {'fail':>5}")
    for name, c in sorted(by_check.items()):
        print(f"{name:26} {c[ver.PASS]:>5} {c[ver.NOT_APPLICABLE]:>5} {c[ver.FAIL]:>5}")
    total = Counter(r.status for r in reports)
    print(f"\n{len(reports)} reports in {elapsed:.1f} s: {total[ver.PASS]} pass, "
          f"{total[ver.NOT_APPLICABLE]} not applicable, {total[ver.FAIL]} fail")
    if args.show_failures:
        for r in reports:
            if r.status == ver.FAIL:
                print(f"FAIL {r.check_name} {r.subject} {r.parameters}: {r.witness}")
    return 0 if ver.overall_pass(reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
