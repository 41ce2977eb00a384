"""Compare phi_t with the lower, upper and refined upper bounds on Lie algebras.

Besides the catalog, samples random nilpotent extensions K x_T K^k (T strictly
lower triangular) to see how often each bound is attained.
"""

import argparse
import random
from dataclasses import dataclass

from derivscope import algebra as alg
from derivscope import catalog as cat
from derivscope import verifier as ver
from derivscope.linalg import Matrix


@dataclass(frozen=True)
class SurveyConfig:
    t: int = -1
    random_samples: int = 20
    extension_dim: int = 4
    seed: int = 0


def random_extension(k: int, rng: random.Random) -> alg.Algebra:
    rows = [[rng.choice((-1, 0, 0, 1)) if c < r else 0 for c in range(k)] for r in range(k)]
    return alg.one_dim_extension(Matrix.from_rows(rows, cols=k), name="ext")


def subjects(config: SurveyConfig):
    for entry in cat.default_catalog():
        a = entry.algebra
        if alg.is_lie(a) and not alg.is_perfect(a):
            yield entry.name, a
    rng = random.Random(config.seed)
    for i in range(config.random_samples):
        yield f"ext#{i}", random_extension(config.extension_dim, rng)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, default=-1)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--dim", type=int, default=4, help="dimension of the abelian ideal")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    config = SurveyConfig(args.t, args.samples, args.dim, args.seed)
    print(f"{'algebra':14} {'lower':>5} {'phi':>4} {'upper':>5} {'refined':>7}  attained")
    counts = {"lower": 0, "upper": 0, "total": 0}
    for name, a in subjects(config):
        r = ver.check_bounds(a, config.t)
        v = r.values
        att = [k for k in ("lower", "upper") if v[f"{k}_attained"]]
        for k in att:
            counts[k] += 1
        counts["total"] += 1
        refined = v["refined_upper"] if v["refined_applies"] else "-"
        print(f"{name:14} {v['omega']:>5} {v['phi']:>4} {v['upper']:>5} {refined!s:>7}  "
              f"{','.join(att) or '-'}  [{r.status}]")
    print(f"\nlower attained {counts['lower']}/{counts['total']}, "
          f"upper attained {counts['upper']}/{counts['total']}")


if __name__ == "__main__":
    main()
