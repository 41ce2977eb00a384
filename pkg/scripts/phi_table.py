"""Print phi_t = dim D(t,1,0) for every catalog algebra over a set of t."""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from derivscope import algebra as alg
from derivscope import catalog as cat
from derivscope.derivations import phi


@dataclass(frozen=True)
class TableConfig:
    t_values: tuple = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2),
                       Fraction(1), Fraction(2), Fraction(3))
    max_dim: int = 7


def table(config: TableConfig) -> list[tuple]:
    rows = []
    for entry in cat.default_catalog():
        a = entry.algebra
        if a.dim > config.max_dim:
            continue
        rows.append((entry.name, a.dim, alg.is_lie(a), [phi(a, t) for t in config.t_values]))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", default="-2,-1,0,1/2,1,2,3", help="comma separated rationals")
    ap.add_argument("--max-dim", type=int, default=7)
    args = ap.parse_args(argv)
    config = TableConfig(tuple(Fraction(x) for x in args.t.split(",")), args.max_dim)
    header = ["algebra", "n", "lie"] + [f"t={t}" for t in config.t_values]
    widths = [14, 3, 5] + [max(6, len(h)) for h in header[3:]]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for name, n, lie, vals in table(config):
        cells = [name, str(n), "yes" if lie else "no"] + [str(v) for v in vals]
        print("  ".join(c.ljust(w) for c, w in zip(cells, widths)))


if __name__ == "__main__":
    main()
