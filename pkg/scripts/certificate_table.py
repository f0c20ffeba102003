"""Tabulate non-diffeomorphism certificates over a grid of (m, n).

Prints one row per pair with the conclusion and the largest row defect.
Usage: python scripts/certificate_table.py [--mmax 9] [--nmax 41]
"""

import argparse
from dataclasses import dataclass

from plugtwist.obstruction import nondiffeo_certificate


@dataclass(frozen=True)
class TableConfig:
    mmax: int = 9
    nmax: int = 41


def table(cfg: TableConfig):
    for m in range(0, cfg.mmax + 1):
        for n in range(m + 1, cfg.nmax + 1):
            if (n - m) % 2:
                continue
            cert = nondiffeo_certificate(m, n)
            yield m, n, cert.conclusion.value, max(r.defect for r in cert.cases)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mmax", type=int, default=TableConfig.mmax)
    ap.add_argument("--nmax", type=int, default=TableConfig.nmax)
    cfg = TableConfig(**vars(ap.parse_args(argv)))
    print(f"{'m':>3} {'n':>3}  {'conclusion':<13} max defect")
    for m, n, concl, worst in table(cfg):
        print(f"{m:>3} {n:>3}  {concl:<13} {worst}")


if __name__ == "__main__":
    main()
