"""Print normalized Alexander polynomials of 2-bridge knots and links K(p/q).

Usage: python scripts/alexander_table.py [--pmax 15] [--knots-only]
"""

import argparse
from dataclasses import dataclass
from math import gcd

from plugtwist.invariants import alexander_two_bridge
from plugtwist.rationals import Rational


@dataclass(frozen=True)
class AlexConfig:
    pmax: int = 15
    knots_only: bool = False


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmax", type=int, default=AlexConfig.pmax)
    ap.add_argument("--knots-only", action="store_true")
    cfg = AlexConfig(**vars(ap.parse_args(argv)))
    for p in range(2, cfg.pmax + 1):
        if cfg.knots_only and p % 2 == 0:
            continue
        for q in range(1, p):
            if gcd(p, q) == 1:
                kind = "knot" if p % 2 else "link"
                print(f"{p}/{q:<4} {kind}  {alexander_two_bridge(Rational(p, q))}")


if __name__ == "__main__":
    main()
