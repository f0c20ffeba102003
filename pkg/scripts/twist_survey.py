"""Classify every twist p/q with even p in a range and tabulate Plug vs GCork.

Usage: python scripts/twist_survey.py [--pmax 40] [--policy toward_zero] [--csv out.csv]
"""

import argparse
import csv
import sys
from collections import Counter
from dataclasses import dataclass
from math import gcd

from plugtwist.qforms import classify_twist
from plugtwist.rationals import Rational


@dataclass(frozen=True)
class SurveyConfig:
    pmax: int = 40
    policy: str = "toward_zero"
    csv_path: str = ""


def survey(cfg: SurveyConfig):
    for ap in range(2, cfg.pmax + 1, 2):
        for q in range(1, ap):
            if gcd(ap, q) != 1:
                continue
            for p in (ap, -ap):
                c = classify_twist(Rational(p, q), cfg.policy)
                yield {
                    "p": p,
                    "q": q,
                    "kind": c.kind.value,
                    "p_mod4": c.p_mod4,
                    "parity": c.parity.value,
                    "standard_form": c.standard,
                    "normal_form": " ".join(map(str, c.normal_form.coeffs)),
                }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmax", type=int, default=SurveyConfig.pmax)
    ap.add_argument("--policy", default=SurveyConfig.policy, choices=("toward_zero", "plus", "minus"))
    ap.add_argument("--csv", dest="csv_path", default="")
    cfg = SurveyConfig(**vars(ap.parse_args(argv)))
    rows = list(survey(cfg))
    counts = Counter((r["kind"], r["p_mod4"], r["parity"]) for r in rows)
    for (kind, mod4, parity), n in sorted(counts.items()):
        print(f"{kind:6s} p = {mod4} mod 4  {parity:5s} form  {n} twists")
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
        print(f"wrote {len(rows)} rows to {cfg.csv_path}", file=sys.stderr)


if __name__ == "__main__":
    main()
