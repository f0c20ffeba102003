"""Rewrite tests/golden/NN.out from the current CLI (run after an intended output change)."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from golden_corpus import golden_path, load_corpus, run_cli  # noqa: E402


def main():
    for i, (expected, args) in enumerate(load_corpus()):
        code, out = run_cli(args)
        if code != expected:
            raise SystemExit(f"{args}: exit {code}, corpus expects {expected}")
        with open(golden_path(i), "wb") as fh:
            fh.write(out)
        print(f"{i:02d} exit={code} bytes={len(out)} {' '.join(args)}")


if __name__ == "__main__":
    main()
