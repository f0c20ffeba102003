"""Shared loader and runner for the CLI golden files."""

from __future__ import annotations

import os
import shlex
import subprocess
import sys
from typing import List, Tuple

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def load_corpus() -> List[Tuple[int, List[str]]]:
    out = []
    with open(os.path.join(GOLDEN_DIR, "corpus.txt")) as fh:
        for line in fh:
            if not line.strip() or line.startswith("#"):
                continue
            code, args = line.rstrip("\n").split("\t", 1)
            out.append((int(code), shlex.split(args)))
    return out


def golden_path(i: int) -> str:
    return os.path.join(GOLDEN_DIR, f"{i:02d}.out")


def run_cli(args: List[str]) -> Tuple[int, bytes]:
    proc = subprocess.run(
        [sys.executable, "-m", "plugtwist", *args],
        capture_output=True,
        env={**os.environ, "PYTHONHASHSEED": "random"},
    )
    return proc.returncode, proc.stdout
