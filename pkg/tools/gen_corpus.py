#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus under src/bicolim/corpus/."""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from bicolim.corpus import write_corpus


def main() -> None:
    outdir = pathlib.Path(__file__).resolve().parents[1] / "src" / "bicolim" / "corpus"
    written = write_corpus(outdir)
    print(f"wrote {len(written)} fixtures to {outdir}")
    for name in written:
        print(" ", name)


if __name__ == "__main__":
    main()
