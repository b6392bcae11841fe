#!/usr/bin/env python3
"""Regenerate the shipped catalog JSON from the programmatic builder."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from cubicwalls.builtin import builtin_catalog
from cubicwalls.catalog import load, serialize


def main():
    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "cubicwalls" / "data" / "catalog.json"
    text = serialize(builtin_catalog())
    assert serialize(load(text)) == text, "round trip failed"
    out.write_text(text)
    print(f"wrote {out} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
