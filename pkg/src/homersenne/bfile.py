"""OEIS b-file reading and writing.

A b-file holds one ``index value`` pair per line.  Lines starting with
``#`` and blank lines are ignored on input; output has no header.
"""
from __future__ import annotations

import os
from typing import Iterable, TextIO


def format_bfile(terms: Iterable[int], offset: int = 0) -> str:
    return "".join(f"{i} {v}\n" for i, v in enumerate(terms, start=offset))


def parse_bfile(text: str) -> list[tuple[int, int]]:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    for (i, _), (j, _) in zip(pairs, pairs[1:]):
        if j != i + 1:
            raise ValueError(f"b-file indices not consecutive: {i} followed by {j}")
    return pairs


def read_bfile(source: str | os.PathLike | TextIO) -> list[tuple[int, int]]:
    if hasattr(source, "read"):
        return parse_bfile(source.read())
    with open(source, encoding="ascii") as fh:
        return parse_bfile(fh.read())


def bfile_terms(source, offset: int | None = None) -> list[int]:
    """Values of a b-file, optionally checking that the first index is ``offset``."""
    pairs = read_bfile(source)
    if offset is not None and pairs and pairs[0][0] != offset:
        raise ValueError(f"expected offset {offset}, b-file starts at {pairs[0][0]}")
    return [v for _, v in pairs]
