"""Built-in example algebras, given in adapted orthonormal bases."""
from __future__ import annotations

from .algebra import StructureConstants

# name -> (dimension, bracket entries)
_ENTRIES = {
    # [Y1, Y2] = e1, [Y1, e1] = e2
    "paper5d": (5, [(0, 2, [(1, -1.0)]), (2, 3, [(0, 1.0)])]),
    # Y1 acts on the derived algebra as the identity
    "aff4": (4, [(0, 2, [(0, -1.0)]), (1, 2, [(1, -1.0)])]),
    # Y1 rotates the derived algebra
    "rot4": (4, [(0, 2, [(1, -1.0)]), (1, 2, [(0, 1.0)])]),
    # nilpotent: [Y1, Y2] = e1, [Y3, Y4] = e2, [Y1, e1] = e2
    "heis_ext6": (6, [(0, 2, [(1, -1.0)]), (2, 3, [(0, 1.0)]), (4, 5, [(1, 1.0)])]),
}

CATALOG_NAMES = tuple(_ENTRIES)


def catalog_entry(name: str) -> StructureConstants:
    try:
        n, entries = _ENTRIES[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return StructureConstants.from_entries(n, entries, name)


def all_entries() -> list[StructureConstants]:
    return [catalog_entry(name) for name in CATALOG_NAMES]
