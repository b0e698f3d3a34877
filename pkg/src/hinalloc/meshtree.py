"""MeSH vocabulary handling: Unique-ID to Tree-ID tables and depth-two categories.

A Unique ID looks like ``D059925``. A Tree ID is a category letter followed by
digit groups separated by dots (``A01.111``, ``A15.378.316.378``, or a bare
depth-two node such as ``B02``). Profiles are kept at depth two, i.e. at the
``A01`` / ``B02`` level: truncation cuts everything after the first dot. On
the full vocabulary table this yields the familiar 127 depth-two categories.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

CATEGORY_LETTERS = frozenset("ABCDEFGHIJKLMNVZ")

_UNIQUE_ID_RE = re.compile(r"D\d{6}$")
_TREE_ID_RE = re.compile(r"[ABCDEFGHIJKLMNVZ]\d+(\.\d+)*$")


class MeshFormatError(ValueError):
    """A Unique ID, Tree ID, or category string is syntactically invalid."""


@dataclass
class ParsedMeshTable:
    """Result of parsing a taxonomy table: records plus per-line errors."""

    tree_ids: dict[str, list[str]] = field(default_factory=dict)
    errors: list[tuple[int, str]] = field(default_factory=list)


def is_valid_unique_id(unique_id: str) -> bool:
    return bool(_UNIQUE_ID_RE.fullmatch(unique_id))


def is_valid_tree_id(tree_id: str) -> bool:
    return bool(_TREE_ID_RE.fullmatch(tree_id))


def parse_mesh_table(text: str) -> ParsedMeshTable:
    """Parse ``unique_id<TAB>tree_id`` lines; repeated lines add more tree IDs.

    Malformed records are collected with their 1-based line number and skipped;
    parsing continues.
    """
    table = ParsedMeshTable()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            table.errors.append((line_no, f"expected 2 tab-separated fields, got {len(parts)}"))
            continue
        unique_id, tree_id = parts[0].strip(), parts[1].strip()
        if not is_valid_unique_id(unique_id):
            table.errors.append((line_no, f"malformed unique ID {unique_id!r}"))
            continue
        if not is_valid_tree_id(tree_id):
            table.errors.append((line_no, f"malformed tree ID {tree_id!r}"))
            continue
        ids = table.tree_ids.setdefault(unique_id, [])
        if tree_id not in ids:
            ids.append(tree_id)
    return table


def truncate_depth2(tree_id: str) -> str:
    """Cut a tree ID down to its depth-two node: drop everything after the first dot."""
    if not is_valid_tree_id(tree_id):
        raise MeshFormatError(f"malformed tree ID {tree_id!r}")
    head, _, _ = tree_id.partition(".")
    return head


def category_letter(category: str) -> str:
    """The top-level letter (one of 16) of a category or tree ID."""
    if not category or category[0] not in CATEGORY_LETTERS:
        raise MeshFormatError(f"malformed category {category!r}")
    return category[0]


def categories_for(unique_id: str, table: ParsedMeshTable) -> list[str]:
    """Depth-two categories of a Unique ID, deduplicated, in first-seen order.

    A Unique ID with several tree IDs contributes one link per distinct
    depth-two category.
    """
    seen: list[str] = []
    for tree_id in table.tree_ids.get(unique_id, []):
        cat = truncate_depth2(tree_id)
        if cat not in seen:
            seen.append(cat)
    return seen
