"""Synthetic specialist corpus generator for end-to-end benchmarking.

Every author gets a home category and a seed-year solo publication, then the
reported years mix solo home-topic papers with cross-topic collaborations.
Collaborations are where the two dynamic methods diverge: the counting
baseline hands each co-author a full unit on the foreign topic, while the
allocation engine hands out much less to the inexperienced side.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .meshtree import CATEGORY_LETTERS


def category_codes(n: int) -> list[str]:
    """n depth-two style category codes spread over the 16 letters."""
    letters = sorted(CATEGORY_LETTERS)
    per_letter = -(-n // len(letters))
    codes = [f"{letter}{i:02d}" for letter in letters for i in range(1, per_letter + 1)]
    return codes[:n]


@dataclass
class CorpusSpec:
    n_authors: int = 10_000
    n_papers: int = 50_000
    n_categories: int = 127
    n_years: int = 10  # reported years; a seed year 0 precedes them
    collab_rate: float = 0.3
    seed: int = 20240601


def generate_corpus(directory: str | Path, spec: CorpusSpec = CorpusSpec()) -> dict:
    """Write links.tsv, mesh.tsv, taxonomy.tsv under ``directory``.

    Year 0 seeds one solo home-topic paper per author; the remaining papers
    are spread evenly over years 1..n_years. Returns generation counts.
    """
    rng = random.Random(spec.seed)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    categories = category_codes(spec.n_categories)
    unique_ids = {cat: f"D{i:06d}" for i, cat in enumerate(categories, start=1)}
    authors = [f"A{i:05d}" for i in range(spec.n_authors)]
    home = {a: categories[rng.randrange(len(categories))] for a in authors}

    link_lines: list[str] = []
    mesh_lines: list[str] = []
    n_collab = 0

    for i, author in enumerate(authors):
        label = f"S{i:05d}"
        link_lines.append(f"0\t{author}\t{label}")
        mesh_lines.append(f"{label}\t{unique_ids[home[author]]}")

    remaining = spec.n_papers - spec.n_authors
    per_year = remaining // spec.n_years
    extra = remaining - per_year * spec.n_years
    for year in range(1, spec.n_years + 1):
        count = per_year + (1 if year <= extra else 0)
        for j in range(count):
            label = f"P{year:02d}_{j:05d}"
            if rng.random() < spec.collab_rate:
                a1 = authors[rng.randrange(len(authors))]
                a2 = authors[rng.randrange(len(authors))]
                while home[a2] == home[a1]:
                    a2 = authors[rng.randrange(len(authors))]
                n_collab += 1
                link_lines.append(f"{year}\t{a1}\t{label}")
                link_lines.append(f"{year}\t{a2}\t{label}")
                mesh_lines.append(f"{label}\t{unique_ids[home[a1]]}")
                mesh_lines.append(f"{label}\t{unique_ids[home[a2]]}")
            else:
                a1 = authors[rng.randrange(len(authors))]
                link_lines.append(f"{year}\t{a1}\t{label}")
                mesh_lines.append(f"{label}\t{unique_ids[home[a1]]}")

    (directory / "links.tsv").write_text("\n".join(link_lines) + "\n", encoding="utf-8")
    (directory / "mesh.tsv").write_text("\n".join(mesh_lines) + "\n", encoding="utf-8")
    (directory / "taxonomy.tsv").write_text(
        "\n".join(f"{unique_ids[c]}\t{c}" for c in categories) + "\n", encoding="utf-8"
    )
    return {
        "authors": spec.n_authors,
        "papers": spec.n_papers,
        "categories": spec.n_categories,
        "collaborations": n_collab,
        "links": len(link_lines),
        "paths": {
            "links": directory / "links.tsv",
            "mesh": directory / "mesh.tsv",
            "taxonomy": directory / "taxonomy.tsv",
        },
    }
