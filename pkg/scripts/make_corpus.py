#!/usr/bin/env python3
"""Generate a synthetic specialist corpus for end-to-end benchmarking.

Writes links.tsv, mesh.tsv, and taxonomy.tsv in the pipeline's input formats.
Typical follow-up:

    hinalloc ingest --links corpus/links.tsv --mesh corpus/mesh.tsv --taxonomy corpus/taxonomy.tsv
    hinalloc run --method dha --years 0:10 --links ... --mesh ... --taxonomy ... --out runs
    hinalloc run --method bl  --years 0:10 --links ... --mesh ... --taxonomy ... --out runs
    hinalloc compare runs/dha.jsonl runs/bl.jsonl --links corpus/links.tsv --years 1:10 --out cmp
"""

from __future__ import annotations

import argparse

from hinalloc.synth import CorpusSpec, generate_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", help="output directory")
    parser.add_argument("--authors", type=int, default=10_000)
    parser.add_argument("--papers", type=int, default=50_000)
    parser.add_argument("--categories", type=int, default=127)
    parser.add_argument("--years", type=int, default=10)
    parser.add_argument("--collab-rate", type=float, default=0.3)
    parser.add_argument("--seed", type=int, default=20240601)
    args = parser.parse_args()

    spec = CorpusSpec(
        n_authors=args.authors,
        n_papers=args.papers,
        n_categories=args.categories,
        n_years=args.years,
        collab_rate=args.collab_rate,
        seed=args.seed,
    )
    info = generate_corpus(args.out, spec)
    print(
        f"wrote {info['papers']} papers, {info['links']} links, "
        f"{info['collaborations']} collaborations to {args.out}"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
