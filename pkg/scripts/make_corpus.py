"""Regenerate tests/data/corpus_1000.g6, a graph6 corpus written by networkx.

The records come from a different encoder than ours, so reading and rewriting
them byte-for-byte is a real round-trip check. Orders straddle the one-byte
size header limit (62) so the '~' header form is exercised too.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

import networkx as nx

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "corpus_1000.g6"


def corpus(count: int, seed: int) -> list[bytes]:
    rng = random.Random(seed)
    records = []
    for k in range(count):
        if k % 10 == 9:
            n = rng.randint(60, 90)
        else:
            n = rng.randint(0, 20)
        p = rng.choice((0.0, 0.1, 0.3, 0.5, 0.8, 1.0))
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
        records.append(nx.to_graph6_bytes(g, header=False).rstrip(b"\n"))
    return records


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=20240611)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_bytes(b"".join(r + b"\n" for r in corpus(args.count, args.seed)))
    print(f"wrote {args.count} records to {args.out}")


if __name__ == "__main__":
    main()
