"""Regenerate the frozen golden files under tests/golden.

Run this only after an intentional behavior change, then review the diff.
"""

from __future__ import annotations

import json
from pathlib import Path

from dsomatrix import conjecture
from dsomatrix.cli import main as cli_main
from dsomatrix.graphs import enumerate_up_to

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

# (file name, argv) pairs whose stdout is frozen byte-for-byte
CLI_CASES = [
    ("spectrum_k4.jsonl", ["spectrum", "--family", "complete", "--n", "4"]),
    ("charpoly_p12.jsonl", ["charpoly", "--family", "path", "--n", "12"]),
    ("indices_k23.csv", ["indices", "--family", "complete_bipartite", "--p", "2", "--q", "3", "--format", "csv"]),
    ("audit_n4.jsonl", ["audit", "--enumerate", "4", "--jobs", "1"]),
]


def freeze_conjecture() -> None:
    result = conjecture.scan(enumerate_up_to(6), conjecture.DEFAULT_EPSILON, top_k=3, jobs=1)
    payload = {
        "orders": [1, 6],
        "epsilon": result.epsilon,
        "summary": result.summary(),
        "candidates": [c.to_dict() for c in result.candidates],
        "nearest": [c.to_dict() for c in result.nearest],
    }
    path = GOLDEN / "conjecture_n6.json"
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


def freeze_cli() -> None:
    for name, argv in CLI_CASES:
        path = GOLDEN / name
        code = cli_main(argv + ["--out", str(path)])
        if code != 0:
            raise SystemExit(f"{name}: exit {code}")
        print(f"wrote {path}")


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    freeze_conjecture()
    freeze_cli()
