"""Driving the command line interface from a script.

Every capability is reachable through `quiverline CONFIG`, where the config
is a JSON or TOML file with a "command" field plus that command's arguments.
The CLI prints a JSON document to stdout and reserves exit codes 2 (input
problems), 3 (precondition violations), and 4 (internal invariant failures).
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

JOBS = [
    ("sdim", [], {
        "command": "sdim",
        "r": [2, 3, 5],
        "lambda": ["inf", "0", "1"],
        "degree": {"m": 2, "a": [0, 0, 0]},
    }),
    ("stability", [], {
        "command": "stability",
        "chi": [1, 1, 1, 1],
        "lambda": ["inf", "0", "1", "1"],
    }),
    ("exccol", [], {
        "command": "exccol",
        "r": [2, 2, 2],
        "lambda": ["inf", "0", "1"],
    }),
    ("certify-hd", ["--seed", "11"], {
        "command": "certify-hd",
        "random": {"count": 2, "max_vertices": 4},
    }),
]

with tempfile.TemporaryDirectory() as tmp:
    for name, flags, config in JOBS:
        path = Path(tmp) / f"{name}.json"
        path.write_text(json.dumps(config))
        proc = subprocess.run(
            [sys.executable, "-m", "quiverline", str(path), *flags],
            capture_output=True, text=True,
        )
        print(f"$ quiverline {name}.json {' '.join(flags)}  (exit {proc.returncode})")
        doc = json.loads(proc.stdout)
        # Reports can be large; show a stable digest of each.
        if name == "certify-hd":
            digest = {"seed": doc["seed"], "max_pd": doc["max_pd"],
                      "bound_holds": doc["theorem_hdOQ_satisfied"]}
        elif name == "exccol":
            digest = {k: doc[k] for k in ("total_dimension", "dims_equal", "ext1_zero")}
        else:
            digest = doc
        print(json.dumps(digest, indent=2, sort_keys=True))
        print()
