"""Validates run reports produced by the CLI against the shipped schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    with tempfile.TemporaryDirectory() as tmp:
        ball = str(Path(tmp) / "ball.json")
        subprocess.run([exe, "body", "make", "--shape", "ball", "--n", "3", ball], check=True)
        runs = [
            [exe, "verify", "--suite", "multipliers", "--n", "2,3", "--jmax", "40"],
            [exe, "verify", "--suite", "zonal", "--samples", "2"],
            [exe, "verify", "--suite", "s2", "--groups", "duality,evenness", "--samples", "1"],
            [exe, "body", "classify", "--alpha-min", "-1", "--alpha-max", "2", "--steps", "4", ball],
            [exe, "body", "pair-check", "--i", "2", ball, ball],
        ]
        for cmd in runs:
            proc = subprocess.run(cmd, capture_output=True, text=True)
            report = json.loads(proc.stdout)
            jsonschema.validate(report, schema)
            if (proc.returncode == 0) != (report["fail_count"] == 0):
                print(f"exit status {proc.returncode} disagrees with fail_count in {cmd}")
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
