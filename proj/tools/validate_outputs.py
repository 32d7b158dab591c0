#!/usr/bin/env python3
# Copyright 2026 The iongrover Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the CLI on a set of commands and validates every JSON result."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing

RUNS = [
    ("gate_table", ["gate-table", "toffoli3"]),
    ("gate_table", ["gate-table", "toffoli4", "--noise", "{config}"]),
    ("gate_table", ["gate-table", "ccz"]),
    ("grover", ["grover", "--style", "phase", "--marked", "111"]),
    ("grover", ["grover", "--style", "boolean", "--marked", "010", "--marked", "101", "--shots", "500"]),
    ("grover", ["grover", "--all", "--t", "2", "--style", "boolean", "--spam", "{config}"]),
    ("grover", ["grover", "--all", "--t", "1", "--style", "phase", "--noise", "{config}"]),
    ("tomography", ["tomography"]),
    ("tomography", ["tomography", "--noise", "{config}"]),
    ("costs", ["costs", "--n-min", "3", "--n-max", "12"]),
]

CONFIG = {"p_xx": 0.02, "p_r": 0.0, "eps0": 0.01, "eps1": 0.015,
          "crosstalk": 0.005, "trajectories": 200, "seed": 7}


def registry(schema_dir):
    resources = []
    for path in schema_dir.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], referencing.Resource.from_contents(schema)))
    return referencing.Registry().with_resources(resources)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cli")
    ap.add_argument("schemas")
    args = ap.parse_args()
    schema_dir = pathlib.Path(args.schemas)
    reg = registry(schema_dir)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        config = tmp / "config.json"
        config.write_text(json.dumps(CONFIG))
        jsonschema.validate(CONFIG, json.loads((schema_dir / "noise_config.schema.json").read_text()))
        for i, (kind, argv) in enumerate(RUNS):
            out = tmp / f"run{i}"
            cmd = [args.cli] + [a.replace("{config}", str(config)) for a in argv] + ["--out", str(out)]
            subprocess.run(cmd, check=True, stdout=subprocess.DEVNULL)
            doc = json.loads((out / f"{kind}.json").read_text())
            schema = json.loads((schema_dir / f"{kind}.schema.json").read_text())
            try:
                jsonschema.Draft202012Validator(schema, registry=reg).validate(doc)
                print(f"ok   {' '.join(argv)}")
            except jsonschema.ValidationError as e:
                failures += 1
                print(f"FAIL {' '.join(argv)}: {e.message}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
