# Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validate shipped models and emitted certificates against docs/schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
    model_schema = json.loads((root / "docs/schema/model.schema.json").read_text())
    cert_schema = json.loads((root / "docs/schema/certificate.schema.json").read_text())
    runs = [
        ("example1.json", ["--notion", "uniform"]),
        ("example1_normalized.json", ["--notion", "strong"]),
        ("example2.json", ["--notion", "path-complete"]),
        ("example2.json", ["--notion", "path-complete", "--switching", "arbitrary"]),
        ("example2.json", ["--notion", "uniform"]),
        ("example2.json", ["--notion", "proposition1", "--min-of"]),
    ]
    for model in sorted((root / "models").glob("*.json")):
        jsonschema.validate(json.loads(model.read_text()), model_schema)
        print(f"model ok: {model.name}")
    for name, flags in runs:
        proc = subprocess.run(
            [cli, "certify", "--model", str(root / "models" / name), *flags],
            capture_output=True, text=True, check=False)
        if proc.returncode > 2:
            print(proc.stderr, file=sys.stderr)
            return 1
        cert = json.loads(proc.stdout)
        jsonschema.validate(cert, cert_schema)
        if cert["exit_code"] != proc.returncode:
            print(f"{name} {flags}: exit {proc.returncode} != {cert['exit_code']}")
            return 1
        print(f"certificate ok: {name} {' '.join(flags)} -> {cert['verdict']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
