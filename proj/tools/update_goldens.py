#!/usr/bin/env python3
# Copyright 2026 The wp-effects Authors
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
"""Rewrites the golden files named in corpus/cases.json.

Usage: tools/update_goldens.py BUILD_DIR

A golden is only rewritten when the case's exit status and stderr
expectation still hold. Review the diff before committing: goldens are
checked by hand, not trusted because the tool produced them.
"""
import json
import pathlib
import subprocess
import sys


def main() -> int:
    if len(sys.argv) != 2:
        print(__doc__, file=sys.stderr)
        return 1
    root = pathlib.Path(__file__).resolve().parent.parent
    corpus = root / "corpus"
    exe = pathlib.Path(sys.argv[1]).resolve() / "tools" / "wp-effects"
    manifest = json.loads((corpus / "cases.json").read_text())
    bad = 0
    for case in manifest["cases"]:
        r = subprocess.run([str(exe)] + case["args"], cwd=corpus, capture_output=True, text=True)
        if r.returncode != case["exit"] or case.get("stderr", "") not in r.stderr:
            print(f"{case['name']}: exit {r.returncode}: {r.stderr.strip()}", file=sys.stderr)
            bad += 1
            continue
        if "stdout" in case:
            (corpus / case["stdout"]).write_text(r.stdout)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
