"""Run every `gaplab ...` line found in ```sh blocks of the README."""

import argparse
import os
import re
import shlex
import subprocess
import sys
import tempfile


def commands(text):
    in_block = False
    for line in text.splitlines():
        if line.startswith("```"):
            # only shell blocks; a bare fence is a synopsis
            in_block = not in_block and line.strip() == "```sh"
            continue
        stripped = line.strip().removeprefix("$ ")
        if in_block and re.match(r"gaplab(\s|$)", stripped):
            yield stripped


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--gaplab", required=True)
    ap.add_argument("--readme", required=True)
    args = ap.parse_args()
    with open(args.readme) as f:
        cmds = list(commands(f.read()))
    if not cmds:
        print("no gaplab examples found")
        return 1
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for cmd in cmds:
            argv = shlex.split(cmd)
            argv[0] = os.path.abspath(args.gaplab)
            proc = subprocess.run(argv, capture_output=True, text=True, cwd=tmp)
            ok = proc.returncode == 0
            failures += not ok
            print(("ok   " if ok else "FAIL ") + cmd + ("" if ok else f": exit {proc.returncode}: {proc.stderr.strip()}"))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
