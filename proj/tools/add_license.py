#!/usr/bin/env python3
"""Prepends the license header to project sources. Safe to re-run."""

import pathlib
import sys

LINES = [
    "Copyright 2026 The glwb Authors.",
    "",
    'Licensed under the Apache License, Version 2.0 (the "License");',
    "you may not use this file except in compliance with the License.",
    "You may obtain a copy of the License at",
    "",
    "    http://www.apache.org/licenses/LICENSE-2.0",
    "",
    "Unless required by applicable law or agreed to in writing, software",
    'distributed under the License is distributed on an "AS IS" BASIS,',
    "WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.",
    "See the License for the specific language governing permissions and",
    "limitations under the License.",
]

STYLES = {
    ".cpp": "//", ".hpp": "//", ".h": "//", ".c": "//",
    ".sh": "#", ".py": "#", ".txt": "#",
}
DIRS = ["src", "include", "tools", "tests"]


def header(prefix):
    return "".join((prefix + " " + l).rstrip() + "\n" for l in LINES) + "\n"


def main(root):
    root = pathlib.Path(root)
    files = [root / "CMakeLists.txt"]
    for d in DIRS:
        files += sorted(p for p in (root / d).rglob("*") if p.is_file())
    for path in files:
        prefix = STYLES.get(path.suffix)
        if prefix is None:
            continue
        text = path.read_text()
        if "Licensed under the Apache License" in text[:1000]:
            continue
        shebang = ""
        if text.startswith("#!"):
            shebang, _, text = text.partition("\n")
            shebang += "\n"
        path.write_text(shebang + header(prefix) + text)
        print(path.relative_to(root))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent)
