"""Shared plumbing for the CLI golden-file tests.

Run `python tests/cli_golden.py` to regenerate the golden files after an
intentional output change; the tests then assert byte-for-byte equality.
"""

import io
import json
import pathlib
from contextlib import redirect_stderr, redirect_stdout

from ppart.cli import main

HERE = pathlib.Path(__file__).parent
GOLDEN = HERE / "golden" / "cli"
FIXTURES = HERE.parent / "src" / "ppart" / "fixtures"

ALL_FIXTURES = (
    "p1", "p2", "p3", "forb1", "forb2", "forb3", "bowtie", "ex33", "fig1",
)

# (command, extra flags, fixtures) — selftest is limited to the small
# fixtures to keep the suite quick
CASES = [
    ("analyze", [], ALL_FIXTURES),
    ("extensions", [], ALL_FIXTURES),
    ("classify", [], ALL_FIXTURES),
    ("hook", [], ALL_FIXTURES),
    ("hilbert", ["--trunc", "6"], ALL_FIXTURES),
    ("presentation", [], ALL_FIXTURES),
    ("complex", [], ALL_FIXTURES),
    ("selftest", ["--trunc", "6"], ("p1", "p2", "p3", "bowtie", "forb3")),
]


def run_cli(argv):
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, out.getvalue()


def case_name(command, fixture):
    return f"{fixture}_{command}.json"


def iter_cases():
    for command, flags, fixtures in CASES:
        for fixture in fixtures:
            argv = [command, str(FIXTURES / f"{fixture}.poset")] + flags
            yield command, fixture, argv


def capture(argv):
    code, stdout = run_cli(argv)
    return {"exit": code, "stdout": stdout}


def regenerate():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for command, fixture, argv in iter_cases():
        payload = capture(argv)
        path = GOLDEN / case_name(command, fixture)
        path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        print("wrote", path.name, "exit", payload["exit"])


if __name__ == "__main__":
    regenerate()
