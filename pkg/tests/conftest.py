from __future__ import annotations

import re
from pathlib import Path

import pytest

from finmonad.cli import main as cli_main

GOLDEN_DIR = Path(__file__).parent / "golden"

_FLOAT = re.compile(r"-?\d+\.\d+(?:[eE][+-]?\d+)?")


def load_golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


def assert_transcript(actual: str, expected: str, tol: float = 1e-5) -> None:
    """Byte-exact line comparison, except lines containing floats, which are
    compared numerically at `tol` after checking the non-float skeleton."""
    actual_lines = actual.splitlines()
    expected_lines = expected.splitlines()
    assert len(actual_lines) == len(expected_lines), (
        f"line count {len(actual_lines)} != {len(expected_lines)}\n"
        f"actual:\n{actual}\nexpected:\n{expected}"
    )
    for i, (got, want) in enumerate(zip(actual_lines, expected_lines), start=1):
        if got == want:
            continue
        got_floats = _FLOAT.findall(got)
        want_floats = _FLOAT.findall(want)
        got_skeleton = _FLOAT.sub("<f>", got)
        want_skeleton = _FLOAT.sub("<f>", want)
        assert want_floats and got_skeleton == want_skeleton, (
            f"line {i} differs: {got!r} != {want!r}"
        )
        assert len(got_floats) == len(want_floats), f"line {i}: float count differs"
        for a, b in zip(got_floats, want_floats):
            assert abs(float(a) - float(b)) <= tol, (
                f"line {i}: float {a} differs from {b} by more than {tol}"
            )


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout)."""

    def run(*argv: str) -> tuple[int, str]:
        try:
            code = cli_main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 1
        out = capsys.readouterr().out
        return code, out

    return run
