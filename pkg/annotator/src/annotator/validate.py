"""Round-trip check: feed a produced corpus to the engine's own loader.

The engine is driven through its CLI (`python -m align_eval`), the only
interface this package relies on.
"""

import subprocess
import sys
import tempfile
from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    messages: tuple[str, ...]


def validate_against_engine(corpus_path, python=None):
    """Run the engine loader on corpus_path and surface its complaints."""
    interpreter = python or sys.executable
    with tempfile.TemporaryDirectory() as scratch:
        proc = subprocess.run(
            [interpreter, "-m", "align_eval", "score",
             "--corpus", str(corpus_path), "--out", scratch],
            capture_output=True, text=True)
    if proc.returncode == 0:
        return ValidationReport(ok=True, messages=())
    messages = tuple(line for line in proc.stderr.splitlines() if line)
    return ValidationReport(ok=False, messages=messages or
                            (f"engine exited with {proc.returncode}",))
