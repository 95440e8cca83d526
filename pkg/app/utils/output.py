import sys
from pathlib import Path
from typing import Optional


def write_output(text: str, out: Optional[Path] = None) -> None:
    """Write command output to ``out`` or stdout, always newline-terminated."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
