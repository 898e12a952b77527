"""The on-disk code format: a header line then one decimal codeword per line.

    n=<dim> r=<radius>
    # optional comments
    0
    17
    ...

The radius in the header is advisory provenance (what the code was built
or checked for); parsing does not verify anything.  Input order is free,
output is canonical sorted order.  Writes go through a temp file and an
atomic rename so readers never observe a half-written code.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from typing import Iterable

from .hypercube import Code

_HEADER = re.compile(r"^n=(\d+)\s+r=(\d+)$")


class CodeFileError(ValueError):
    """Parse failure, carrying the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


@dataclass(frozen=True)
class CodeFile:
    code: Code
    radius: int


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_code_text(text: str) -> CodeFile:
    lines = text.splitlines()
    dim = radius = None
    words = []
    seen: set[int] = set()
    for line_no, raw in enumerate(lines, start=1):
        line = _strip(raw)
        if not line:
            continue
        if dim is None:
            m = _HEADER.match(line)
            if not m:
                raise CodeFileError(line_no, f"expected 'n=<dim> r=<radius>', got {line!r}")
            dim, radius = int(m.group(1)), int(m.group(2))
            if dim < 1:
                raise CodeFileError(line_no, "dim must be positive")
            continue
        for tok in line.split():
            if not tok.isdigit():
                raise CodeFileError(line_no, f"expected a decimal codeword, got {tok!r}")
            word = int(tok)
            if word >= (1 << dim):
                raise CodeFileError(line_no, f"codeword {word} out of range for n={dim}")
            if word in seen:
                raise CodeFileError(line_no, f"duplicate codeword {word}")
            seen.add(word)
            words.append(word)
    if dim is None:
        raise CodeFileError(max(len(lines), 1), "missing header line 'n=<dim> r=<radius>'")
    if not words:
        raise CodeFileError(len(lines) or 1, "no codewords")
    assert radius is not None
    return CodeFile(Code.from_words(words, dim), radius)


def read_code_file(path: str | os.PathLike) -> CodeFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_text(fh.read())


def serialize_code(code: Code, radius: int, comments: Iterable[str] = ()) -> str:
    out = [f"n={code.dim} r={radius}"]
    out.extend(f"# {c}" for c in comments)
    out.extend(str(w) for w in code.words)
    return "\n".join(out) + "\n"


def write_code_file(
    path: str | os.PathLike,
    code: Code,
    radius: int,
    comments: Iterable[str] = (),
) -> None:
    """Serialize and atomically replace whatever is at `path`."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".codefile-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(serialize_code(code, radius, comments))
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
