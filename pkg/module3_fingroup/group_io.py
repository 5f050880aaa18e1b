# module3_fingroup/group_io.py

from pathlib import Path
from typing import List, Optional, Union

from common.errors import GroupFileError
from module1_exactalg.linalg import QMatrix
from module1_exactalg.polynomials import format_rational, parse_rational
from .groups import MatGroup, close


def parse_group_text(text: str) -> List[QMatrix]:
    """
    Generators from the group file format:

        n
        <n rows of n rationals "p/q" or "p">
        <blank line>
        <next matrix> ...
    """
    lines = text.splitlines()
    header = [i for i, line in enumerate(lines) if line.strip()]
    if not header:
        raise GroupFileError("empty group file")
    first = header[0]
    try:
        n = int(lines[first].strip())
    except ValueError as e:
        raise GroupFileError(f"first line must be the matrix size, got {lines[first]!r}") from e
    if n < 1:
        raise GroupFileError(f"matrix size must be positive, got {n}")

    blocks: List[List[str]] = []
    current: List[str] = []
    for line in lines[first + 1:]:
        if line.strip():
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    if not blocks:
        raise GroupFileError("group file lists no matrices")

    matrices = []
    for b, block in enumerate(blocks, start=1):
        if len(block) != n:
            raise GroupFileError(f"matrix {b} has {len(block)} rows, expected {n}")
        rows = []
        for line in block:
            fields = line.split()
            if len(fields) != n:
                raise GroupFileError(f"matrix {b}: row {line.strip()!r} has {len(fields)} entries, expected {n}")
            try:
                rows.append([parse_rational(x) for x in fields])
            except ValueError as e:
                raise GroupFileError(f"matrix {b}: {e}") from e
        matrices.append(QMatrix.from_rows(rows))
    return matrices


def read_group_file(path: Union[str, Path], cap: Optional[int] = None) -> MatGroup:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise GroupFileError(f"cannot read group file {path}: {e}") from e
    return close(parse_group_text(text), cap)


def format_group(group: MatGroup) -> str:
    """All elements in the group file format (readable back with parse_group_text)."""
    blocks = []
    for g in group:
        blocks.append("\n".join(" ".join(format_rational(x) for x in row) for row in g.to_rows()))
    return f"{group.n}\n" + "\n\n".join(blocks) + "\n"
