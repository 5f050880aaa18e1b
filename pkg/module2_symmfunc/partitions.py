# module2_symmfunc/partitions.py

from typing import Iterator, List, Optional, Sequence, Tuple

# Weakly decreasing tuple of positive integers; () is the partition of 0.
Partition = Tuple[int, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Drop trailing zeros and check the parts are weakly decreasing and non-negative."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return tuple(p for p in parts if p > 0)


def size(lam: Partition) -> int:
    return sum(lam)


def padded(lam: Partition, length: int) -> Tuple[int, ...]:
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} parts")
    return tuple(lam) + (0,) * (length - len(lam))


def partitions(k: int, max_parts: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of k, largest first part first."""
    if k == 0:
        yield ()
        return
    if max_parts == 0:
        return
    top = k if max_part is None else min(k, max_part)
    for first in range(top, 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(k - first, rest_parts, first):
            yield (first,) + rest


def partitions_up_to(bound: int, max_parts: Optional[int] = None) -> List[Partition]:
    return [lam for k in range(bound + 1) for lam in partitions(k, max_parts)]


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "()"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "()"):
        return ()
    return make_partition([int(p) for p in text.split(",")])
