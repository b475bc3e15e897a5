"""Text trace files: the update-stream format consumed by the CLI.

Format, one record per line:

    N <n>        header: vertex count (first line)
    I <u> <v>    insert edge
    D <u> <v>    delete edge
    B            terminates a batch

The first batch (records up to the first B) constructs the initial graph
and must be insert-only; later batches are updates. Weighted structure
dumps use `S <u> <v> <weight>` lines instead.
"""

from __future__ import annotations

import io
from typing import TextIO

from .graph import Edge, UpdateBatch, canonicalize


class Trace:
    """Parsed trace: vertex count plus a list of update batches."""

    def __init__(self, n: int, batches: list[UpdateBatch]):
        self.n = n
        self.batches = batches

    @property
    def initial_edges(self) -> set[Edge]:
        if not self.batches:
            return set()
        first = self.batches[0]
        if first.deletes:
            raise ValueError("first batch must be insert-only (initial graph construction)")
        return set(first.inserts)

    @property
    def updates(self) -> list[UpdateBatch]:
        return self.batches[1:]

    def has_updates_with_inserts(self) -> bool:
        return any(b.inserts for b in self.updates)


def write_trace(fh: TextIO, n: int, batches: list[UpdateBatch]) -> None:
    fh.write(f"N {n}\n")
    for batch in batches:
        for u, v in sorted(batch.inserts):
            fh.write(f"I {u} {v}\n")
        for u, v in sorted(batch.deletes):
            fh.write(f"D {u} {v}\n")
        fh.write("B\n")


def trace_to_string(n: int, batches: list[UpdateBatch]) -> str:
    buf = io.StringIO()
    write_trace(buf, n, batches)
    return buf.getvalue()


def read_trace(fh: TextIO) -> Trace:
    n = None
    batches: list[UpdateBatch] = []
    ins: set[Edge] = set()
    dels: set[Edge] = set()
    open_batch = False
    for lineno, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "N":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate N header")
            n = int(parts[1])
        elif kind in ("I", "D"):
            if n is None:
                raise ValueError(f"line {lineno}: record before N header")
            e = canonicalize(int(parts[1]), int(parts[2]))
            if e[1] >= n:
                raise ValueError(f"line {lineno}: vertex id out of range")
            (ins if kind == "I" else dels).add(e)
            open_batch = True
        elif kind == "B":
            batches.append(UpdateBatch(ins, dels))
            ins, dels = set(), set()
            open_batch = False
        else:
            raise ValueError(f"line {lineno}: unknown record {kind!r}")
    if n is None:
        raise ValueError("trace has no N header")
    if open_batch:
        batches.append(UpdateBatch(ins, dels))
    return Trace(n, batches)


def read_trace_path(path: str) -> Trace:
    with open(path, "r", encoding="utf-8") as fh:
        return read_trace(fh)
