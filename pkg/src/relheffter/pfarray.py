"""Partially filled arrays: skeletons, diagonals, the diag filling procedure, direct sums."""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .group import GroupElement, GroupError, GroupSpec, symmetric_rep

Cell = tuple[int, int]  # 1-based (row, col)


class ConstructionError(ValueError):
    """A diag procedure tried to overwrite a filled cell, or targeted cells out of range."""


def _reduce_index(x: int, n: int) -> int:
    """Reduce to the residues {1, ..., n}."""
    return (x - 1) % n + 1


@dataclass(frozen=True)
class Skeleton:
    """The set of filled positions of an m x n partially filled array."""

    m: int
    n: int
    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        for r, c in self.cells:
            if not (1 <= r <= self.m and 1 <= c <= self.n):
                raise ValueError(f"cell {(r, c)} outside {self.m}x{self.n}")

    def row_cells(self, i: int) -> list[Cell]:
        return sorted(c for c in self.cells if c[0] == i)

    def col_cells(self, j: int) -> list[Cell]:
        return sorted(c for c in self.cells if c[1] == j)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "cells": [[r, c] for r, c in sorted(self.cells)]}

    @classmethod
    def from_json(cls, data: dict) -> "Skeleton":
        return cls(int(data["m"]), int(data["n"]),
                   frozenset((int(r), int(c)) for r, c in data["cells"]))


@dataclass(frozen=True)
class PFArray:
    """An m x n partially filled array over a GroupSpec; empty cells are absent keys."""

    m: int
    n: int
    spec: GroupSpec
    entries: Mapping[Cell, GroupElement] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (r, c), e in self.entries.items():
            if not (1 <= r <= self.m and 1 <= c <= self.n):
                raise ValueError(f"cell {(r, c)} outside {self.m}x{self.n}")
            if e.spec != self.spec:
                raise GroupError(f"entry at {(r, c)} belongs to a different group")

    @property
    def skeleton(self) -> Skeleton:
        return Skeleton(self.m, self.n, frozenset(self.entries))

    @property
    def entry_list(self) -> list[GroupElement]:
        """E(A): the entries in row-major cell order."""
        return [self.entries[c] for c in sorted(self.entries)]

    def row(self, i: int) -> list[GroupElement]:
        """Entries of row i in the natural (left to right) order."""
        return [self.entries[c] for c in sorted(self.entries) if c[0] == i]

    def col(self, j: int) -> list[GroupElement]:
        """Entries of column j in the natural (top to bottom) order."""
        return [self.entries[c] for c in sorted(self.entries, key=lambda c: (c[1], c[0]))
                if c[1] == j]

    def with_entries(self, extra: Mapping[Cell, GroupElement]) -> "PFArray":
        merged = dict(self.entries)
        for cell, e in extra.items():
            if cell in merged:
                raise ConstructionError(f"cell {cell} already filled")
            merged[cell] = e
        return PFArray(self.m, self.n, self.spec, merged)

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "group": self.spec.to_json(),
            "cells": [
                {"r": r, "c": c, "v": list(self.entries[(r, c)].coords)}
                for r, c in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PFArray":
        spec = GroupSpec.from_json(data["group"])
        entries = {
            (int(cell["r"]), int(cell["c"])): spec.element(*cell["v"])
            for cell in data["cells"]
        }
        return cls(int(data["m"]), int(data["n"]), spec, entries)

    def to_csv(self) -> str:
        """Grid CSV with symmetric representatives; empty string for empty cells."""
        if not self.spec.is_cyclic_single:
            raise GroupError("CSV export requires a single-factor group")
        out = io.StringIO()
        for r in range(1, self.m + 1):
            fields = []
            for c in range(1, self.n + 1):
                e = self.entries.get((r, c))
                fields.append("" if e is None else str(symmetric_rep(e)))
            out.write(",".join(fields))
            out.write("\n")
        return out.getvalue()

    @classmethod
    def from_csv(cls, text: str, v: int) -> "PFArray":
        spec = GroupSpec.cyclic(v)
        entries: dict[Cell, GroupElement] = {}
        rows = [line.split(",") for line in text.splitlines()]
        n = max(len(r) for r in rows)
        for i, fields in enumerate(rows, start=1):
            for j, f in enumerate(fields, start=1):
                if f.strip():
                    entries[(i, j)] = spec.element(int(f))
        return cls(len(rows), n, spec, entries)


@dataclass(frozen=True)
class DiagSpec:
    """Parameters of the diagonal filling procedure diag(r, c, s, d1, d2, length)."""

    r: int
    c: int
    s: int
    d1: int
    d2: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("length must be >= 1")


def diag(array: PFArray, d: DiagSpec) -> PFArray:
    """Install entries s + i*d2 at cells (r + i*d1, c + i*d1), indices wrapping in 1..n."""
    if array.m != array.n:
        raise ConstructionError("diag requires a square array")
    if not array.spec.is_cyclic_single:
        raise ConstructionError("diag requires a single-factor group")
    n = array.n
    new: dict[Cell, GroupElement] = {}
    for i in range(d.length):
        cell = (_reduce_index(d.r + i * d.d1, n), _reduce_index(d.c + i * d.d1, n))
        if cell in new:
            raise ConstructionError(f"diag self-collision at {cell}")
        new[cell] = array.spec.element(d.s + i * d.d2)
    return array.with_entries(new)


def diagonal_cells(n: int, i: int) -> list[Cell]:
    """The cells of D_i = {(i,1), (i+1,2), ..., (i-1,n)} in column order."""
    if not 1 <= i <= n:
        raise ValueError(f"diagonal index {i} out of range 1..{n}")
    return [(_reduce_index(i + j, n), j + 1) for j in range(n)]


def diagonal_index(cell: Cell, n: int) -> int:
    """The i such that cell lies on D_i."""
    r, c = cell
    return _reduce_index(r - c + 1, n)


@dataclass(frozen=True)
class DiagonalReport:
    filled_diagonal_indices: frozenset[int]
    is_k_diagonal: bool
    is_cyclically_k_diagonal: bool
    strip_widths: tuple[int, ...]
    uniform_width: int | None


def classify_diagonals(array: PFArray | Skeleton) -> DiagonalReport:
    """Diagonal structure of a square array: which D_i are full, strips of empty ones."""
    if array.m != array.n:
        raise ValueError("diagonal classification requires a square array")
    n = array.n
    skel = array.cells if isinstance(array, Skeleton) else frozenset(array.entries)
    filled = frozenset(
        i for i in range(1, n + 1) if all(c in skel for c in diagonal_cells(n, i))
    )
    union = set()
    for i in filled:
        union.update(diagonal_cells(n, i))
    is_k_diagonal = bool(filled) and union == set(skel)

    # consecutive mod n: the filled indices form one cyclic run
    if filled == set(range(1, n + 1)):
        cyclic = is_k_diagonal
        strips: list[int] = []
    elif filled:
        empties = sorted(set(range(1, n + 1)) - filled)
        # maximal cyclic runs of empty diagonals
        runs: list[list[int]] = []
        for i in empties:
            if runs and runs[-1][-1] == i - 1:
                runs[-1].append(i)
            else:
                runs.append([i])
        if len(runs) >= 2 and runs[0][0] == 1 and runs[-1][-1] == n:
            runs[0] = runs.pop() + runs[0]
        strips = [len(r) for r in runs]
        cyclic = is_k_diagonal and len(runs) == 1
    else:
        cyclic = False
        strips = []

    widths = tuple(sorted(strips))
    uniform = widths[0] if widths and len(set(widths)) == 1 else None
    return DiagonalReport(filled, is_k_diagonal, cyclic, widths, uniform)


def direct_sum(a: PFArray, b: PFArray) -> PFArray:
    """The direct sum over G1 + G2: union skeleton, zero-padded coordinates."""
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError(f"dimension mismatch: {a.m}x{a.n} vs {b.m}x{b.n}")
    spec = GroupSpec(a.spec.orders + b.spec.orders)
    zero_a = (0,) * len(a.spec.orders)
    zero_b = (0,) * len(b.spec.orders)
    entries: dict[Cell, GroupElement] = {}
    for cell in set(a.entries) | set(b.entries):
        ca = a.entries[cell].coords if cell in a.entries else zero_a
        cb = b.entries[cell].coords if cell in b.entries else zero_b
        entries[cell] = GroupElement(spec, ca + cb)
    return PFArray(a.m, a.n, spec, entries)


def support(array: PFArray) -> frozenset[int]:
    """Absolute values of the symmetric representatives of the entries."""
    if not array.spec.is_cyclic_single:
        raise GroupError("support is defined for single-factor groups only")
    return frozenset(abs(symmetric_rep(e)) for e in array.entries.values())


def cyclic_row_shift(array: PFArray, shift: int) -> PFArray:
    """Move row r to row r+shift (mod n); maps diagonal D_i to D_{i+shift}."""
    if array.m != array.n:
        raise ValueError("cyclic row shift requires a square array")
    n = array.n
    entries = {
        (_reduce_index(r + shift, n), c): e for (r, c), e in array.entries.items()
    }
    return PFArray(array.m, array.n, array.spec, entries)


def skeleton_from_diagonals(n: int, indices: Iterable[int]) -> Skeleton:
    cells: set[Cell] = set()
    for i in indices:
        cells.update(diagonal_cells(n, i))
    return Skeleton(n, n, frozenset(cells))
