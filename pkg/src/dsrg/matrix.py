"""Dense square 0/1 matrix algebra on bit-packed rows.

Every adjacency matrix, block composition, and product in this package runs
through this small kernel.  A matrix of order n stores its rows as n Python
integers, bit j of ``rows[i]`` being entry (i, j).  Transposition, equality
and elementwise operations are then integer bit operations, and the exact
integer product is computed with popcounts over row/column intersections.

All values are immutable after construction; every operation is pure, so
matrices can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class DimensionError(ValueError):
    """Shapes of the operands do not line up."""


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def _pack_row(bits: Iterable[int]) -> int:
    value = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"matrix entries must be 0 or 1, got {b!r}")
        value |= b << j
    return value


@dataclass(frozen=True)
class BinMatrix:
    """Square 0/1 matrix; ``rows[i]`` holds row i with bit j = entry (i, j)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError(f"order must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise DimensionError(
                f"expected {self.n} rows, got {len(self.rows)}")
        mask = _full_mask(self.n)
        for i, r in enumerate(self.rows):
            if r & ~mask:
                raise DimensionError(f"row {i} has bits beyond column {self.n - 1}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinMatrix":
        n = len(rows)
        packed = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionError(f"row {i} has length {len(row)}, expected {n}")
            packed.append(_pack_row(row))
        return cls(n, tuple(packed))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinMatrix":
        return cls.from_rows([[int(c) for c in line] for line in lines])

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "BinMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def ones(cls, n: int) -> "BinMatrix":
        """All-ones matrix J (diagonal included)."""
        return cls(n, (_full_mask(n),) * n)

    # -- queries -----------------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_sum(self, i: int) -> int:
        return self.rows[i].bit_count()

    def row_sums(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def col_sums(self) -> list[int]:
        return self.transpose().row_sums()

    def has_zero_diagonal(self) -> bool:
        return all(not (self.rows[i] >> i) & 1 for i in range(self.n))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def row_strings(self) -> list[str]:
        return ["".join("1" if (r >> j) & 1 else "0" for j in range(self.n))
                for r in self.rows]

    def to_bytes(self) -> bytes:
        width = (self.n + 7) // 8
        return b"".join(r.to_bytes(width, "little") for r in self.rows)

    # -- elementwise -------------------------------------------------------

    def transpose(self) -> "BinMatrix":
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BinMatrix(self.n, tuple(cols))

    def __or__(self, other: "BinMatrix") -> "BinMatrix":
        if self.n != other.n:
            raise DimensionError(f"order mismatch: {self.n} vs {other.n}")
        return BinMatrix(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __repr__(self) -> str:
        return f"BinMatrix({self.n}, {self.row_strings()})"


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of non-negative integers (exact path counts)."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def order(self) -> int:
        return self.n

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.n, tuple(
            tuple(self.entries[j][i] for j in range(self.n)) for i in range(self.n)))


@dataclass(frozen=True)
class PermSpec:
    """Permutation of {0, .., n-1}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "PermSpec":
        return cls(tuple(range(n)))

    @classmethod
    def reversal(cls, n: int) -> "PermSpec":
        """i -> -i mod n (fixes 0; an involution)."""
        return cls(tuple((-i) % n for i in range(n)))

    @classmethod
    def shift(cls, n: int, s: int) -> "PermSpec":
        return cls(tuple((i + s) % n for i in range(n)))

    @classmethod
    def block_diag(cls, parts: Sequence["PermSpec"]) -> "PermSpec":
        """Concatenate permutations acting on consecutive index blocks."""
        images: list[int] = []
        offset = 0
        for p in parts:
            images.extend(offset + v for v in p.images)
            offset += len(p)
        return cls(tuple(images))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "PermSpec":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return PermSpec(tuple(inv))

    def compose(self, other: "PermSpec") -> "PermSpec":
        """Return the permutation i -> self(other(i))."""
        return PermSpec(tuple(self.images[other.images[i]]
                              for i in range(len(other.images))))

    def is_involution(self) -> bool:
        return all(self.images[v] == i for i, v in enumerate(self.images))

    def matrix(self) -> BinMatrix:
        """Permutation matrix P with P[i][images[i]] = 1."""
        return BinMatrix(len(self.images),
                         tuple(1 << v for v in self.images))


def mat_mul_count(a: BinMatrix, b: BinMatrix) -> IntMatrix:
    """Exact integer product; entry (i, j) counts h with a[i][h] = b[h][j] = 1."""
    if a.n != b.n:
        raise DimensionError(f"order mismatch: {a.n} vs {b.n}")
    bt = b.transpose().rows
    return IntMatrix(a.n, tuple(
        tuple((ra & cb).bit_count() for cb in bt) for ra in a.rows))


def transpose(a: BinMatrix) -> BinMatrix:
    return a.transpose()


def kronecker(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    """Block-scaled product: block (i, j) of the result is b where a[i][j] = 1."""
    nb = b.n
    rows: list[int] = []
    for ra in a.rows:
        for rb in b.rows:
            value = 0
            bits = ra
            while bits:
                low = bits & -bits
                value |= rb << ((low.bit_length() - 1) * nb)
                bits ^= low
            rows.append(value)
    return BinMatrix(a.n * nb, tuple(rows))


def cycle_power(n: int, e: int) -> BinMatrix:
    """Permutation matrix of the e-th power of the n-cycle: (i, j) = 1 iff j = i+e mod n."""
    if n < 1:
        raise DimensionError(f"order must be positive, got {n}")
    e %= n
    return BinMatrix(n, tuple(1 << ((i + e) % n) for i in range(n)))


def sigma_circulant(n: int, first_row: Sequence[int], sigma: int) -> BinMatrix:
    """Matrix whose row i, entry j equals first_row[(j - sigma*i) mod n].

    Each row is the previous one shifted sigma entries to the right;
    sigma = 1 gives an ordinary circulant.  sigma is normalized mod n
    (it plays the role of a residue).
    """
    if len(first_row) != n:
        raise DimensionError(f"first row has length {len(first_row)}, expected {n}")
    sigma %= n
    row0 = _pack_row(first_row)
    rows = []
    for i in range(n):
        shift = (sigma * i) % n
        rows.append(((row0 << shift) | (row0 >> (n - shift))) & _full_mask(n)
                    if shift else row0)
    return BinMatrix(n, tuple(rows))


Block = Union[BinMatrix, int, Sequence[Sequence[int]]]


def _block_shape(cell: Block) -> tuple[int, int] | None:
    if isinstance(cell, BinMatrix):
        return cell.n, cell.n
    if isinstance(cell, int):
        if cell not in (0, 1):
            raise ValueError(f"constant block must be 0 or 1, got {cell}")
        return None
    heights = len(cell)
    if heights == 0:
        raise DimensionError("empty block")
    width = len(cell[0])
    for row in cell:
        if len(row) != width:
            raise DimensionError("ragged block")
    return heights, width


def _block_row_bits(cell: Block, local_row: int, width: int) -> int:
    if isinstance(cell, BinMatrix):
        return cell.rows[local_row]
    if isinstance(cell, int):
        return _full_mask(width) if cell else 0
    return _pack_row(cell[local_row])


def block_compose(layout: Sequence[Sequence[Block]]) -> BinMatrix:
    """Assemble a square matrix from a grid of blocks.

    Cells may be BinMatrix values, rectangular 0/1 row lists, or the
    constants 0/1 (filled to the size inferred from their grid row and
    column).  Blocks in one grid row must share a row count and blocks in
    one grid column a column count; the assembled matrix must be square.
    """
    if not layout or any(len(row) != len(layout[0]) for row in layout):
        raise DimensionError("ragged layout grid")
    grid_rows = len(layout)
    grid_cols = len(layout[0])
    heights: list[int | None] = [None] * grid_rows
    widths: list[int | None] = [None] * grid_cols
    for gi in range(grid_rows):
        for gj in range(grid_cols):
            shape = _block_shape(layout[gi][gj])
            if shape is None:
                continue
            h, w = shape
            if heights[gi] is None:
                heights[gi] = h
            elif heights[gi] != h:
                raise DimensionError(f"grid row {gi}: block heights {heights[gi]} vs {h}")
            if widths[gj] is None:
                widths[gj] = w
            elif widths[gj] != w:
                raise DimensionError(f"grid column {gj}: block widths {widths[gj]} vs {w}")
    if any(h is None for h in heights) or any(w is None for w in widths):
        raise DimensionError("constant blocks leave a row or column size undetermined")
    total_rows = sum(heights)  # type: ignore[arg-type]
    total_cols = sum(widths)  # type: ignore[arg-type]
    if total_rows != total_cols:
        raise DimensionError(f"assembled matrix is {total_rows}x{total_cols}, not square")
    col_offsets = [0] * grid_cols
    for gj in range(1, grid_cols):
        col_offsets[gj] = col_offsets[gj - 1] + widths[gj - 1]  # type: ignore[operator]
    rows: list[int] = []
    for gi in range(grid_rows):
        for local in range(heights[gi]):  # type: ignore[arg-type]
            value = 0
            for gj in range(grid_cols):
                value |= _block_row_bits(layout[gi][gj], local, widths[gj]) << col_offsets[gj]  # type: ignore[arg-type]
            rows.append(value)
    return BinMatrix(total_rows, tuple(rows))


def conjugate_by_perm(a: BinMatrix, p: PermSpec) -> BinMatrix:
    """Relabel vertices: result[p(i)][p(j)] = a[i][j].

    Equals Q^-1 A Q for the permutation matrix Q = p.matrix().
    """
    if len(p) != a.n:
        raise DimensionError(f"permutation length {len(p)} != order {a.n}")
    images = p.images
    rows = [0] * a.n
    for i, r in enumerate(a.rows):
        target = 0
        while r:
            low = r & -r
            target |= 1 << images[low.bit_length() - 1]
            r ^= low
        rows[images[i]] = target
    return BinMatrix(a.n, tuple(rows))
