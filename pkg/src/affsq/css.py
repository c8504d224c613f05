"""Two-row block arrays of affine permutation matrices for CSS code pairs.

Each family element becomes an n x n permutation block P with P[f(x), x] = 1,
so that matrix multiplication matches map composition.  The builder tiles the
blocks into the 2n x 2mn pair (HX, HZ); when every F commutes with every G,
the GF(2) product HX * HZ^T vanishes because each block of the product is a
sum of commuted pairs, hence twice a permutation matrix.  A pairwise
commuting family, on the other hand, yields a 2x3 window of commuting blocks
and with it a short closed cycle in the Tanner graph, which the girth search
here measures directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .algebra import AffineMap

BlockRef = tuple[str, int, bool]  # (family, element index, transposed)


@dataclass(frozen=True, slots=True)
class SparseBinaryMatrix:
    """A 0/1 matrix stored as the set of coordinates holding a 1."""

    rows: int
    cols: int
    entries: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("dimensions must be nonnegative")
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.rows} x {self.cols}")

    @classmethod
    def from_dense(cls, array) -> SparseBinaryMatrix:
        arr = np.asarray(array)
        coords = frozenset((int(r), int(c)) for r, c in zip(*np.nonzero(arr)))
        return cls(arr.shape[0], arr.shape[1], coords)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, c in self.entries:
            dense[r, c] = 1
        return dense

    def to_csr(self) -> sp.csr_matrix:
        if not self.entries:
            return sp.csr_matrix((self.rows, self.cols), dtype=np.uint8)
        rr, cc = zip(*sorted(self.entries))
        data = np.ones(len(rr), dtype=np.uint8)
        return sp.csr_matrix((data, (rr, cc)), shape=(self.rows, self.cols))

    def transpose(self) -> SparseBinaryMatrix:
        return SparseBinaryMatrix(
            self.cols, self.rows, frozenset((c, r) for r, c in self.entries)
        )

    def column_degrees(self) -> list[int]:
        degs = [0] * self.cols
        for _, c in self.entries:
            degs[c] += 1
        return degs

    def row_degrees(self) -> list[int]:
        degs = [0] * self.rows
        for r, _ in self.entries:
            degs[r] += 1
        return degs

    def as_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "coordinates": [list(rc) for rc in sorted(self.entries)],
        }


def perm_matrix(f: AffineMap) -> SparseBinaryMatrix:
    """Permutation matrix with a 1 at (f(x), x), so products follow composition."""
    n = f.n
    return SparseBinaryMatrix(n, n, frozenset((f(x), x) for x in range(n)))


@dataclass(frozen=True, slots=True)
class BlockArrayPair:
    """The block matrices (HX, HZ) with the family element behind each block."""

    m: int
    block_size: int
    hx: SparseBinaryMatrix
    hz: SparseBinaryMatrix
    hx_blocks: tuple[tuple[BlockRef, ...], ...]
    hz_blocks: tuple[tuple[BlockRef, ...], ...]


def build_block_arrays(
    fs: Sequence[AffineMap], gs: Sequence[AffineMap]
) -> BlockArrayPair:
    """Tile two m-element families into the two-row pair (HX, HZ).

    HX row j carries F_(l-j) on the left half and G_(l-j) on the right; HZ
    row k carries the transposed blocks G_(k-l) on the left and F_(k-l) on
    the right, all indices cyclic mod m.
    """
    m = len(fs)
    if m < 3:
        raise ValueError(f"family size must be at least 3, got {m}")
    if len(gs) != m:
        raise ValueError(f"family sizes differ: {m} vs {len(gs)}")
    moduli = {h.n for h in fs} | {h.n for h in gs}
    if len(moduli) != 1:
        raise ValueError(f"families mix moduli {sorted(moduli)}")
    n = fs[0].n

    hx_entries = set()
    hz_entries = set()
    hx_blocks = []
    hz_blocks = []
    for j in range(2):
        x_row = []
        z_row = []
        for l in range(2 * m):
            if l < m:
                x_fam, x_maps, x_idx = "F", fs, (l - j) % m
                z_fam, z_maps, z_idx = "G", gs, (j - l) % m
            else:
                x_fam, x_maps, x_idx = "G", gs, (l - m - j) % m
                z_fam, z_maps, z_idx = "F", fs, (j - (l - m)) % m
            x_map = x_maps[x_idx]
            z_map = z_maps[z_idx]
            for x in range(n):
                hx_entries.add((j * n + x_map(x), l * n + x))
                hz_entries.add((j * n + x, l * n + z_map(x)))  # transposed block
            x_row.append((x_fam, x_idx, False))
            z_row.append((z_fam, z_idx, True))
        hx_blocks.append(tuple(x_row))
        hz_blocks.append(tuple(z_row))

    shape = (2 * n, 2 * m * n)
    return BlockArrayPair(
        m,
        n,
        SparseBinaryMatrix(*shape, frozenset(hx_entries)),
        SparseBinaryMatrix(*shape, frozenset(hz_entries)),
        tuple(hx_blocks),
        tuple(hz_blocks),
    )


def two_row_array(family: Sequence[AffineMap]) -> SparseBinaryMatrix:
    """The 2n x mn two-row circulant array of one family (left half of HX)."""
    m = len(family)
    if m < 3:
        raise ValueError(f"family size must be at least 3, got {m}")
    n = family[0].n
    entries = set()
    for j in range(2):
        for l in range(m):
            h = family[(l - j) % m]
            for x in range(n):
                entries.add((j * n + h(x), l * n + x))
    return SparseBinaryMatrix(2 * n, m * n, frozenset(entries))


@dataclass(frozen=True, slots=True)
class OrthogonalityReport:
    """GF(2) product check HX * HZ^T = 0 with the offending blocks if any."""

    is_zero: bool
    nonzero_blocks: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return {
            "orthogonal": self.is_zero,
            "nonzeroBlocks": [list(b) for b in self.nonzero_blocks],
        }


def gf2_product_is_zero(pair: BlockArrayPair) -> OrthogonalityReport:
    """Multiply the raw sparse matrices mod 2, ignoring block bookkeeping."""
    # int64 accumulation: uint8 counts would wrap silently at overlap >= 256
    hx = pair.hx.to_csr().astype(np.int64)
    hz = pair.hz.to_csr().astype(np.int64)
    product = (hx @ hz.T).tocsr()
    product.data %= 2
    product.eliminate_zeros()
    n = pair.block_size
    rows, cols = product.nonzero()
    blocks = tuple(sorted({(int(r) // n, int(c) // n) for r, c in zip(rows, cols)}))
    return OrthogonalityReport(product.nnz == 0, blocks)


@dataclass(frozen=True, slots=True)
class CommutingWindow:
    """A cyclic 2x3 window whose distinct blocks pairwise commute."""

    position: int
    member_indices: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"position": self.position, "members": list(self.member_indices)}


def detect_commuting_2x3(family: Sequence[AffineMap]) -> list[CommutingWindow]:
    """All window positions l whose blocks {l-1, l, l+1, l+2} pairwise commute.

    The window pairs the top blocks (F_l, F_l+1, F_l+2) with the bottom
    blocks (F_l-1, F_l, F_l+1) of the two-row array; members equal as maps
    are deduplicated before the pairwise check.
    """
    m = len(family)
    if m < 3:
        raise ValueError(f"family size must be at least 3, got {m}")
    windows = []
    for position in range(m):
        indices = sorted({(position + k) % m for k in (-1, 0, 1, 2)})
        distinct = []
        for idx in indices:
            if family[idx] not in distinct:
                distinct.append(family[idx])
        commuting = all(
            f.commutes(g) for i, f in enumerate(distinct) for g in distinct[i + 1 :]
        )
        if commuting:
            windows.append(CommutingWindow(position, tuple(indices)))
    return windows


def tanner_girth(h: SparseBinaryMatrix, cap: int = 12) -> int | None:
    """Length of the shortest Tanner-graph cycle of h if it is <= cap, else None.

    The Tanner graph joins column node c to row node r for every 1 at (r, c).
    A breadth-first search from each column node reports the shortest cycle
    through it; expansion stops at depth cap/2, which is far enough to see
    every cycle of length up to cap.
    """
    if cap < 4 or cap % 2 != 0:
        raise ValueError(f"cap must be an even integer >= 4, got {cap}")
    col_adj = [[] for _ in range(h.cols)]
    row_adj = [[] for _ in range(h.rows)]
    for r, c in h.entries:
        col_adj[c].append(r + h.cols)  # row nodes live above the column ids
        row_adj[r].append(c)
    adjacency = col_adj + row_adj

    best = None
    max_depth = cap // 2
    for source in range(h.cols):
        dist = {source: 0}
        parent = {source: -1}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= max_depth:
                continue
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = du + dist[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 4:
            break  # nothing shorter exists in a bipartite graph
    return best if best is not None and best <= cap else None


def export_alist(h: SparseBinaryMatrix) -> str:
    """Serialize to alist text.

    Line 1 holds "cols rows" and line 2 the maximal column and row degrees;
    the degree lists follow, then the 1-based row indices of each column and
    the 1-based column indices of each row, one line per column or row.
    """
    col_degs = h.column_degrees()
    row_degs = h.row_degrees()
    by_col = [[] for _ in range(h.cols)]
    by_row = [[] for _ in range(h.rows)]
    for r, c in sorted(h.entries):
        by_col[c].append(r + 1)
        by_row[r].append(c + 1)
    lines = [
        f"{h.cols} {h.rows}",
        f"{max(col_degs, default=0)} {max(row_degs, default=0)}",
        " ".join(str(d) for d in col_degs),
        " ".join(str(d) for d in row_degs),
    ]
    lines.extend(" ".join(str(r) for r in sorted(col)) for col in by_col)
    lines.extend(" ".join(str(c) for c in sorted(row)) for row in by_row)
    return "\n".join(lines) + "\n"


def parse_alist(text: str) -> SparseBinaryMatrix:
    """Parse alist text back into a matrix; zero padding entries are ignored."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 4:
        raise ValueError("alist text too short")
    cols, rows = (int(tok) for tok in lines[0].split())
    col_degs = [int(tok) for tok in lines[2].split()]
    row_degs = [int(tok) for tok in lines[3].split()]
    if len(col_degs) != cols or len(row_degs) != rows:
        raise ValueError("degree list lengths do not match the dimensions")
    if len(lines) != 4 + cols + rows:
        raise ValueError(f"expected {4 + cols + rows} lines, got {len(lines)}")
    entries = set()
    for c in range(cols):
        indices = [int(tok) for tok in lines[4 + c].split() if tok != "0"]
        if len(indices) != col_degs[c]:
            raise ValueError(f"column {c} lists {len(indices)} entries, not {col_degs[c]}")
        entries.update((r - 1, c) for r in indices)
    check = set()
    for r in range(rows):
        indices = [int(tok) for tok in lines[4 + cols + r].split() if tok != "0"]
        check.update((r, c - 1) for c in indices)
    if check != entries:
        raise ValueError("row and column sections disagree")
    return SparseBinaryMatrix(rows, cols, frozenset(entries))
