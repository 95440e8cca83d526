"""Exact rank, membership, kernel and cokernel computations over F_p.

The matrix is first split into the connected components of its row/column
incidence graph; every quantity below is a sum (or union) over those
blocks. A block is eliminated densely with numpy when rows*cols fits the
dense budget, otherwise with a sparse column-by-column reduction.

Both paths process columns in increasing order and therefore agree on the
set of pivot columns: a column is a pivot exactly when it is not in the
span of the columns before it.
"""
import logging
from collections import Counter
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

from app.core.config import get_settings
from app.core.errors import DimensionMismatch
from app.modules.fp_linalg.field import inverse_mod
from app.modules.fp_linalg.matrix import SparseMatrixFp

logger = logging.getLogger(__name__)


class NotInSpanType:
    """Marker returned by :func:`solve_membership` when no solution exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NotInSpan"

    def __bool__(self):
        return False


NotInSpan = NotInSpanType()


class Block(NamedTuple):
    rows: tuple[int, ...]
    cols: tuple[int, ...]


def connected_blocks(m: SparseMatrixFp) -> list[Block]:
    """Connected components of the bipartite row/column graph, ordered by smallest column.

    Zero columns are blocks without rows; rows without entries belong to no block.
    """
    parent = list(range(m.rows))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for column in m.columns:
        if len(column) < 2:
            continue
        root = find(column[0][0])
        for row, _ in column[1:]:
            other = find(row)
            if other != root:
                parent[other] = root

    by_root: dict[int, int] = {}
    cols: list[list[int]] = []
    rows: list[set[int]] = []
    for j, column in enumerate(m.columns):
        if not column:
            cols.append([j])
            rows.append(set())
            continue
        root = find(column[0][0])
        index = by_root.get(root)
        if index is None:
            index = by_root[root] = len(cols)
            cols.append([])
            rows.append(set())
        cols[index].append(j)
        rows[index].update(row for row, _ in column)
    return [Block(tuple(sorted(r)), tuple(c)) for r, c in zip(rows, cols)]


def _budget(dense_budget: Optional[int]) -> int:
    return get_settings().DENSE_BUDGET if dense_budget is None else dense_budget


# dense path

def _dense_block(m: SparseMatrixFp, block: Block, extra: Optional[dict[int, int]] = None) -> np.ndarray:
    local = {row: i for i, row in enumerate(block.rows)}
    width = len(block.cols) + (1 if extra is not None else 0)
    dense = np.zeros((len(block.rows), width), dtype=np.int64)
    for k, j in enumerate(block.cols):
        for row, value in m.columns[j]:
            dense[local[row], k] = value
    if extra is not None:
        for row, value in extra.items():
            dense[local[row], width - 1] = value
    return dense


def _rref(work: np.ndarray, p: int) -> list[int]:
    """Reduce ``work`` in place to reduced row echelon form; return the pivot columns.

    Pivot rule: columns left to right, the eligible row of smallest current index.
    Residues stay below 2^20, so products fit in int64.
    """
    n_rows, n_cols = work.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(work[r:, c])
        if candidates.size == 0:
            continue
        pr = r + int(candidates[0])
        if pr != r:
            work[[r, pr]] = work[[pr, r]]
        inv = inverse_mod(int(work[r, c]), p)
        work[r] = (work[r] * inv) % p
        factors = work[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            work[hit] = (work[hit] - np.outer(factors[hit], work[r])) % p
        pivots.append(c)
        r += 1
    return pivots


# sparse path

class _SparseEchelon:
    """Column-by-column reduction of one block, optionally tracking column combinations."""

    def __init__(self, m: SparseMatrixFp, block: Block, track: bool):
        self.p = m.modulus
        self.track = track
        self.order: list[int] = []
        self.basis: dict[int, tuple[dict[int, int], Optional[dict[int, int]]]] = {}
        self.pivot_cols: list[int] = []
        self.kernel: list[dict[int, int]] = []
        fill = Counter(row for j in block.cols for row, _ in m.columns[j])
        p = self.p
        for j in block.cols:
            vec = dict(m.columns[j])
            combo = {j: 1} if track else None
            self._reduce(vec, combo, sign=-1)
            if vec:
                pivot_row = min(vec, key=lambda row: (fill[row], row))
                inv = inverse_mod(vec[pivot_row], p)
                vec = {row: v * inv % p for row, v in vec.items()}
                if combo is not None:
                    combo = {c: v * inv % p for c, v in combo.items()}
                self.basis[pivot_row] = (vec, combo)
                self.order.append(pivot_row)
                self.pivot_cols.append(j)
            elif combo is not None:
                self.kernel.append(combo)

    def _reduce(self, vec: dict[int, int], combo: Optional[dict[int, int]], sign: int) -> None:
        """Clear every pivot row from ``vec``; ``combo`` accumulates ``sign`` times the pivots used."""
        p = self.p
        for pivot_row in self.order:
            c = vec.get(pivot_row)
            if not c:
                continue
            pvec, pcombo = self.basis[pivot_row]
            for row, v in pvec.items():
                value = (vec.get(row, 0) - c * v) % p
                if value:
                    vec[row] = value
                else:
                    vec.pop(row, None)
            if combo is not None and pcombo is not None:
                for col, v in pcombo.items():
                    value = (combo.get(col, 0) + sign * c * v) % p
                    if value:
                        combo[col] = value
                    else:
                        combo.pop(col, None)

    def solve(self, target: dict[int, int]) -> Optional[dict[int, int]]:
        vec = dict(target)
        solution: dict[int, int] = {}
        self._reduce(vec, solution, sign=1)
        return None if vec else solution


def _use_dense(block: Block, dense_budget: int, extra_cols: int = 0) -> bool:
    return len(block.rows) * (len(block.cols) + extra_cols) <= dense_budget


def _block_pivots(m: SparseMatrixFp, block: Block, dense_budget: int) -> list[int]:
    if not block.rows:
        return []
    if _use_dense(block, dense_budget):
        work = _dense_block(m, block)
        return [block.cols[c] for c in _rref(work, m.modulus)]
    return _SparseEchelon(m, block, track=False).pivot_cols


def independent_columns(m: SparseMatrixFp, dense_budget: Optional[int] = None) -> list[int]:
    """The greedy column rank profile: column j is listed iff it is not in the span of columns < j."""
    budget = _budget(dense_budget)
    blocks = connected_blocks(m)
    dense = sum(1 for b in blocks if b.rows and _use_dense(b, budget))
    logger.debug("%r split into %s blocks (%s dense)", m, len(blocks), dense)
    pivots: list[int] = []
    for block in blocks:
        pivots.extend(_block_pivots(m, block, budget))
    pivots.sort()
    return pivots


def rank(m: SparseMatrixFp, dense_budget: Optional[int] = None) -> int:
    """Exact rank of ``m`` over F_p."""
    return len(independent_columns(m, dense_budget))


def kernel_basis(m: SparseMatrixFp, dense_budget: Optional[int] = None) -> Iterator[dict[int, int]]:
    """Yield a basis of the kernel, one sparse vector per non-pivot column.

    The vector for column j has coefficient 1 at j and is otherwise supported
    on pivot columns smaller than j.
    """
    budget = _budget(dense_budget)
    p = m.modulus
    for block in connected_blocks(m):
        if not block.rows:
            yield {block.cols[0]: 1}
            continue
        if _use_dense(block, budget):
            work = _dense_block(m, block)
            pivots = _rref(work, p)
            pivot_set = set(pivots)
            for f in range(len(block.cols)):
                if f in pivot_set:
                    continue
                vec = {block.cols[f]: 1}
                for k, pc in enumerate(pivots):
                    coefficient = int(work[k, f])
                    if coefficient:
                        vec[block.cols[pc]] = (-coefficient) % p
                yield vec
        else:
            yield from _SparseEchelon(m, block, track=True).kernel


def cokernel_rows(m: SparseMatrixFp, dense_budget: Optional[int] = None) -> list[int]:
    """Rows outside the greedy row rank profile.

    The unit vectors of these rows span a complement of the column space, so
    their count is the corank.
    """
    independent = set(independent_columns(m.transpose(), dense_budget))
    return [row for row in range(m.rows) if row not in independent]


def solve_membership(
    m: SparseMatrixFp, v: Sequence[int], dense_budget: Optional[int] = None
) -> list[int] | NotInSpanType:
    """Solve m*c = v; return the solution with free variables zero, or ``NotInSpan``."""
    if len(v) != m.rows:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.rows} rows")
    p = m.modulus
    target = {i: int(x) % p for i, x in enumerate(v) if int(x) % p}
    solution = [0] * m.cols
    if not target:
        return solution

    blocks = connected_blocks(m)
    owner: dict[int, int] = {}
    for index, block in enumerate(blocks):
        for row in block.rows:
            owner[row] = index
    touched: dict[int, dict[int, int]] = {}
    for row, value in target.items():
        index = owner.get(row)
        if index is None:
            return NotInSpan
        touched.setdefault(index, {})[row] = value

    budget = _budget(dense_budget)
    for index in sorted(touched):
        block = blocks[index]
        local_target = touched[index]
        if _use_dense(block, budget, extra_cols=1):
            work = _dense_block(m, block, extra=local_target)
            pivots = _rref(work, p)
            last = len(block.cols)
            if last in pivots:
                return NotInSpan
            for k, pc in enumerate(pivots):
                solution[block.cols[pc]] = int(work[k, last])
        else:
            local = _SparseEchelon(m, block, track=True).solve(local_target)
            if local is None:
                return NotInSpan
            for col, value in local.items():
                solution[col] = value
    return solution
