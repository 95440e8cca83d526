"""Column-major sparse matrices over F_p."""
import logging
from pathlib import Path
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from app.core.errors import DimensionMismatch, InvalidInput
from app.modules.fp_linalg.field import check_modulus

logger = logging.getLogger(__name__)

Column = tuple[tuple[int, int], ...]


class SparseMatrixFp:
    """A rows x cols matrix over F_p stored as a tuple of sparse columns.

    Each column is a tuple of ``(row, residue)`` pairs sorted by row, with
    no repeated rows and no zero residues. ``row_keys`` / ``col_keys``
    optionally name the indices (monomials for the Frobenius matrices).
    """

    __slots__ = ("rows", "cols", "modulus", "columns", "row_keys", "col_keys")

    def __init__(
        self,
        rows: int,
        cols: int,
        modulus: int,
        columns: Sequence[Column],
        row_keys: Optional[Sequence[Hashable]] = None,
        col_keys: Optional[Sequence[Hashable]] = None,
        validate: bool = True,
    ):
        self.rows = rows
        self.cols = cols
        self.modulus = check_modulus(modulus)
        self.columns = tuple(columns)
        self.row_keys = tuple(row_keys) if row_keys is not None else None
        self.col_keys = tuple(col_keys) if col_keys is not None else None
        if validate:
            self._validate()

    def _validate(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InvalidInput(f"negative shape {self.rows}x{self.cols}")
        if len(self.columns) != self.cols:
            raise DimensionMismatch(f"expected {self.cols} columns, got {len(self.columns)}")
        if self.row_keys is not None and len(self.row_keys) != self.rows:
            raise DimensionMismatch("row_keys length differs from rows")
        if self.col_keys is not None and len(self.col_keys) != self.cols:
            raise DimensionMismatch("col_keys length differs from cols")
        for j, column in enumerate(self.columns):
            last = -1
            for row, value in column:
                if not 0 <= row < self.rows:
                    raise InvalidInput(f"column {j}: row index {row} out of range")
                if row <= last:
                    raise InvalidInput(f"column {j}: rows not strictly increasing")
                if not 0 < value < self.modulus:
                    raise InvalidInput(f"column {j}: stored value {value} is not a non-zero residue")
                last = row

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def nnz(self) -> int:
        return sum(len(column) for column in self.columns)

    @classmethod
    def from_column_maps(
        cls,
        rows: int,
        modulus: int,
        column_maps: Iterable[Mapping[int, int]],
        row_keys: Optional[Sequence[Hashable]] = None,
        col_keys: Optional[Sequence[Hashable]] = None,
    ) -> "SparseMatrixFp":
        columns = []
        for entries in column_maps:
            reduced = ((row, value % modulus) for row, value in entries.items())
            columns.append(tuple(sorted((row, value) for row, value in reduced if value)))
        return cls(rows, len(columns), modulus, columns, row_keys, col_keys)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], modulus: int, cols: Optional[int] = None) -> "SparseMatrixFp":
        rows = len(dense)
        width = len(dense[0]) if rows else (cols or 0)
        if any(len(row) != width for row in dense):
            raise DimensionMismatch("ragged dense matrix")
        column_maps = [{i: int(dense[i][j]) for i in range(rows)} for j in range(width)]
        return cls.from_column_maps(rows, modulus, column_maps)

    def transpose(self) -> "SparseMatrixFp":
        buckets: list[list[tuple[int, int]]] = [[] for _ in range(self.rows)]
        for j, column in enumerate(self.columns):
            for row, value in column:
                buckets[row].append((j, value))
        return SparseMatrixFp(
            self.cols, self.rows, self.modulus, [tuple(b) for b in buckets],
            row_keys=self.col_keys, col_keys=self.row_keys, validate=False,
        )

    def append_column(self, vector: Sequence[int], key: Optional[Hashable] = None) -> "SparseMatrixFp":
        if len(vector) != self.rows:
            raise DimensionMismatch(f"vector of length {len(vector)} against {self.rows} rows")
        p = self.modulus
        column = tuple((i, int(v) % p) for i, v in enumerate(vector) if int(v) % p)
        col_keys = None
        if self.col_keys is not None:
            col_keys = self.col_keys + (key,)
        return SparseMatrixFp(
            self.rows, self.cols + 1, p, self.columns + (column,),
            row_keys=self.row_keys, col_keys=col_keys, validate=False,
        )

    def permute_rows(self, order: Sequence[int]) -> "SparseMatrixFp":
        """Row ``order[i]`` of the result is row ``i`` of this matrix."""
        if sorted(order) != list(range(self.rows)):
            raise InvalidInput("order is not a permutation of the rows")
        columns = [tuple(sorted((order[row], value) for row, value in column)) for column in self.columns]
        return SparseMatrixFp(self.rows, self.cols, self.modulus, columns, validate=False)

    def __eq__(self, other):
        if not isinstance(other, SparseMatrixFp):
            return NotImplemented
        return (self.rows, self.cols, self.modulus, self.columns) == (
            other.rows, other.cols, other.modulus, other.columns
        )

    def __repr__(self):
        return f"SparseMatrixFp({self.rows}x{self.cols}, p={self.modulus}, nnz={self.nnz()})"


def sparse_matvec(m: SparseMatrixFp, coefficients: Mapping[int, int] | Sequence[int]) -> dict[int, int]:
    """m * c as a {row: residue} map holding only the nonzero rows.

    Work is proportional to the entries of the columns ``c`` touches, never
    to ``m.rows``.
    """
    p = m.modulus
    if isinstance(coefficients, Mapping):
        items = coefficients.items()
    else:
        if len(coefficients) != m.cols:
            raise DimensionMismatch(f"vector of length {len(coefficients)} against {m.cols} columns")
        items = enumerate(coefficients)
    out: dict[int, int] = {}
    for j, c in items:
        c = int(c) % p
        if not c:
            continue
        for row, value in m.columns[j]:
            total = (out.get(row, 0) + c * value) % p
            if total:
                out[row] = total
            else:
                out.pop(row, None)
    return out


def matvec(m: SparseMatrixFp, coefficients: Mapping[int, int] | Sequence[int]) -> list[int]:
    """m * c as a dense residue list; ``c`` may be dense or a sparse {col: value} map."""
    out = [0] * m.rows
    for row, value in sparse_matvec(m, coefficients).items():
        out[row] = value
    return out


def dump_triples(m: SparseMatrixFp, path: Path) -> None:
    """Write the ``rows cols p`` header and one ``row col value`` line per entry, column-major."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as handle:
        handle.write(f"{m.rows} {m.cols} {m.modulus}\n")
        for j, column in enumerate(m.columns):
            for row, value in column:
                handle.write(f"{row} {j} {value}\n")
    logger.info("wrote %s entries of a %sx%s matrix to %s", m.nnz(), m.rows, m.cols, path)


def load_triples(path: Path) -> SparseMatrixFp:
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        header = handle.readline().split()
        if len(header) != 3:
            raise InvalidInput(f"{path}: header must be 'rows cols p'")
        rows, cols, modulus = (int(x) for x in header)
        buckets: list[list[tuple[int, int]]] = [[] for _ in range(cols)]
        for lineno, line in enumerate(handle, start=2):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 3:
                raise InvalidInput(f"{path}:{lineno}: expected 'row col value'")
            row, col, value = (int(x) for x in parts)
            if not 0 <= col < cols:
                raise InvalidInput(f"{path}:{lineno}: column {col} out of range")
            buckets[col].append((row, value))
    return SparseMatrixFp(rows, cols, modulus, [tuple(sorted(b)) for b in buckets])
