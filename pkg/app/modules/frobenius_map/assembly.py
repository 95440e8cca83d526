"""Assembly of the Frobenius matrix A and the questions asked of it.

Columns are indexed by (i, m) with i ascending outermost and m running over
the source basis in canonical order; rows by the target basis. The column
for (i, m) holds the normal form of Y_i^p * m.
"""
import logging
from pathlib import Path
from typing import Optional

from app.core.config import get_settings
from app.core.errors import BudgetExceeded, InvalidInput
from app.modules.fp_linalg import elimination
from app.modules.fp_linalg.matrix import SparseMatrixFp, dump_triples
from app.modules.frobenius_map.problem import FrobeniusProblem, witness_monomial
from app.modules.incidence_ring.monomials import (
    Monomial,
    basis_index,
    component_dimension,
    format_monomial,
    monomial_basis,
    y_power,
)
from app.modules.incidence_ring.ring import reduce_monomial
from app.utils.combinatorics import binomial

logger = logging.getLogger(__name__)


def _basis(n: int, degree) -> tuple[Monomial, ...]:
    if degree[0] < 0 or degree[1] < 0:
        return ()
    return monomial_basis(n, degree)


def matrix_shape(prob: FrobeniusProblem) -> tuple[int, int]:
    rows = component_dimension(prob.n, prob.target_degree)
    cols = (prob.n + 1) * component_dimension(prob.n, prob.source_degree)
    return rows, cols


def projected_entries(prob: FrobeniusProblem) -> int:
    """Upper bound on stored entries: one normal form expands into at most C(a+n-1, n-1) terms."""
    _, cols = matrix_shape(prob)
    if prob.a < 0:
        return 0
    return cols * binomial(prob.a + prob.n - 1, prob.n - 1)


def build_matrix(prob: FrobeniusProblem, budget: Optional[int] = None) -> SparseMatrixFp:
    limit = get_settings().MATRIX_BUDGET if budget is None else budget
    rows, cols = matrix_shape(prob)
    projected = projected_entries(prob)
    if projected > limit:
        raise BudgetExceeded(
            f"matrix for n={prob.n}, p={prob.p} is {rows}x{cols} with up to {projected} "
            f"stored entries, above the budget of {limit}"
        )

    n, p = prob.n, prob.p
    source = _basis(n, prob.source_degree)
    target = _basis(n, prob.target_degree)
    row_of = basis_index(target)
    columns = []
    col_keys = []
    for i in range(n + 1):
        factor = y_power(n, i, p)
        for m in source:
            reduced = reduce_monomial(m.times(factor), p)
            columns.append(tuple(sorted((row_of[mon], c) for mon, c in reduced.items())))
            col_keys.append((i, m))
    matrix = SparseMatrixFp(rows, cols, p, columns, row_keys=target, col_keys=col_keys, validate=False)
    logger.info("assembled A for n=%s p=%s: %sx%s, %s entries", n, p, rows, cols, matrix.nnz())
    return matrix


def _matrix(prob: FrobeniusProblem, matrix: Optional[SparseMatrixFp]) -> SparseMatrixFp:
    return build_matrix(prob) if matrix is None else matrix


def corank(prob: FrobeniusProblem, matrix: Optional[SparseMatrixFp] = None) -> int:
    """rows - rank(A) = dim coker A = dim H^{3n-4}(X, L^-1)."""
    matrix = _matrix(prob, matrix)
    return matrix.rows - elimination.rank(matrix)


def witness_vector(prob: FrobeniusProblem, matrix: SparseMatrixFp) -> list[int]:
    t = witness_monomial(prob)
    if t is None:
        raise InvalidInput(f"the witness is undefined for p < n−1 (n={prob.n}, p={prob.p})")
    # t has no X0, so it is already a basis monomial of the target
    row = basis_index(matrix.row_keys)[t]
    vector = [0] * matrix.rows
    vector[row] = 1
    return vector


def witness_in_image(prob: FrobeniusProblem, matrix: Optional[SparseMatrixFp] = None) -> bool:
    matrix = _matrix(prob, matrix)
    solution = elimination.solve_membership(matrix, witness_vector(prob, matrix))
    return solution is not elimination.NotInSpan


def cokernel_representatives(prob: FrobeniusProblem, matrix: Optional[SparseMatrixFp] = None) -> list[Monomial]:
    """Target monomials whose classes form a basis of coker A."""
    matrix = _matrix(prob, matrix)
    return [matrix.row_keys[row] for row in elimination.cokernel_rows(matrix)]


def dump_matrix(prob: FrobeniusProblem, matrix: SparseMatrixFp, path: Path) -> list[Path]:
    """Write the triple file plus ``.rows`` / ``.cols`` sidecars naming every index."""
    path = Path(path)
    dump_triples(matrix, path)
    rows_path = path.with_name(path.name + ".rows")
    cols_path = path.with_name(path.name + ".cols")
    with rows_path.open("w", encoding="utf-8") as handle:
        for index, m in enumerate(matrix.row_keys):
            handle.write(f"{index}\t{format_monomial(m)}\n")
    with cols_path.open("w", encoding="utf-8") as handle:
        for index, (i, m) in enumerate(matrix.col_keys):
            handle.write(f"{index}\tY{i}^{prob.p}\t{format_monomial(m)}\n")
    return [path, rows_path, cols_path]
