"""Exact linear algebra over Q(q): sparse echelon ranks and dense solves."""

from __future__ import annotations

from .cyclotomic import CycNum

__all__ = ["SparseEchelon", "invert_dense", "solve_overdetermined"]


class SparseEchelon:
    """Incremental row-echelon basis for sparse rows {column: CycNum}.

    Rows are normalized so the pivot entry is 1; insertion order is
    deterministic given deterministic input order.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, CycNum]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, CycNum]) -> dict[int, CycNum]:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            pivot_row = self.pivots.get(col)
            if pivot_row is None:
                return row
            factor = row.pop(col)
            for c, v in pivot_row.items():
                if c == col:
                    continue
                prev = row.get(c)
                acc = -(factor * v) if prev is None else prev - factor * v
                if acc:
                    row[c] = acc
                elif prev is not None:
                    del row[c]
        return row

    def insert(self, row: dict[int, CycNum]) -> bool:
        """Reduce and keep the row; True iff it was independent."""
        rem = self.reduce(row)
        if not rem:
            return False
        col = min(rem)
        inv = rem[col].inverse()
        self.pivots[col] = {c: v * inv for c, v in rem.items()}
        return True

    def contains(self, row: dict[int, CycNum]) -> bool:
        return not self.reduce(row)


def rank_of(rows) -> int:
    ech = SparseEchelon()
    for row in rows:
        ech.insert(row)
    return ech.rank


def invert_dense(p: int, matrix: list[list[CycNum]]) -> list[list[CycNum]]:
    """Inverse of a square matrix by Gauss-Jordan elimination."""
    n = len(matrix)
    zero, one = CycNum.zero(p), CycNum.one(p)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ArithmeticError("singular matrix over Q(q)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve_overdetermined(
    p: int, columns: list[list[CycNum]], rhs: list[CycNum]
) -> list[CycNum]:
    """Unique exact solution of (columns) x = rhs; raises if none exists."""
    n_unknowns = len(columns)
    n_rows = len(rhs)
    zero = CycNum.zero(p)
    rows = [[col[r] for col in columns] + [rhs[r]] for r in range(n_rows)]
    ech = SparseEchelon()
    for row in rows:
        sparse = {c: v for c, v in enumerate(row) if v}
        ech.insert(sparse)
    if n_unknowns in ech.pivots:
        raise ArithmeticError("inconsistent linear system over Q(q)")
    solution = [zero] * n_unknowns
    for col in sorted(ech.pivots, reverse=True):
        row = ech.pivots[col]
        acc = row.get(n_unknowns, zero)
        for c, v in row.items():
            if c != col and c != n_unknowns:
                acc = acc - v * solution[c]
        solution[col] = acc
    if len(ech.pivots) < n_unknowns:
        raise ArithmeticError("underdetermined linear system over Q(q)")
    return solution
