"""Exact linear algebra over the rationals and the integers.

Everything here runs on arbitrary-precision numbers: `fractions.Fraction`
for rational data and Python ints for integer matrices. No floating point,
no fixed-width arithmetic. The routines are deliberately plain dense-matrix
algorithms; the systems they see are small enough (a few hundred columns)
that asymptotics never matter, while exactness always does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

Rational = Fraction


def format_rational(value: Fraction | int) -> str:
    """Serialize as 'p/q' in lowest terms, or plain 'p' for integers."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def _integer_rows(matrix, rhss):
    """Scale each row of [A|b_1..b_k] by the lcm of denominators, as int rows."""
    rows = []
    for i, row in enumerate(matrix):
        merged = list(row) + [rhs[i] for rhs in rhss]
        if all(isinstance(x, int) for x in merged):
            rows.append(merged)
            continue
        entries = [Fraction(x) for x in merged]
        scale = lcm(*(x.denominator for x in entries)) if entries else 1
        rows.append([int(x * scale) for x in entries])
    return rows


def _eliminate(rows, m, n, width):
    """In-place Bareiss forward elimination on integer rows of length width.

    Pivots are chosen among the first n columns only; any trailing columns
    ride along. Returns the pivot (row, col) list; after return, rows below
    the last pivot are zero in all n pivot-eligible columns.
    """
    pivots: list[tuple[int, int]] = []
    prev = 1
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][col]
        for i in range(r + 1, m):
            factor = rows[i][col]
            # rows with a zero entry still need the piv/prev rescale, or the
            # exact-division invariant breaks on later steps
            if factor == 0 and piv == prev:
                continue
            row_i, row_r = rows[i], rows[r]
            for j in range(col, width):
                row_i[j] = (piv * row_i[j] - factor * row_r[j]) // prev
        pivots.append((r, col))
        prev = piv
        r += 1
        if r == m:
            break
    return pivots


def solve_particular(matrix, rhs) -> list[Fraction] | None:
    """One exact solution of A x = b, or None when the system is inconsistent.

    Fraction-free (Bareiss) forward elimination with partial pivoting by
    first nonzero entry, then rational back-substitution. Free variables are
    set to zero, so the answer is deterministic.
    """
    return solve_many(matrix, [rhs])[0]


def solve_many(matrix, rhss) -> list[list[Fraction] | None]:
    """Solutions of A x = b for several right-hand sides, one elimination.

    Equivalent to [solve_particular(A, b) for b in rhss] but the coefficient
    matrix is eliminated once with every right-hand side riding along;
    consistency checks and back-substitution stay per-system.
    """
    if not rhss:
        return []
    m = len(matrix)
    if m == 0:
        return [[] for _ in rhss]
    n = len(matrix[0])
    for rhs in rhss:
        if len(rhs) != m:
            raise ValueError("right-hand side length does not match row count")
    k = len(rhss)
    rows = _integer_rows(matrix, rhss)
    pivots = _eliminate(rows, m, n, n + k)

    rank = len(pivots)
    solutions: list[list[Fraction] | None] = []
    for t in range(k):
        b_col = n + t
        if any(rows[i][b_col] != 0 for i in range(rank, m)):
            solutions.append(None)
            continue
        x = [Fraction(0)] * n
        for row_idx, col in reversed(pivots):
            row = rows[row_idx]
            acc = Fraction(row[b_col])
            for j in range(col + 1, n):
                if row[j]:
                    acc -= row[j] * x[j]
            x[col] = acc / row[col]
        solutions.append(x)
    return solutions


def nullspace_basis(matrix) -> list[list[Fraction]]:
    """A basis of the rational nullspace of A, one vector per free column."""
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    rows = [[Fraction(x) for x in row] for row in matrix]

    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(n):
        pivot_row = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][col]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append((r, col))
        r += 1
        if r == m:
            break

    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for row_idx, col in pivots:
            vec[col] = -rows[row_idx][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class SNFResult:
    """A = U S V with U, V unimodular and S diagonal, s_i | s_{i+1}, s_i >= 0."""

    U: list
    S: list
    V: list

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.S[0]) if self.S else 0))]


class _SmithWorkspace:
    """Row/column reduction of an integer matrix with transform accumulation.

    Row operations are mirrored on an optional right-hand side (giving R b
    for the accumulated row transform R) and inversely on U, column
    operations inversely on V, so that A = U S V holds at every step.
    """

    def __init__(self, matrix, rhs=None):
        self.S = [[int(x) for x in row] for row in matrix]
        self.m = len(self.S)
        self.n = len(self.S[0]) if self.S else 0
        self.U = [[int(i == j) for j in range(self.m)] for i in range(self.m)]
        self.V = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        self.c = None if rhs is None else [int(x) for x in rhs]

    def swap_rows(self, i, j):
        if i == j:
            return
        self.S[i], self.S[j] = self.S[j], self.S[i]
        for row in self.U:
            row[i], row[j] = row[j], row[i]
        if self.c is not None:
            self.c[i], self.c[j] = self.c[j], self.c[i]

    def add_row(self, i, j, k):
        """row_i += k * row_j on S; the inverse operation lands on U."""
        if k == 0:
            return
        si, sj = self.S[i], self.S[j]
        for col in range(self.n):
            si[col] += k * sj[col]
        for row in self.U:
            row[j] -= k * row[i]
        if self.c is not None:
            self.c[i] += k * self.c[j]

    def negate_row(self, i):
        self.S[i] = [-x for x in self.S[i]]
        for row in self.U:
            row[i] = -row[i]
        if self.c is not None:
            self.c[i] = -self.c[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for row in self.S:
            row[i], row[j] = row[j], row[i]
        self.V[i], self.V[j] = self.V[j], self.V[i]

    def add_col(self, j, i, k):
        """col_j += k * col_i on S; the inverse operation lands on V."""
        if k == 0:
            return
        for row in self.S:
            row[j] += k * row[i]
        vi, vj = self.V[i], self.V[j]
        for col in range(len(vi)):
            vi[col] -= k * vj[col]

    def reduce(self):
        S, m, n = self.S, self.m, self.n
        t = 0
        while t < min(m, n):
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = abs(S[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, bi, bj = best
            self.swap_rows(t, bi)
            self.swap_cols(t, bj)

            dirty = True
            while dirty:
                dirty = False
                piv = S[t][t]
                for i in range(t + 1, m):
                    if S[i][t]:
                        self.add_row(i, t, -(S[i][t] // piv))
                        if S[i][t]:
                            # Remainder is smaller than the pivot; promote it.
                            self.swap_rows(t, i)
                            dirty = True
                            break
                if dirty:
                    continue
                for j in range(t + 1, n):
                    if S[t][j]:
                        self.add_col(j, t, -(S[t][j] // piv))
                        if S[t][j]:
                            self.swap_cols(t, j)
                            dirty = True
                            break
                if dirty:
                    continue
                piv = S[t][t]
                for i in range(t + 1, m):
                    bad = next((j for j in range(t + 1, n) if S[i][j] % piv), None)
                    if bad is not None:
                        self.add_row(t, i, 1)
                        dirty = True
                        break
            t += 1
        for i in range(min(m, n)):
            if S[i][i] < 0:
                self.negate_row(i)


def smith_normal_form(matrix) -> SNFResult:
    """Smith normal form with both unimodular transforms, A = U S V."""
    ws = _SmithWorkspace(matrix)
    ws.reduce()
    return SNFResult(U=ws.U, S=ws.S, V=ws.V)


def minimal_scalar_integer_solution(matrix, rhs) -> int | None:
    """Least d >= 1 such that A x = d b has an integer solution x.

    Returns None when A x = b is not even rationally solvable. Writing
    A = U S V and c = U^{-1} b, solvability forces c to vanish on the zero
    rows of S, and each pivot row contributes s_i / gcd(s_i, c_i) to d.
    """
    ws = _SmithWorkspace(matrix, rhs)
    ws.reduce()
    diag = [ws.S[i][i] for i in range(min(ws.m, ws.n))]
    d = 1
    for i in range(ws.m):
        s = diag[i] if i < len(diag) else 0
        if s == 0:
            if ws.c[i] != 0:
                return None
        elif ws.c[i] != 0:
            d = lcm(d, s // gcd(s, ws.c[i]))
    return d


def integral_solution_exists(matrix, rhs) -> bool:
    """Whether A x = b has an integer solution."""
    return minimal_scalar_integer_solution(matrix, rhs) == 1


def mat_mul(a, b):
    """Exact matrix product, for reconstruction checks."""
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            aik = ai[k]
            if aik == 0:
                continue
            bk = b[k]
            oi = out[i]
            for j in range(cols):
                oi[j] += aik * bk[j]
    return out
