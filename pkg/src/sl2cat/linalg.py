"""Exact linear algebra.

Two flavours live here: small labelled matrices over Z[q, q^-1] (change of
basis, functor matrices), and rational row reduction backed by FLINT for the
algebra computations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

import flint

from .laurent import ONE, ZERO, LaurentPoly, Scalar


class LMatrix:
    """Matrix over Z[q, q^-1] with hashable row and column labels.

    Stored sparsely as {row_label: {col_label: LaurentPoly}}. Columns are the
    images of basis vectors, so ``M[r, c]`` is the r-coordinate of M(e_c).
    """

    __slots__ = ("rows", "cols", "_d", "_rix", "_cix")

    def __init__(self, rows: Sequence[Hashable], cols: Sequence[Hashable], data=None):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self._rix = {r: k for k, r in enumerate(self.rows)}
        self._cix = {c: k for k, c in enumerate(self.cols)}
        self._d: dict = {}
        if data:
            for (r, c), v in data.items():
                self[r, c] = v

    @classmethod
    def identity(cls, labels: Sequence[Hashable]) -> "LMatrix":
        m = cls(labels, labels)
        for l in labels:
            m._d[l] = {l: ONE}
        return m

    @classmethod
    def from_columns(cls, rows, cols, columns: dict) -> "LMatrix":
        """columns: {col_label: {row_label: scalar}}."""
        m = cls(rows, cols)
        for c, vec in columns.items():
            for r, v in vec.items():
                m[r, c] = v
        return m

    def __getitem__(self, key) -> LaurentPoly:
        r, c = key
        return self._d.get(r, {}).get(c, ZERO)

    def __setitem__(self, key, value: Scalar):
        r, c = key
        if r not in self._rix or c not in self._cix:
            raise KeyError(key)
        value = LaurentPoly.coerce(value)
        row = self._d.setdefault(r, {})
        if value:
            row[c] = value
        else:
            row.pop(c, None)
            if not row:
                del self._d[r]

    def column(self, c) -> dict:
        return {r: row[c] for r, row in self._d.items() if c in row}

    def row(self, r) -> dict:
        return dict(self._d.get(r, {}))

    def entries(self):
        for r, row in self._d.items():
            for c, v in row.items():
                yield r, c, v

    def __matmul__(self, other: "LMatrix") -> "LMatrix":
        if set(self.cols) != set(other.rows):
            raise ValueError("inner labels differ")
        out = LMatrix(self.rows, other.cols)
        for r, row in self._d.items():
            acc: dict = {}
            for k, a in row.items():
                for c, b in other._d.get(k, {}).items():
                    acc[c] = acc.get(c, ZERO) + a * b
            for c, v in acc.items():
                if v:
                    out._d.setdefault(r, {})[c] = v
        return out

    def apply(self, vec: dict) -> dict:
        """Apply to a column vector given as {col_label: scalar}."""
        out: dict = {}
        for c, x in vec.items():
            x = LaurentPoly.coerce(x)
            if not x:
                continue
            for r, row in self._d.items():
                a = row.get(c)
                if a is not None:
                    out[r] = out.get(r, ZERO) + a * x
        return {r: v for r, v in out.items() if v}

    def scale(self, s: Scalar) -> "LMatrix":
        s = LaurentPoly.coerce(s)
        out = LMatrix(self.rows, self.cols)
        for r, c, v in self.entries():
            out[r, c] = v * s
        return out

    def __add__(self, other: "LMatrix") -> "LMatrix":
        self._check_same(other)
        out = LMatrix(self.rows, self.cols)
        for r, c, v in self.entries():
            out[r, c] = v
        for r, c, v in other.entries():
            out[r, c] = out[r, c] + v
        return out

    def __neg__(self) -> "LMatrix":
        return self.scale(-1)

    def __sub__(self, other: "LMatrix") -> "LMatrix":
        return self + (-other)

    def map(self, f: Callable[[LaurentPoly], LaurentPoly]) -> "LMatrix":
        out = LMatrix(self.rows, self.cols)
        for r, c, v in self.entries():
            out[r, c] = f(v)
        return out

    def bar(self) -> "LMatrix":
        return self.map(LaurentPoly.bar)

    def transpose(self) -> "LMatrix":
        out = LMatrix(self.cols, self.rows)
        for r, c, v in self.entries():
            out[c, r] = v
        return out

    def relabel(self, rows=None, cols=None) -> "LMatrix":
        """Rename labels through the given maps (functions or dicts)."""
        fr = _as_fn(rows)
        fc = _as_fn(cols)
        out = LMatrix([fr(r) for r in self.rows], [fc(c) for c in self.cols])
        for r, c, v in self.entries():
            out[fr(r), fc(c)] = v
        return out

    def reorder(self, rows=None, cols=None) -> "LMatrix":
        out = LMatrix(rows or self.rows, cols or self.cols)
        for r, c, v in self.entries():
            out[r, c] = v
        return out

    def _check_same(self, other):
        if set(self.rows) != set(other.rows) or set(self.cols) != set(other.cols):
            raise ValueError("label sets differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, LMatrix):
            return NotImplemented
        if set(self.rows) != set(other.rows) or set(self.cols) != set(other.cols):
            return False
        return self._d == other._d

    __hash__ = None

    def is_identity(self) -> bool:
        return set(self.rows) == set(self.cols) and self == LMatrix.identity(self.rows)

    def is_zero(self) -> bool:
        return not self._d

    def at_one(self) -> list:
        return [[self[r, c].at_one() for c in self.cols] for r in self.rows]

    def inverse(self) -> "LMatrix":
        """Inverse over Z[q, q^-1] by elimination with unit pivots.

        Every change-of-basis matrix in this package is triangular up to
        reordering with diagonal entries +-q^k, so a unit pivot always exists.
        """
        if len(self.rows) != len(self.cols):
            raise ValueError("not square")
        n = len(self.rows)
        a = [[self[r, c] for c in self.cols] for r in self.rows]
        inv = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        used = [False] * n
        pivot_row_of_col = [None] * n
        for c in range(n):
            piv = None
            for r in range(n):
                if not used[r] and a[r][c].is_unit():
                    piv = r
                    break
            if piv is None:
                raise ArithmeticError("no unit pivot; matrix not invertible over Z[q,q^-1]")
            used[piv] = True
            pivot_row_of_col[c] = piv
            u = a[piv][c] ** -1
            a[piv] = [x * u for x in a[piv]]
            inv[piv] = [x * u for x in inv[piv]]
            for r in range(n):
                if r != piv and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[piv])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[piv])]
        # row pivot_row_of_col[c] of `a` is e_c, so it is row c of the inverse
        out = LMatrix(self.cols, self.rows)
        for c in range(n):
            pr = pivot_row_of_col[c]
            for j in range(n):
                out[self.cols[c], self.rows[j]] = inv[pr][j]
        return out

    def to_json(self) -> dict:
        return {
            "rows": [_label_json(r) for r in self.rows],
            "cols": [_label_json(c) for c in self.cols],
            "entries": [[self[r, c].to_json() for c in self.cols] for r in self.rows],
        }

    def __repr__(self) -> str:
        lines = [f"LMatrix {len(self.rows)}x{len(self.cols)}"]
        for r in self.rows:
            lines.append(f"  {r}: " + ", ".join(f"{c}:{v}" for c, v in self._d.get(r, {}).items()))
        return "\n".join(lines)


def _as_fn(m):
    if m is None:
        return lambda x: x
    if isinstance(m, dict):
        return m.__getitem__
    return m


def _label_json(l):
    if isinstance(l, tuple):
        return list(l)
    return l


def block_diag(blocks: Iterable[LMatrix]) -> LMatrix:
    blocks = list(blocks)
    rows = [r for b in blocks for r in b.rows]
    cols = [c for b in blocks for c in b.cols]
    out = LMatrix(rows, cols)
    for b in blocks:
        for r, c, v in b.entries():
            out[r, c] = v
    return out


# -- rational row reduction

def _to_fmpq_mat(rows: Sequence[Sequence], ncols: int) -> "flint.fmpq_mat":
    flat = []
    for r in rows:
        for x in r:
            if isinstance(x, Fraction):
                flat.append(flint.fmpq(x.numerator, x.denominator))
            else:
                flat.append(x)
    return flint.fmpq_mat(len(rows), ncols, flat)


def _fq(x) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    if all(isinstance(x, int) for r in rows for x in r):
        return flint.fmpz_mat([list(r) for r in rows]).rank()
    return _to_fmpq_mat(rows, ncols).rank()


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form.

    Returns (basis, pivots): the nonzero rows as lists of Fractions and the
    pivot column of each.
    """
    if not rows:
        return [], []
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return [], []
    m, rk = _to_fmpq_mat(rows, ncols).rref()
    basis = []
    pivots = []
    for i in range(rk):
        row = [_fq(m[i, j]) for j in range(ncols)]
        p = next(j for j, x in enumerate(row) if x)
        basis.append(row)
        pivots.append(p)
    return basis, pivots


class Subspace:
    """Row space of a rational matrix, kept in reduced row echelon form."""

    def __init__(self, rows: Sequence[Sequence], ncols: int):
        self.ncols = ncols
        self.basis, self.pivots = rref(list(rows), ncols)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> list:
        """Representative of v modulo the subspace, zero on pivot columns."""
        v = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] -= c * x
        return v

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence, check: bool = True) -> list:
        """Coordinates of v in the echelon basis (v must lie in the span)."""
        c = [Fraction(v[p]) for p in self.pivots]
        if check:
            w = [Fraction(x) for x in v]
            for k, row in zip(c, self.basis):
                if k:
                    for j, x in enumerate(row):
                        if x:
                            w[j] -= k * x
            if any(w):
                raise ValueError("vector not in subspace")
        return c

    def complement_columns(self) -> list:
        ps = set(self.pivots)
        return [j for j in range(self.ncols) if j not in ps]


def solve_columns(mat_cols: Sequence[Sequence], target: Sequence) -> list | None:
    """Solve sum_k x_k * col_k = target over Q; None if inconsistent."""
    n = len(mat_cols)
    m = len(target)
    rows = [[Fraction(mat_cols[k][i]) for k in range(n)] + [Fraction(target[i])] for i in range(m)]
    basis, pivots = rref(rows, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(basis, pivots):
        x[p] = row[n]
    return x
