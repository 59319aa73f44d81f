"""Dense exact linear algebra over the rationals.

All entries are ``fractions.Fraction``, so every result is exact: a kernel
vector really multiplies to zero, a rank really is the rank, and an inverse
really inverts.  Matrices are immutable after construction and all operations
return new objects, so values can be shared freely.

Row reduction skips zero work (only nonzero positions of the pivot row are
touched), which keeps elimination fast on the sparse systems that dominate
this package (cocycle and derivation equations).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction


def as_fraction(x) -> Fraction:
    """Coerce an int, string ("3/4") or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def vector(entries: Iterable) -> tuple[Fraction, ...]:
    return tuple(as_fraction(x) for x in entries)


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = as_fraction(c)
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


class RationalMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        grid = tuple(tuple(as_fraction(x) for x in row) for row in data)
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("ragged rows")
        self.data = grid
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Iterable) -> "RationalMatrix":
        d = vector(entries)
        n = len(d)
        return cls([[d[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        return cls(rows)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable]) -> "RationalMatrix":
        cols = [vector(c) for c in columns]
        if not cols:
            return cls([])
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.data)) if self.rows else RationalMatrix([])

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._same_shape(other)
        return RationalMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "RationalMatrix":
        c = as_fraction(c)
        return RationalMatrix([[c * a for a in row] for row in self.data])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = other.transpose().data
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.data]
        )

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        v = vector(v)
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.data)

    def augment(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RationalMatrix([r + s for r, s in zip(self.data, other.data)])

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.data for a in row)

    def is_antisymmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.data[i][j] == -self.data[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def _same_shape(self, other: "RationalMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        """Reduced row-echelon form and the pivot column indices."""
        m = [list(row) for row in self.data]
        reduced, pivots = _rref_inplace(m, self.cols)
        return RationalMatrix(reduced), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right kernel {x : A @ x = 0}, one vector per free column."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [Q(0)] * self.cols
            v[f] = Q(1)
            for r, p in enumerate(pivots):
                v[p] = -red.data[r][f]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence) -> tuple[Fraction, ...] | None:
        """One exact solution of A @ x = b, or None if inconsistent."""
        b = vector(b)
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        aug = self.augment(RationalMatrix([[x] for x in b]))
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [Q(0)] * self.cols
        for r, p in enumerate(pivots):
            x[p] = red.data[r][self.cols]
        return tuple(x)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "RationalMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        red, pivots = self.augment(RationalMatrix.identity(n)).rref()
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise ValueError("matrix is singular")
        return RationalMatrix([row[n:] for row in red.data])

    def determinant(self) -> Fraction:
        """Determinant by fraction-exact Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [list(row) for row in self.data]
        det = Q(1)
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c] != 0), None)
            if p is None:
                return Q(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            support = [j for j in range(c, n) if m[c][j] != 0]
            for r in range(c + 1, n):
                f = m[r][c]
                if f == 0:
                    continue
                f *= inv
                for j in support:
                    m[r][j] -= f * m[c][j]
        return det

    def pfaffian(self) -> Fraction:
        """Pfaffian of an antisymmetric matrix of even size.

        Recursive first-row expansion with memoisation over index subsets;
        satisfies pfaffian()**2 == determinant().
        """
        if self.rows != self.cols:
            raise ValueError("pfaffian of a non-square matrix")
        if self.rows % 2 != 0:
            raise ValueError("pfaffian requires even size")
        if not self.is_antisymmetric():
            raise ValueError("pfaffian requires an antisymmetric matrix")
        data = self.data
        memo: dict[tuple[int, ...], Fraction] = {}

        def pf(active: tuple[int, ...]) -> Fraction:
            if not active:
                return Q(1)
            cached = memo.get(active)
            if cached is not None:
                return cached
            i0, rest = active[0], active[1:]
            total = Q(0)
            sign = 1
            for pos, j in enumerate(rest):
                a = data[i0][j]
                if a != 0:
                    sub = tuple(x for x in rest if x != j)
                    term = a * pf(sub)
                    total += term if (pos % 2 == 0) else -term
            memo[active] = total
            return total

        return pf(tuple(range(self.rows)))

    # -- matrix analysis -----------------------------------------------------

    def flatten(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.data for x in row)

    def minimal_polynomial(self) -> tuple[Fraction, ...]:
        """Monic minimal polynomial, coefficients in ascending degree order.

        Found as the first linear dependency among I, A, A**2, ...
        """
        if self.rows != self.cols:
            raise ValueError("minimal polynomial of a non-square matrix")
        n = self.rows
        if n == 0:
            return (Q(0), Q(1))  # x, by convention
        powers = [RationalMatrix.identity(n)]
        for k in range(1, n + 2):
            nxt = powers[-1] @ self
            system = RationalMatrix.from_columns([p.flatten() for p in powers])
            sol = system.solve(nxt.flatten())
            if sol is not None:
                return tuple(-c for c in sol) + (Q(1),)
            powers.append(nxt)
        raise AssertionError("no minimal polynomial of degree <= n found")


# -- univariate polynomial helpers (for semisimplicity and eigenvalues) ------
#
# A univariate polynomial over Q is a tuple of Fractions in ascending degree
# order with a nonzero leading coefficient (the zero polynomial is ()).


def upoly_normalize(coeffs: Sequence) -> tuple[Fraction, ...]:
    c = [as_fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def upoly_degree(p: Sequence[Fraction]) -> int:
    return len(p) - 1


def upoly_eval(p: Sequence[Fraction], x) -> Fraction:
    x = as_fraction(x)
    acc = Q(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def upoly_derivative(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return upoly_normalize([k * p[k] for k in range(1, len(p))])


def upoly_mod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    a = list(upoly_normalize(a))
    b = upoly_normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial modulo zero")
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def upoly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    a, b = upoly_normalize(a), upoly_normalize(b)
    while b:
        a, b = b, upoly_mod(a, b)
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def upoly_is_squarefree(p: Sequence[Fraction]) -> bool:
    p = upoly_normalize(p)
    if upoly_degree(p) <= 1:
        return True
    return upoly_degree(upoly_gcd(p, upoly_derivative(p))) == 0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def upoly_rational_roots(p: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of p, each listed once, in increasing order."""
    p = upoly_normalize(p)
    if not p:
        raise ValueError("the zero polynomial has every root")
    roots = []
    coeffs = list(p)
    # strip factors of x
    if coeffs and coeffs[0] == 0:
        roots.append(Q(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) <= 1:
        return sorted(roots)
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // _gcd_int(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Q(num, den), Q(-num, den)):
                if cand not in roots and upoly_eval(coeffs, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def upoly_splits_over_q(p: Sequence[Fraction]) -> bool:
    """True iff p factors into linear terms over the rationals."""
    p = upoly_normalize(p)
    if upoly_degree(p) <= 0:
        return True
    coeffs = list(p)
    for r in upoly_rational_roots(p):
        while len(coeffs) > 1 and upoly_eval(coeffs, r) == 0:
            coeffs = _deflate(coeffs, r)
    return upoly_degree(upoly_normalize(coeffs)) <= 0


def _deflate(coeffs: Sequence[Fraction], r: Fraction) -> list[Fraction]:
    """Divide by (x - r) via synthetic division, assuming r is a root."""
    n = len(coeffs) - 1
    quot = [Q(0)] * n
    carry = coeffs[n]
    quot[n - 1] = carry
    for k in range(n - 1, 0, -1):
        carry = coeffs[k] + carry * r
        quot[k - 1] = carry
    return quot


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _rref_inplace(m: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = len(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        if inv != 1:
            for j in range(c, cols):
                if m[r][j] != 0:
                    m[r][j] *= inv
        support = [j for j in range(c, cols) if m[r][j] != 0]
        for i in range(rows):
            if i == r:
                continue
            f = m[i][c]
            if f == 0:
                continue
            row_i, row_r = m[i], m[r]
            for j in support:
                row_i[j] -= f * row_r[j]
        pivots.append(c)
        r += 1
    return m, pivots
