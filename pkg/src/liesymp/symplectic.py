"""Closed 2-forms, cocycle spaces, and the Pfaffian symplectic decision.

Sign conventions (fixed once, used everywhere):

* one-forms:  (d a)(x, y) = -a([x, y])
* two-forms:  (d w)(x, y, z) = -( w([x,y], z) + w([y,z], x) + w([z,x], y) )

With these choices d(d a) = 0 holds identically, and only the zero set of d
matters for cocycle spaces, so the decision procedure is unaffected by the
global sign.

* matrices:   w = sum_{i<j} M[i][j] e^i ^ e^j with (e^i ^ e^j)(e_i, e_j) = 1,
  so the literal top wedge power satisfies w^m = m! * Pf(M) * vol.

A two-form is *symplectic* when it is closed and its Pfaffian is nonzero;
existence over Q is decided by testing whether the Pfaffian of the generic
closed form is the zero polynomial, and witnesses are found by enumerating
integer parameter points in growing max-norm shells (deterministic order).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .liealg import LieAlgebra, Subspace
from .linalg import Q, RationalMatrix, as_fraction, is_zero_vector, vector
from .poly import MultiPoly, PolyMatrix

DEFAULT_WITNESS_BOUND = 16
WITNESS_BOUND_ENV = "LIESYMP_WITNESS_BOUND"


class WitnessSearchExhausted(RuntimeError):
    """No integer witness found inside the search box although one exists."""


def witness_bound() -> int:
    raw = os.environ.get(WITNESS_BOUND_ENV)
    if raw is None:
        return DEFAULT_WITNESS_BOUND
    try:
        value = int(raw)
        if value < 1:
            raise ValueError
    except ValueError:
        raise ValueError(f"{WITNESS_BOUND_ENV} must be a positive integer, got {raw!r}")
    return value


class TwoForm:
    """Antisymmetric bilinear form; entries are Fractions or MultiPoly."""

    __slots__ = ("dim", "entries", "variables")

    def __init__(self, dim: int, entries: Sequence[Sequence], variables: Sequence[str] = ()):
        grid = tuple(tuple(_as_entry(x) for x in row) for row in entries)
        if len(grid) != dim or any(len(r) != dim for r in grid):
            raise ValueError("entry grid does not match dimension")
        for i in range(dim):
            if not _entry_is_zero(grid[i][i]):
                raise ValueError("two-form has a nonzero diagonal entry")
            for j in range(i + 1, dim):
                if not _entry_is_zero(_entry_add(grid[i][j], grid[j][i])):
                    raise ValueError("two-form entries are not antisymmetric")
        self.dim = dim
        self.entries = grid
        self.variables = tuple(variables)

    @classmethod
    def from_pairs(cls, dim: int, pairs: Mapping[tuple[int, int], object], variables: Sequence[str] = ()) -> "TwoForm":
        grid: list[list] = [[Q(0)] * dim for _ in range(dim)]
        for (i, j), value in pairs.items():
            if i == j:
                raise ValueError("diagonal coefficient in a two-form")
            v = _as_entry(value)
            if i < j:
                grid[i][j] = _entry_add(grid[i][j], v)
                grid[j][i] = _entry_add(grid[j][i], _entry_neg(v))
            else:
                grid[j][i] = _entry_add(grid[j][i], _entry_neg(v))
                grid[i][j] = _entry_add(grid[i][j], v)
        return cls(dim, grid, variables)

    @classmethod
    def zero(cls, dim: int) -> "TwoForm":
        return cls(dim, [[Q(0)] * dim for _ in range(dim)])

    def is_concrete(self) -> bool:
        return all(isinstance(x, Fraction) for row in self.entries for x in row)

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def value(self, x: Sequence, y: Sequence):
        """w(x, y) for coordinate vectors; exact whatever the entry type."""
        x, y = vector(x), vector(y)
        total = 0
        for i in range(self.dim):
            if x[i] == 0:
                continue
            for j in range(self.dim):
                if y[j] == 0:
                    continue
                e = self.entries[i][j]
                if not _entry_is_zero(e):
                    total = total + (x[i] * y[j]) * e
        return total if total != 0 else (Q(0) if self.is_concrete() else MultiPoly.zero())

    def matrix(self) -> RationalMatrix:
        if not self.is_concrete():
            raise ValueError("parametric two-form has no rational matrix")
        return RationalMatrix(self.entries)

    def poly_matrix(self) -> PolyMatrix:
        return PolyMatrix(self.entries)

    def pfaffian(self):
        """Pfaffian of the form's matrix (Fraction if concrete, else MultiPoly)."""
        if self.dim % 2 != 0:
            raise ValueError("pfaffian requires even dimension")
        if self.is_concrete():
            return self.matrix().pfaffian()
        return self.poly_matrix().pfaffian()

    def specialize(self, assignment: Mapping[str, Fraction]) -> "TwoForm":
        grid = [
            [
                x.evaluate(assignment) if isinstance(x, MultiPoly) else x
                for x in row
            ]
            for row in self.entries
        ]
        return TwoForm(self.dim, grid)

    def add(self, other: "TwoForm") -> "TwoForm":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        grid = [
            [_entry_add(a, b) for a, b in zip(r, s)]
            for r, s in zip(self.entries, other.entries)
        ]
        variables = self.variables or other.variables
        return TwoForm(self.dim, grid, variables)

    def scale(self, c) -> "TwoForm":
        grid = [[c * x if not _entry_is_zero(x) else x for x in row] for row in self.entries]
        return TwoForm(self.dim, grid, self.variables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoForm):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(
            _entry_is_zero(_entry_add(a, _entry_neg(b)))
            for r, s in zip(self.entries, other.entries)
            for a, b in zip(r, s)
        )

    def __repr__(self) -> str:
        kind = "concrete" if self.is_concrete() else f"parametric({len(self.variables)})"
        return f"TwoForm(dim {self.dim}, {kind})"


def _as_entry(x):
    if isinstance(x, MultiPoly):
        return x
    return as_fraction(x)


def _entry_is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, MultiPoly) else x == 0


def _entry_add(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return a + b


def _entry_neg(a):
    return -a


# -- exterior differentials ---------------------------------------------------


def d_one_form(g: LieAlgebra, alpha: Sequence) -> TwoForm:
    """(d a)(x, y) = -a([x, y]), extended bilinearly."""
    a = vector(alpha)
    if len(a) != g.dim:
        raise ValueError("covector length does not match algebra dimension")
    grid = [[Q(0)] * g.dim for _ in range(g.dim)]
    for (i, j), coeffs in g.table.items():
        v = -sum(c * a[k] for k, c in coeffs.items())
        if v != 0:
            grid[i][j] = v
            grid[j][i] = -v
    return TwoForm(g.dim, grid)


def d_two_form(g: LieAlgebra, w: TwoForm) -> dict[tuple[int, int, int], object]:
    """Values of dw on basis triples i < j < k (zero triples omitted).

    dw(x,y,z) = -( w([x,y],z) + w([y,z],x) + w([z,x],y) ); the sign makes
    d_two_form(d_one_form(a)) vanish identically.
    """
    if w.dim != g.dim:
        raise ValueError("form dimension does not match algebra dimension")
    n = g.dim
    out: dict[tuple[int, int, int], object] = {}
    for i in range(n):
        for j in range(i + 1, n):
            bij = g.bracket_basis(i, j)
            for k in range(j + 1, n):
                total = 0
                for m, c in bij.items():
                    e = w.entries[m][k]
                    if not _entry_is_zero(e):
                        total = total + c * e
                for m, c in g.bracket_basis(j, k).items():
                    e = w.entries[m][i]
                    if not _entry_is_zero(e):
                        total = total + c * e
                for m, c in g.bracket_basis(k, i).items():
                    e = w.entries[m][j]
                    if not _entry_is_zero(e):
                        total = total + c * e
                if not _entry_is_zero(_as_entry(total) if isinstance(total, int) else total):
                    out[(i, j, k)] = -total
    return out


def is_closed(g: LieAlgebra, w: TwoForm) -> bool:
    return not d_two_form(g, w)


# -- cocycle spaces -----------------------------------------------------------


def _pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _form_from_coords(n: int, pairs: Sequence[tuple[int, int]], coords: Sequence[Fraction]) -> TwoForm:
    return TwoForm.from_pairs(n, {p: c for p, c in zip(pairs, coords) if c != 0})


def _coords_from_form(w: TwoForm, pairs: Sequence[tuple[int, int]]) -> tuple[Fraction, ...]:
    return tuple(w.entries[i][j] for (i, j) in pairs)


@dataclass(frozen=True)
class CocycleSpace:
    """Closed 2-forms (Z^2), exact 2-forms (B^2) and their dimensions."""

    algebra: LieAlgebra
    z2_basis: tuple[TwoForm, ...]
    b2_basis: tuple[TwoForm, ...]
    b2_preimages: tuple[tuple[Fraction, ...], ...]

    @property
    def dims(self) -> tuple[int, int, int]:
        z, b = len(self.z2_basis), len(self.b2_basis)
        return (z, b, z - b)


def cocycle_space(g: LieAlgebra) -> CocycleSpace:
    """Z^2 as the kernel of d on antisymmetric forms; B^2 as the image of d
    on covectors, with a covector preimage recorded for each basis element."""
    n = g.dim
    pairs = _pair_index(n)
    pair_pos = {p: idx for idx, p in enumerate(pairs)}

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            bij = g.bracket_basis(i, j)
            for k in range(j + 1, n):
                row = [Q(0)] * len(pairs)

                def put(m: int, t: int, c: Fraction) -> None:
                    if m == t:
                        return
                    if m < t:
                        row[pair_pos[(m, t)]] += c
                    else:
                        row[pair_pos[(t, m)]] -= c

                for m, c in bij.items():
                    put(m, k, c)
                for m, c in g.bracket_basis(j, k).items():
                    put(m, i, c)
                for m, c in g.bracket_basis(k, i).items():
                    put(m, j, c)
                if any(x != 0 for x in row):
                    rows.append(row)

    if rows:
        kernel = RationalMatrix(rows).kernel_basis()
    else:
        kernel = [tuple(Q(1) if t == s else Q(0) for t in range(len(pairs))) for s in range(len(pairs))]
    z2 = tuple(_form_from_coords(n, pairs, v) for v in kernel)

    image_rows = []
    for i in range(n):
        w = d_one_form(g, g.basis_vector(i))
        image_rows.append(_coords_from_form(w, pairs) + g.basis_vector(i))
    b2_basis = []
    b2_pre = []
    if image_rows:
        red, _ = RationalMatrix(image_rows).rref()
        for row in red.data:
            left, right = row[: len(pairs)], row[len(pairs) :]
            if is_zero_vector(left):
                continue
            b2_basis.append(_form_from_coords(n, pairs, left))
            b2_pre.append(tuple(right))
    return CocycleSpace(g, z2, tuple(b2_basis), tuple(b2_pre))


def generic_cocycle(cs: CocycleSpace) -> TwoForm:
    """sum_i t_i * (i-th Z^2 basis element) with fresh parameters t1..tm."""
    return _generic_combination(cs.algebra.dim, cs.z2_basis)


def _generic_combination(n: int, forms: Sequence[TwoForm]) -> TwoForm:
    m = len(forms)
    names = tuple(f"t{i + 1}" for i in range(m))
    params = MultiPoly.variables(names)
    grid: list[list] = [[MultiPoly.zero() for _ in range(n)] for _ in range(n)]
    for t, w in zip(params, forms):
        for i in range(n):
            for j in range(n):
                c = w.entries[i][j]
                if c != 0:
                    grid[i][j] = grid[i][j] + c * t
    return TwoForm(n, grid, names)


# -- witness search -----------------------------------------------------------


def _shell_points(m: int, radius: int) -> Iterator[tuple[int, ...]]:
    """Integer points of max-norm exactly ``radius``, lexicographically.

    Coordinates range over -radius..radius in increasing order; points whose
    maximum absolute coordinate falls short of the shell are pruned.
    """
    point = [0] * m

    def rec(pos: int, touched: bool) -> Iterator[tuple[int, ...]]:
        if pos == m:
            if touched:
                yield tuple(point)
            return
        for v in range(-radius, radius + 1):
            if not touched and pos == m - 1 and abs(v) != radius:
                continue
            point[pos] = v
            yield from rec(pos + 1, touched or abs(v) == radius)

    yield from rec(0, False)


def find_nonvanishing_point(
    p: MultiPoly, names: Sequence[str], bound: int | None = None
) -> dict[str, Fraction]:
    """First integer point (by max-norm shell, then lex) where p is nonzero.

    A nonzero polynomial over Q always has one; the search box is capped at
    ``bound`` shells (default from LIESYMP_WITNESS_BOUND).
    """
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    if bound is None:
        bound = witness_bound()
    names = tuple(names)
    if not names:
        return {}
    for radius in range(1, bound + 1):
        for point in _shell_points(len(names), radius):
            assignment = {nm: Q(v) for nm, v in zip(names, point)}
            if p.evaluate(assignment) != 0:
                return assignment
    raise WitnessSearchExhausted(
        f"no witness inside the +-{bound} integer box; the polynomial is nonzero, "
        f"so raising {WITNESS_BOUND_ENV} (default {DEFAULT_WITNESS_BOUND}) will find one"
    )


# -- the decision -------------------------------------------------------------


@dataclass(frozen=True)
class SymplecticVerdict:
    """Outcome of the symplectic / exact-symplectic decision for one algebra.

    ``exists`` and ``exact_exists`` are "yes", "no" or "odd" (odd dimension,
    not applicable).  When "yes", the matching witness fields hold a concrete
    closed two-form with nonzero Pfaffian; ``exact_witness`` is d of the
    recorded ``exact_one_form``.
    """

    dim: int
    exists: str
    pfaffian: MultiPoly
    witness: TwoForm | None
    exact_exists: str
    exact_pfaffian: MultiPoly
    exact_witness: TwoForm | None
    exact_one_form: tuple[Fraction, ...] | None
    cocycle_dims: tuple[int, int, int]
    degenerate: bool = False


def decide_symplectic(g: LieAlgebra, bound: int | None = None) -> SymplecticVerdict:
    """Decide symplectic existence through the generic-cocycle Pfaffian.

    Odd dimension short-circuits to "odd" with a zero Pfaffian (an odd
    antisymmetric matrix is always singular).  Dimension zero is vacuously
    symplectic and flagged as degenerate.
    """
    n = g.dim
    if n == 0:
        empty = TwoForm.zero(0)
        one = MultiPoly.constant(1)
        return SymplecticVerdict(
            dim=0,
            exists="yes",
            pfaffian=one,
            witness=empty,
            exact_exists="yes",
            exact_pfaffian=one,
            exact_witness=empty,
            exact_one_form=(),
            cocycle_dims=(0, 0, 0),
            degenerate=True,
        )
    cs = cocycle_space(g)
    if n % 2 != 0:
        zero = MultiPoly.zero()
        return SymplecticVerdict(
            dim=n,
            exists="odd",
            pfaffian=zero,
            witness=None,
            exact_exists="odd",
            exact_pfaffian=zero,
            exact_witness=None,
            exact_one_form=None,
            cocycle_dims=cs.dims,
        )

    generic = generic_cocycle(cs)
    pf = generic.poly_matrix().pfaffian()
    witness = None
    if not pf.is_zero():
        point = find_nonvanishing_point(pf, generic.variables, bound)
        witness = generic.specialize(point)

    exact_generic = _generic_combination(n, cs.b2_basis)
    exact_pf = exact_generic.poly_matrix().pfaffian()
    exact_witness = None
    exact_one_form = None
    if not exact_pf.is_zero():
        point = find_nonvanishing_point(exact_pf, exact_generic.variables, bound)
        exact_witness = exact_generic.specialize(point)
        alpha = [Q(0)] * n
        for name, pre in zip(exact_generic.variables, cs.b2_preimages):
            c = point[name]
            if c:
                alpha = [a + c * x for a, x in zip(alpha, pre)]
        exact_one_form = tuple(alpha)

    return SymplecticVerdict(
        dim=n,
        exists="yes" if not pf.is_zero() else "no",
        pfaffian=pf,
        witness=witness,
        exact_exists="yes" if not exact_pf.is_zero() else "no",
        exact_pfaffian=exact_pf,
        exact_witness=exact_witness,
        exact_one_form=exact_one_form,
        cocycle_dims=cs.dims,
    )


@dataclass(frozen=True)
class ExactSymplecticResult:
    exists: str
    one_form: tuple[Fraction, ...] | None
    two_form: TwoForm | None


def decide_exact_symplectic(g: LieAlgebra, bound: int | None = None) -> ExactSymplecticResult:
    """Frobenius detection: the Pfaffian procedure restricted to span(B^2)."""
    verdict = decide_symplectic(g, bound)
    return ExactSymplecticResult(verdict.exact_exists, verdict.exact_one_form, verdict.exact_witness)


# -- geometry helpers -----------------------------------------------------------


def pullback(g: LieAlgebra, t: RationalMatrix, w: TwoForm) -> TwoForm:
    """(T* w)(x, y) = w(Tx, Ty); as matrices, T^t M T."""
    if t.rows != g.dim or t.cols != g.dim or w.dim != g.dim:
        raise ValueError("dimension mismatch")
    if not t.is_invertible():
        raise ValueError("pullback requires an invertible map")
    n = g.dim
    grid: list[list] = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            total = 0
            for a in range(n):
                ta = t[a, i]
                if ta == 0:
                    continue
                for b in range(n):
                    tb = t[b, j]
                    if tb == 0:
                        continue
                    e = w.entries[a][b]
                    if not _entry_is_zero(e):
                        total = total + (ta * tb) * e
            if isinstance(total, int):
                total = Q(total)
            grid[i][j] = total
            grid[j][i] = _entry_neg(total)
    return TwoForm(n, grid, w.variables)


def is_automorphism(g: LieAlgebra, t: RationalMatrix) -> bool:
    """T[x, y] = [Tx, Ty] on all basis pairs, with T invertible."""
    if t.rows != g.dim or t.cols != g.dim or not t.is_invertible():
        return False
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = t.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)))
            rhs = g.bracket(t.column(i), t.column(j))
            if lhs != rhs:
                return False
    return True


def is_lagrangian_ideal(g: LieAlgebra, w: TwoForm, sub: Subspace) -> bool:
    """An ideal of half the dimension on which the form vanishes identically."""
    if not w.is_concrete():
        raise ValueError("lagrangian test requires a concrete form")
    if g.dim % 2 != 0:
        raise ValueError("lagrangian test requires even dimension")
    if sub.ambient_dim != g.dim:
        raise ValueError("subspace ambient dimension mismatch")
    if sub.dim != g.dim // 2:
        return False
    if not g.is_ideal(sub):
        return False
    for a in range(sub.dim):
        for b in range(a + 1, sub.dim):
            if w.value(sub.basis[a], sub.basis[b]) != 0:
                return False
    return True


def top_power(w: TwoForm) -> Fraction:
    """Coefficient c of the basis volume form in the literal wedge power w^m.

    Computed by expanding the wedge product directly (independent of the
    Pfaffian recursion); equals m! * Pf(M) under this package's conventions.
    """
    if not w.is_concrete():
        raise ValueError("top power requires a concrete form")
    if w.dim % 2 != 0:
        raise ValueError("top power requires even dimension")
    n = w.dim
    m = n // 2
    if n == 0:
        return Q(1)
    pair_terms = [
        ((i, j), w.entries[i][j])
        for i in range(n)
        for j in range(i + 1, n)
        if w.entries[i][j] != 0
    ]
    acc: dict[tuple[int, ...], Fraction] = {(): Q(1)}
    for _ in range(m):
        nxt: dict[tuple[int, ...], Fraction] = {}
        for subset, coeff in acc.items():
            taken = set(subset)
            for (i, j), c in pair_terms:
                if i in taken or j in taken:
                    continue
                sign = 1
                cnt_i = sum(1 for s in subset if s > i)
                cnt_j = sum(1 for s in subset if s > j)
                if (cnt_i + cnt_j) % 2:
                    sign = -1
                key = tuple(sorted(subset + (i, j)))
                val = nxt.get(key, Q(0)) + sign * coeff * c
                if val == 0:
                    nxt.pop(key, None)
                else:
                    nxt[key] = val
        acc = nxt
    return acc.get(tuple(range(n)), Q(0))
