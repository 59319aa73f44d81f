"""Lie algebras given by rational structure constants.

A :class:`LieAlgebra` stores, for each basis pair i < j, the expansion of
[e_i, e_j] in the basis; pairs that never appear bracket to zero and the
(j, i) orientation is implied by antisymmetry.  All vectors are plain tuples
of Fractions in the algebra's basis coordinates.

:class:`Subspace` keeps its basis in reduced echelon form, which makes
equality, membership and dimension exact and canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import Q, RationalMatrix, as_fraction, is_zero_vector, vector


class Subspace:
    """A linear subspace of Q^n with a canonical (reduced echelon) basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if rows:
            red, pivots = RationalMatrix(rows).rref()
            self.basis = tuple(r for r in red.data if not is_zero_vector(r))
            self.pivots = pivots
        else:
            self.basis = ()
            self.pivots = ()
        self.ambient_dim = ambient_dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence) -> bool:
        v = list(vector(v))
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c != 0:
                for j in range(p, self.ambient_dim):
                    v[j] -= c * row[j]
        return all(x == 0 for x in v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, RationalMatrix.identity(n).data)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q, defined by structure constants.

    ``table`` maps basis pairs (i, j) with i < j to sparse coefficient maps
    {k: c} meaning [e_i, e_j] = sum_k c * e_k.  Construction accepts either
    orientation and normalises; a pair bracketing to zero is simply omitted.
    """

    __slots__ = ("dim", "labels", "table")

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, Fraction]] | None = None,
        labels: Sequence[str] | None = None,
    ):
        if labels is None:
            labels = tuple(f"e{i + 1}" for i in range(dim))
        labels = tuple(labels)
        if len(labels) != dim:
            raise ValueError("label count does not match dimension")
        if len(set(labels)) != dim:
            raise ValueError("duplicate basis labels")
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        if brackets:
            for (i, j), coeffs in brackets.items():
                if not (0 <= i < dim and 0 <= j < dim):
                    raise ValueError(f"basis index out of range in pair ({i}, {j})")
                if i == j:
                    if any(as_fraction(c) != 0 for c in coeffs.values()):
                        raise ValueError(f"[e_{i}, e_{i}] must be zero")
                    continue
                sign = 1
                if i > j:
                    i, j, sign = j, i, -1
                slot = table.setdefault((i, j), {})
                for k, c in coeffs.items():
                    if not 0 <= k < dim:
                        raise ValueError(f"component index {k} out of range")
                    c = sign * as_fraction(c)
                    c += slot.get(k, Q(0))
                    if c == 0:
                        slot.pop(k, None)
                    else:
                        slot[k] = c
                if not slot:
                    del table[(i, j)]
        self.dim = dim
        self.labels = labels
        self.table = table

    # -- bracket --------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coefficient map."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), {}))
        return {k: -c for k, c in self.table.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j).get(k, Q(0))

    def bracket(self, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
        """Bilinear antisymmetric extension of the structure constants."""
        x, y = vector(x), vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match algebra dimension")
        out = [Q(0)] * self.dim
        for (i, j), coeffs in self.table.items():
            f = x[i] * y[j] - x[j] * y[i]
            if f == 0:
                continue
            for k, c in coeffs.items():
                out[k] += f * c
        return tuple(out)

    def ad_matrix(self, x: Sequence) -> RationalMatrix:
        """Matrix of ad_x = [x, .] in the basis (columns are images)."""
        x = vector(x)
        cols = [self.bracket(x, unit) for unit in RationalMatrix.identity(self.dim).data]
        return RationalMatrix.from_columns(cols)

    def basis_vector(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Q(1) if j == i else Q(0) for j in range(self.dim))

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.labels == other.labels
            and self.table == other.table
        )

    def __repr__(self) -> str:
        return f"LieAlgebra(dim {self.dim}, {len(self.table)} bracket pairs)"

    # -- axioms ----------------------------------------------------------------

    def jacobi_failure(self) -> tuple[int, int, int] | None:
        """First basis triple (i < j < k) violating the Jacobi identity, if any."""
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    acc = [Q(0)] * n
                    for m, c in bij.items():
                        for t, d in self.bracket_basis(m, k).items():
                            acc[t] += c * d
                    for m, c in self.bracket_basis(j, k).items():
                        for t, d in self.bracket_basis(m, i).items():
                            acc[t] += c * d
                    for m, c in self.bracket_basis(k, i).items():
                        for t, d in self.bracket_basis(m, j).items():
                            acc[t] += c * d
                    if any(a != 0 for a in acc):
                        return (i, j, k)
        return None

    def jacobi_holds(self) -> bool:
        return self.jacobi_failure() is None

    def is_abelian(self) -> bool:
        return not self.table

    # -- classical subspaces ----------------------------------------------------

    def center(self) -> Subspace:
        """Kernel of x |-> ([x, e_j])_j, i.e. everything that brackets to zero."""
        rows = []
        for j in range(self.dim):
            for k in range(self.dim):
                rows.append([self.structure_constant(i, j, k) for i in range(self.dim)])
        return Subspace(self.dim, RationalMatrix(rows).kernel_basis())

    def subalgebra_product(self, a: Subspace, b: Subspace) -> Subspace:
        """Span of all [x, y] with x in a, y in b."""
        vecs = [self.bracket(x, y) for x in a.basis for y in b.basis]
        return Subspace(self.dim, [v for v in vecs if not is_zero_vector(v)])

    def derived_subalgebra(self) -> Subspace:
        full = Subspace.full(self.dim)
        return self.subalgebra_product(full, full)

    def lower_central_series(self) -> list[Subspace]:
        """g, [g, g], [g, [g, g]], ... until the chain stabilises."""
        full = Subspace.full(self.dim)
        series = [full]
        while True:
            nxt = self.subalgebra_product(full, series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
            if nxt.is_zero():
                break
        return series

    def derived_series(self) -> list[Subspace]:
        """g, [g, g], [[g, g], [g, g]], ... until the chain stabilises."""
        series = [Subspace.full(self.dim)]
        while True:
            nxt = self.subalgebra_product(series[-1], series[-1])
            if nxt == series[-1]:
                break
            series.append(nxt)
            if nxt.is_zero():
                break
        return series

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero()

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].is_zero()

    def is_ideal(self, w: Subspace) -> bool:
        """True iff [e_i, w] lies in w for every basis vector e_i."""
        if w.ambient_dim != self.dim:
            raise ValueError("subspace ambient dimension does not match")
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for v in w.basis:
                if not w.contains(self.bracket(ei, v)):
                    return False
        return True
