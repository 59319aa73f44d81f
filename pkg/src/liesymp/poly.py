"""Sparse multivariate polynomials over the rationals, and matrices of them.

A :class:`MultiPoly` stores an ordered variable tuple plus a map from exponent
tuples to nonzero Fraction coefficients.  The zero polynomial has an empty
term map.  Arithmetic never rounds; equality compares canonical forms
(variables with no occurrence are ignored), so two equal polynomials compare
equal no matter how they were built.

The monomial order used for division and printing is graded lexicographic
over the declared variable tuple.

:class:`PolyMatrix` adds the antisymmetric-matrix operations this package
lives on: the Pfaffian by recursive first-row expansion (memoised over index
subsets) and determinants, with ``pfaffian()**2 == determinant()`` for
antisymmetric matrices of even size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import Q, RationalMatrix, as_fraction

Exponents = tuple[int, ...]


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping[Exponents, Fraction] | None = None):
        self.vars: tuple[str, ...] = tuple(variables)
        clean: dict[Exponents, Fraction] = {}
        if terms:
            width = len(self.vars)
            for exps, coeff in terms.items():
                coeff = as_fraction(coeff)
                if coeff == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != width:
                    raise ValueError("exponent tuple width does not match variable count")
                clean[exps] = clean.get(exps, Q(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls((), {})

    @classmethod
    def constant(cls, value) -> "MultiPoly":
        value = as_fraction(value)
        return cls((), {(): value} if value != 0 else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): Q(1)})

    @classmethod
    def variables(cls, names: Sequence[str]) -> list["MultiPoly"]:
        """The coordinate polynomials t_i inside one shared variable context."""
        names = tuple(names)
        out = []
        for i in range(len(names)):
            exps = tuple(1 if j == i else 0 for j in range(len(names)))
            out.append(cls(names, {exps: Q(1)}))
        return out

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Q(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def used_vars(self) -> tuple[str, ...]:
        used = [False] * len(self.vars)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def canonical(self) -> tuple[tuple[str, ...], tuple[tuple[Exponents, Fraction], ...]]:
        """Display form: unused variables pruned (declared order kept), terms
        sorted graded-lex descending."""
        keep = self.used_vars()
        idx = [self.vars.index(v) for v in keep]
        terms = {tuple(exps[i] for i in idx): c for exps, c in self.terms.items()}
        ordered = tuple(sorted(terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True))
        return keep, ordered

    def _signature(self) -> tuple[tuple[str, ...], tuple[tuple[Exponents, Fraction], ...]]:
        """Order-independent form: occurring variables sorted by name."""
        keep = tuple(sorted(self.used_vars()))
        idx = [self.vars.index(v) for v in keep]
        terms = {tuple(exps[i] for i in idx): c for exps, c in self.terms.items()}
        return keep, tuple(sorted(terms.items()))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------------

    def _aligned(self, other: "MultiPoly") -> tuple[tuple[str, ...], dict, dict]:
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        merged = list(self.vars) + [v for v in other.vars if v not in self.vars]
        return tuple(merged), _remap(self, merged), _remap(other, merged)

    def __add__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        variables, a, b = self._aligned(other)
        out = dict(a)
        for exps, c in b.items():
            out[exps] = out.get(exps, Q(0)) + c
        return MultiPoly(variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "MultiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        variables, a, b = self._aligned(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                c = out.get(key, Q(0)) + c1 * c2
                if c == 0:
                    out.pop(key, None)
                else:
                    out[key] = c
        return MultiPoly(variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation and division ----------------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        """Exact value at a point; every occurring variable must be assigned."""
        needed = self.used_vars()
        missing = [v for v in needed if v not in assignment]
        if missing:
            raise ValueError(f"no value for variable(s) {', '.join(missing)}")
        total = Q(0)
        for exps, coeff in self.terms.items():
            val = coeff
            for name, e in zip(self.vars, exps):
                if e:
                    val *= as_fraction(assignment[name]) ** e
            total += val
        return total

    def substitute(self, assignment: Mapping[str, "MultiPoly | Fraction | int"]) -> "MultiPoly":
        """Replace variables by polynomials (or constants); others stay symbolic."""
        result = MultiPoly.zero()
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(coeff)
            for name, e in zip(self.vars, exps):
                if not e:
                    continue
                repl = assignment.get(name)
                if repl is None:
                    repl = MultiPoly.variable(name)
                term = term * (_coerce(repl) ** e)
            result = result + term
        return result

    def leading(self) -> tuple[Exponents, Fraction]:
        """Leading term under graded-lex over this polynomial's variables."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self.terms, key=lambda e: (sum(e), e))
        return exps, self.terms[exps]

    def __str__(self) -> str:
        keep, ordered = self.canonical()
        if not ordered:
            return "0"
        chunks = []
        for exps, coeff in ordered:
            factors = []
            for name, e in zip(keep, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _coerce(x) -> "MultiPoly":
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MultiPoly.constant(x)
    return NotImplemented


def _remap(p: MultiPoly, merged: Sequence[str]) -> dict[Exponents, Fraction]:
    pos = {v: i for i, v in enumerate(merged)}
    width = len(merged)
    out: dict[Exponents, Fraction] = {}
    for exps, c in p.terms.items():
        key = [0] * width
        for name, e in zip(p.vars, exps):
            key[pos[name]] = e
        out[tuple(key)] = c
    return out


def poly_divmod(p: MultiPoly, d: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """Quotient and remainder of p by a single divisor d under graded-lex.

    The remainder is zero exactly when d divides p.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    variables, pt, dt = p._aligned(d)
    rem = MultiPoly(variables, pt)
    div = MultiPoly(variables, dt)
    quot = MultiPoly.zero()
    d_exps, d_coeff = div.leading()
    while not rem.is_zero():
        r_exps, r_coeff = rem.leading()
        step = tuple(a - b for a, b in zip(r_exps, d_exps))
        if any(e < 0 for e in step):
            break
        factor = MultiPoly(variables, {step: r_coeff / d_coeff})
        quot = quot + factor
        rem = rem - factor * div
    return quot, rem


def poly_divides(d: MultiPoly, p: MultiPoly) -> bool:
    """True iff exact multivariate division of p by d leaves no remainder."""
    if d.is_zero():
        raise ZeroDivisionError("cannot test divisibility by zero")
    return poly_divmod(p, d)[1].is_zero()


class PolyMatrix:
    """Dense matrix of MultiPoly entries (constants are lifted automatically)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        grid = []
        for row in data:
            out = []
            for x in row:
                p = _coerce(x)
                if p is NotImplemented:
                    raise TypeError(f"bad matrix entry {x!r}")
                out.append(p)
            grid.append(tuple(out))
        self.data = tuple(grid)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def from_rational(cls, m: RationalMatrix) -> "PolyMatrix":
        return cls(m.data)

    def __getitem__(self, ij: tuple[int, int]) -> MultiPoly:
        i, j = ij
        return self.data[i][j]

    def is_antisymmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(i, self.cols):
                if not (self.data[i][j] + self.data[j][i]).is_zero():
                    return False
        return True

    def substitute(self, assignment: Mapping[str, Fraction]) -> RationalMatrix:
        return RationalMatrix(
            [[entry.evaluate(assignment) for entry in row] for row in self.data]
        )

    def pfaffian(self) -> MultiPoly:
        """Pfaffian by recursive first-row expansion.

        Requires an antisymmetric matrix of even size; memoised over index
        subsets so shared minors are expanded once.
        """
        if self.rows != self.cols or self.rows % 2 != 0:
            raise ValueError("pfaffian requires an antisymmetric matrix of even size")
        if not self.is_antisymmetric():
            raise ValueError("pfaffian requires an antisymmetric matrix")
        data = self.data
        memo: dict[tuple[int, ...], MultiPoly] = {}

        def pf(active: tuple[int, ...]) -> MultiPoly:
            if not active:
                return MultiPoly.constant(1)
            cached = memo.get(active)
            if cached is not None:
                return cached
            i0, rest = active[0], active[1:]
            total = MultiPoly.zero()
            for pos, j in enumerate(rest):
                a = data[i0][j]
                if a.is_zero():
                    continue
                sub = tuple(x for x in rest if x != j)
                term = a * pf(sub)
                total = total + term if pos % 2 == 0 else total - term
            memo[active] = total
            return total

        return pf(tuple(range(self.rows)))

    def determinant(self) -> MultiPoly:
        """Pfaffian squared for antisymmetric matrices, cofactor expansion otherwise."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.is_antisymmetric():
            if self.rows % 2 != 0:
                return MultiPoly.zero()
            p = self.pfaffian()
            return p * p
        data = self.data
        memo: dict[tuple[int, ...], MultiPoly] = {}

        def det(cols: tuple[int, ...]) -> MultiPoly:
            if not cols:
                return MultiPoly.constant(1)
            cached = memo.get(cols)
            if cached is not None:
                return cached
            r = self.rows - len(cols)
            total = MultiPoly.zero()
            for pos, c in enumerate(cols):
                a = data[r][c]
                if a.is_zero():
                    continue
                term = a * det(tuple(x for x in cols if x != c))
                total = total + term if pos % 2 == 0 else total - term
            memo[cols] = total
            return total

        return det(tuple(range(self.cols)))
