"""Exact linear algebra over the integers for symmetric bilinear forms.

Everything here works with plain Python integers, so there is no precision
ceiling: determinants like 2**200 come out exactly.  Determinants use the
Bareiss fraction-free elimination; elementary divisors use an integer Smith
normal form.  Both first split the matrix into connected components of its
nonzero pattern, which turns the large, mostly block-diagonal Gram matrices
produced elsewhere in this package into many tiny problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Sequence


Matrix = list[list[int]]


def _as_rows(m: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(r) for r in m]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    return rows


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = _as_rows(m)
    n = len(a)
    if n == 0:
        return 1
    for r in a:
        for x in r:
            if not isinstance(x, int):
                raise ValueError("det_int needs integer entries")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # row pivot; any nonzero entry in column k will do
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _components(m: Matrix) -> list[list[int]]:
    """Connected components of the nonzero pattern (diagonal ignored)."""
    n = len(m)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (m[i][j] != 0 or m[j][i] != 0):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _submatrix(m: Matrix, idx: list[int]) -> Matrix:
    return [[m[i][j] for j in idx] for i in idx]


@dataclass(frozen=True)
class FactoredInteger:
    """A nonzero integer (or rational) kept as sign * product(p**e).

    Invariants: sign in {+1, -1}; primes strictly increasing; exponents
    nonzero.  Negative exponents are allowed so that scaled-lattice
    discriminants can be represented; ``value`` is then a Fraction.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        last = 1
        for p, e in self.factors:
            if p <= last:
                raise ValueError("primes must be strictly increasing")
            if e == 0:
                raise ValueError("exponents must be nonzero")
            last = p

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        if n == 0:
            raise ValueError("zero has no factorization; handle singular forms separately")
        sign = 1 if n > 0 else -1
        n = abs(n)
        factors = []
        for p, e in _trial_division(n):
            factors.append((p, e))
        return cls(sign, tuple(factors))

    @classmethod
    def one(cls) -> "FactoredInteger":
        return cls(1, ())

    @classmethod
    def parse(cls, text: str) -> "FactoredInteger":
        """Parse the ``p^e`` grammar: terms joined by ``*``, exponent 1
        omissible, whitespace ignored, optional leading ``-``."""
        s = "".join(text.split())
        if not s:
            raise ValueError("empty factored integer")
        sign = 1
        if s[0] == "-":
            sign = -1
            s = s[1:]
        if s == "1":
            return cls(sign, ())
        acc: dict[int, int] = {}
        for term in s.split("*"):
            if not term:
                raise ValueError(f"bad factored integer {text!r}")
            base, sep, exp = term.partition("^")
            if not base.isdigit():
                raise ValueError(f"bad factored integer {text!r}")
            if sep and not (exp.lstrip("-").isdigit() and exp.lstrip("-")):
                raise ValueError(f"bad factored integer {text!r}")
            p = int(base)
            e = int(exp) if exp else 1
            if p < 2 or not _is_prime(p):
                raise ValueError(f"{p} is not prime in {text!r}")
            acc[p] = acc.get(p, 0) + e
        factors = tuple((p, e) for p, e in sorted(acc.items()) if e != 0)
        return cls(sign, factors)

    def value(self):
        v: Fraction | int = self.sign
        for p, e in self.factors:
            if e >= 0:
                v *= p ** e
            else:
                v = Fraction(v, p ** (-e))
        return v

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def times_prime_power(self, p: int, e: int) -> "FactoredInteger":
        if e == 0:
            return self
        if p < 2 or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        acc = dict(self.factors)
        acc[p] = acc.get(p, 0) + e
        factors = tuple((q, x) for q, x in sorted(acc.items()) if x != 0)
        return FactoredInteger(self.sign, factors)

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        acc = dict(self.factors)
        for p, e in other.factors:
            acc[p] = acc.get(p, 0) + e
        factors = tuple((p, e) for p, e in sorted(acc.items()) if e != 0)
        return FactoredInteger(self.sign * other.sign, factors)

    def abs(self) -> "FactoredInteger":
        return FactoredInteger(1, self.factors)

    def __str__(self) -> str:
        body = "*".join(f"{p}^{e}" if e != 1 else f"{p}" for p, e in self.factors)
        if not body:
            body = "1"
        return ("-" if self.sign < 0 else "") + body


def _trial_division(n: int) -> Iterable[tuple[int, int]]:
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            yield d, e
        d += 1 if d == 2 else 2
    if n > 1:
        yield n, 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class IntegerForm:
    """A symmetric bilinear form with exact entries on a based lattice."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise ValueError("gram must be square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram must be symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntegerForm":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) for row in self.gram for x in row)


def determinant(form: IntegerForm) -> Optional[FactoredInteger]:
    """Signed determinant in factored shape; None if the form is singular."""
    if not form.is_integral():
        raise ValueError("clear denominators before taking the determinant")
    rows = [list(r) for r in form.gram]
    if not rows:
        return FactoredInteger.one()
    result = FactoredInteger.one()
    for comp in _components(rows):
        d = det_int(_submatrix(rows, comp))
        if d == 0:
            return None
        result = result * FactoredInteger.from_int(d)
    return result


def _snf_dense(a: Matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix (in place)."""
    n = len(a)
    if n == 0:
        return []
    m = len(a[0])
    divisors = []
    k = 0
    while k < min(n, m):
        # locate a nonzero entry of minimal absolute value in the submatrix
        piv = None
        best = None
        for i in range(k, n):
            row = a[i]
            for j in range(k, m):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        i, j = piv
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        while True:
            pivot = a[k][k]
            dirty = False
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    q = a[i][k] // pivot
                    if q:
                        for j in range(k, m):
                            a[i][j] -= q * a[k][j]
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        dirty = True
                        pivot = a[k][k]
            for j in range(k + 1, m):
                if a[k][j] != 0:
                    q = a[k][j] // pivot
                    if q:
                        for i in range(k, n):
                            a[i][j] -= q * a[i][k]
                    if a[k][j] != 0:
                        for i in range(k, n):
                            a[i][k], a[i][j] = a[i][j], a[i][k]
                        dirty = True
                        pivot = a[k][k]
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain property
            offender = None
            for i in range(k + 1, n):
                for j in range(k + 1, m):
                    if a[i][j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(k, m):
                a[k][j] += a[offender][j]
        divisors.append(abs(a[k][k]))
        k += 1
    divisors += [0] * (min(n, m) - len(divisors))
    return divisors


def _merge_chains(chains: list[list[int]]) -> list[int]:
    """Combine per-block divisor chains into one chain (prime by prime)."""
    nonzero = [d for chain in chains for d in chain if d != 0]
    zeros = sum(1 for chain in chains for d in chain if d == 0)
    m = len(nonzero)
    primes: set[int] = set()
    factored = []
    for d in nonzero:
        f = dict(_trial_division(d)) if d != 1 else {}
        factored.append(f)
        primes.update(f)
    exps = {p: sorted(f.get(p, 0) for f in factored) for p in primes}
    out = []
    for k in range(m):
        v = 1
        for p in sorted(primes):
            v *= p ** exps[p][k]
        out.append(v)
    return out + [0] * zeros


def elementary_divisors(form: IntegerForm) -> list[int]:
    """Smith normal form diagonal d_1 | d_2 | ... of the Gram matrix.

    A singular form yields trailing zeros rather than an error.
    """
    if not form.is_integral():
        raise ValueError("clear denominators before taking elementary divisors")
    rows = [list(r) for r in form.gram]
    comps = _components(rows)
    if len(comps) == 1:
        return _snf_dense(rows)
    chains = [_snf_dense(_submatrix(rows, comp)) for comp in comps]
    return _merge_chains(chains)
