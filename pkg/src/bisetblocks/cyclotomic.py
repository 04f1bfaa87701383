"""Exact arithmetic in cyclotomic fields.

An element of conductor n is stored as a vector of rational coefficients
over the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n), where z is a
fixed primitive n-th root of unity and phi is Euler's totient.  Mixed
conductors are handled by lifting both operands to the least common
multiple.  All operations are exact; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, little-endian, monic."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in range(1, n):
        if n % d == 0:
            num = _int_poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _int_poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (little-endian), monic divisor."""
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division was not exact")
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k is zeta_n^k expressed over the power basis, for 0 <= k < n."""
    d = euler_phi(n)
    phi = cyclotomic_polynomial(n)
    # z^d = -(phi_0 + phi_1 z + ... + phi_{d-1} z^{d-1})
    rows: list[tuple[Fraction, ...]] = []
    for k in range(d):
        rows.append(tuple(Fraction(1) if i == k else Fraction(0) for i in range(d)))
    for k in range(d, n):
        prev = rows[k - 1]
        shifted = [Fraction(0)] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            for i in range(d):
                shifted[i] -= lead * phi[i]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_poly(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_n of any degree to the power basis."""
    d = euler_phi(n)
    table = _power_table(n)
    out = [Fraction(0)] * d
    for k, c in enumerate(coeffs):
        if c:
            row = table[k % n]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to a rational number")


class Cyclotomic:
    """An exact element of some cyclotomic field Q(zeta_n)."""

    __slots__ = ("n", "coeffs", "_min")

    def __init__(self, n: int, coeffs) -> None:
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        d = euler_phi(n)
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > d:
            raise ValueError("coefficient vector longer than the basis")
        cs += [Fraction(0)] * (d - len(cs))
        self.n = n
        self.coeffs = tuple(cs)
        self._min = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rational(value) -> "Cyclotomic":
        return Cyclotomic(1, [_as_fraction(value)])

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity zeta_n^k."""
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        poly = [Fraction(0)] * (k % n) + [Fraction(1)]
        return Cyclotomic(n, _reduce_poly(n, poly))

    # -- conductor handling ------------------------------------------

    def lift(self, m: int) -> "Cyclotomic":
        """Rewrite over Q(zeta_m); m must be a multiple of the conductor."""
        if m % self.n != 0:
            raise ValueError("can only lift to a multiple of the conductor")
        if m == self.n:
            return self
        step = m // self.n
        poly = [Fraction(0)] * (euler_phi(self.n) * step)
        for k, c in enumerate(self.coeffs):
            if c:
                poly[k * step] = c
        return Cyclotomic(m, _reduce_poly(m, poly))

    def _pair(self, other: "Cyclotomic"):
        m = self.n * other.n // gcd(self.n, other.n)
        return self.lift(m), other.lift(m)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        return Cyclotomic(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational():
            r = other.coeffs[0]
            return Cyclotomic(self.n, [c * r for c in self.coeffs])
        if self.is_rational():
            r = self.coeffs[0]
            return Cyclotomic(other.n, [c * r for c in other.coeffs])
        a, b = self._pair(other)
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.n, _reduce_poly(a.n, prod))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Cyclotomic":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = ONE
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.coeffs[0])
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        f = list(self.coeffs)
        g, u = _poly_xgcd_mod(f, phi)
        if len(g) != 1:
            raise ArithmeticError("element is not invertible")
        scale = 1 / g[0]
        return Cyclotomic(self.n, _reduce_poly(self.n, [c * scale for c in u]))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    # -- Galois action -----------------------------------------------

    def galois(self, t: int) -> "Cyclotomic":
        """Apply the automorphism zeta |-> zeta^t; t must be prime to n."""
        if gcd(t, self.n) != 1:
            raise ValueError("Galois exponent must be prime to the conductor")
        poly = [Fraction(0)] * self.n
        for k, c in enumerate(self.coeffs):
            if c:
                poly[(k * t) % self.n] += c
        return Cyclotomic(self.n, _reduce_poly(self.n, poly))

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta |-> zeta^(-1)."""
        return self.galois(self.n - 1) if self.n > 1 else self

    # -- predicates and conversions ----------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is irrational")
        return self.coeffs[0]

    def as_int(self) -> int:
        q = self.as_fraction()
        if q.denominator != 1:
            raise ValueError("value is not an integer")
        return q.numerator

    def is_p_integral(self, p: int) -> bool:
        """True when every basis coordinate has denominator prime to p.

        The power basis is an integral basis of the ring of integers of
        Q(zeta_n), so this tests membership in the localization at p.
        """
        return all(c.denominator % p != 0 for c in self.coeffs)

    def minimal(self) -> "Cyclotomic":
        """Canonical copy over the smallest conductor containing the value."""
        if self._min is not None:
            return self._min
        reduced = self
        for d in sorted(k for k in range(1, self.n + 1) if self.n % k == 0):
            if d == self.n:
                break
            cand = _try_descend(self, d)
            if cand is not None:
                reduced = cand
                break
        self._min = reduced
        reduced._min = reduced
        return reduced

    # -- comparisons -------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        m = self.minimal()
        return hash((m.n, m.coeffs))

    def __repr__(self):
        if self.is_rational():
            return f"Cyclotomic({self.coeffs[0]})"
        terms = " + ".join(
            f"{c}*z{self.n}^{k}" for k, c in enumerate(self.coeffs) if c
        )
        return f"Cyclotomic[{terms}]"


def _coerce(value):
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, (int, Fraction)):
        return Cyclotomic.from_rational(value)
    return NotImplemented


def _try_descend(x: Cyclotomic, d: int):
    """Express x over Q(zeta_d) if possible, else None (d divides conductor)."""
    n = x.n
    # Quick Galois-fixedness test before the linear algebra.
    for t in range(2, n + 1):
        if gcd(t, n) == 1 and t % d == 1:
            if x.galois(t) != x:
                return None
    cols = [Cyclotomic.zeta(d, j).lift(n).coeffs for j in range(euler_phi(d))]
    sol = _solve_fraction_system(cols, x.coeffs)
    if sol is None:
        return None
    return Cyclotomic(d, sol)


def _solve_fraction_system(cols, target):
    """Solve sum_j a_j * cols[j] = target over the rationals, or None."""
    rows = len(target)
    ncols = len(cols)
    mat = [[cols[j][i] for j in range(ncols)] + [target[i]] for i in range(rows)]
    piv_of_col: list[int | None] = [None] * ncols
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_of_col[c] = r
        r += 1
    if any(row[ncols] != 0 for row in mat[r:]):
        return None
    sol = [Fraction(0)] * ncols
    for c, pr in enumerate(piv_of_col):
        if pr is not None:
            sol[c] = mat[pr][ncols]
    return sol


def _poly_xgcd_mod(f: list[Fraction], m: list[Fraction]):
    """Return (g, u) with u*f = g mod m, g the monic gcd of f and m."""
    r0, r1 = m[:], f[:]
    s0: list[Fraction] = [Fraction(0)]
    s1: list[Fraction] = [Fraction(1)]
    while any(c != 0 for c in r1):
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    r0 = _poly_trim(r0)
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


def _poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_divmod(a, b):
    a = list(a)
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], _poly_trim(a)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for k in range(len(out) - 1, -1, -1):
        c = a[k + len(b) - 1] * inv
        out[k] = c
        if c:
            for i, d in enumerate(b):
                a[k + i] -= c * d
    return _poly_trim(out), _poly_trim(a[: len(b) - 1])


ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)
