"""Bernoulli and Euler numbers and polynomials, dual sequences, A_k(t).

Values are computed from the defining recurrences

    B_0 = 1,   sum_{k=0}^{n} C(n+1, k) B_k = 0            (n >= 1)
    E_0 = 1,   sum_{k <= n, k = n mod 2} C(n, k) E_k = 0   (n >= 1)

and memoized in a :class:`SequenceCache` that only ever grows.
"""

import logging
import os
import threading
from fractions import Fraction
from math import comb, lcm

from .arith import format_rational, parse_rational
from .errors import LengthError
from .poly import MultiPoly

log = logging.getLogger(__name__)

SEQUENCE_FILES = {"bernoulli": "bernoulli.tsv", "euler": "euler.tsv"}


def _poly_x(coeffs):
    """MultiPoly in x from ascending coefficients."""
    return MultiPoly({(i,): c for i, c in enumerate(coeffs) if c})


class SequenceCache:
    """Memoized exact values; safe for concurrent readers.

    Extension of any table happens under a single lock, so two threads asking
    for a new index never interleave their appends.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self.bernoulli_numbers = [Fraction(1)]
        self.euler_numbers = [Fraction(1)]
        self._bernoulli_coeffs = []
        self._euler_coeffs = []
        self._bernoulli_polys = {}
        self._euler_polys = {}

    # -- numbers ------------------------------------------------------
    def bernoulli_number(self, n):
        if n < 0:
            raise ValueError("n must be nonnegative")
        table = self.bernoulli_numbers
        if n >= len(table):
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    # C(m+1, m) B_m = -sum_{k<m} C(m+1, k) B_k, summed over a
                    # common denominator so only one gcd is taken per index
                    terms = [(comb(m + 1, k), table[k]) for k in range(m) if table[k]]
                    den = lcm(*(b.denominator for _, b in terms))
                    acc = sum(c * b.numerator * (den // b.denominator) for c, b in terms)
                    table.append(Fraction(-acc, den * (m + 1)))
        return table[n]

    def euler_number(self, n):
        if n < 0:
            raise ValueError("n must be nonnegative")
        table = self.euler_numbers
        if n >= len(table):
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    acc = sum(comb(m, k) * table[k] for k in range(m % 2, m, 2))
                    table.append(Fraction(-acc))
        return table[n]

    # -- polynomials --------------------------------------------------
    def bernoulli_coeffs(self, n):
        """Ascending coefficients of B_n(x)."""
        table = self._bernoulli_coeffs
        if n >= len(table):
            self.bernoulli_number(n)
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    # B_m(x) = sum_k C(m, k) B_k x^(m-k)
                    table.append(tuple(comb(m, m - i) * self.bernoulli_numbers[m - i]
                                       for i in range(m + 1)))
        return table[n]

    def euler_coeffs(self, n):
        """Ascending coefficients of E_n(x)."""
        table = self._euler_coeffs
        if n >= len(table):
            self.euler_number(n)
            with self._lock:
                while len(table) <= n:
                    m = len(table)
                    coeffs = [Fraction(0)] * (m + 1)
                    # sum_k C(m,k) E_k / 2^k (x - 1/2)^(m-k), expanded binomially
                    for k in range(m + 1):
                        ek = self.euler_numbers[k]
                        if not ek:
                            continue
                        outer = comb(m, k) * ek / 2 ** k
                        j = m - k
                        for i in range(j + 1):
                            coeffs[i] += outer * comb(j, i) * Fraction(-1, 2) ** (j - i)
                    table.append(tuple(coeffs))
        return table[n]

    def bernoulli_poly(self, n):
        p = self._bernoulli_polys.get(n)
        if p is None:
            p = _poly_x(self.bernoulli_coeffs(n))
            self._bernoulli_polys[n] = p
        return p

    def euler_poly(self, n):
        p = self._euler_polys.get(n)
        if p is None:
            p = _poly_x(self.euler_coeffs(n))
            self._euler_polys[n] = p
        return p

    def euler_at_zero(self, n):
        return self.euler_coeffs(n)[0]

    # -- persistence --------------------------------------------------
    def save(self, directory):
        """Write the computed number tables as ``n<TAB>value`` files."""
        os.makedirs(directory, exist_ok=True)
        for kind, values in (("bernoulli", self.bernoulli_numbers),
                             ("euler", self.euler_numbers)):
            path = os.path.join(directory, SEQUENCE_FILES[kind])
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                fh.write(render_tsv(enumerate(values)))
            os.replace(tmp, path)

    def load(self, directory):
        """Adopt cached tables from ``directory``.

        Any file that does not parse, or whose values fail the defining
        recurrence, is ignored with a warning; the values are recomputed on
        demand.  Returns the number of tables adopted.
        """
        adopted = 0
        for kind in ("bernoulli", "euler"):
            path = os.path.join(directory, SEQUENCE_FILES[kind])
            if not os.path.exists(path):
                continue
            try:
                with open(path, encoding="utf-8") as fh:
                    rows = parse_tsv(fh.read())
                values = [v for _, v in rows]
                if [i for i, _ in rows] != list(range(len(rows))):
                    raise ValueError("indices are not 0, 1, 2, ...")
                check = bernoulli_recurrence_residual if kind == "bernoulli" else euler_recurrence_residual
                for m in range(len(values)):
                    if check(values, m):
                        raise ValueError("value at n=%d fails the recurrence" % m)
            except (OSError, ValueError) as exc:
                log.warning("discarding cache file %s (%s); rebuilding", path, exc)
                continue
            with self._lock:
                table = self.bernoulli_numbers if kind == "bernoulli" else self.euler_numbers
                if len(values) > len(table):
                    table[len(table):] = values[len(table):]
            adopted += 1
        return adopted


def bernoulli_recurrence_residual(values, n):
    """Defect of the Bernoulli recurrence at index n (0 means satisfied)."""
    if n == 0:
        return values[0] - 1
    return sum(comb(n + 1, k) * values[k] for k in range(n + 1))


def euler_recurrence_residual(values, n):
    if n == 0:
        return values[0] - 1
    return sum(comb(n, k) * values[k] for k in range(n % 2, n + 1, 2))


def render_tsv(rows):
    return "".join("%d\t%s\n" % (n, format_rational(v)) for n, v in rows)


def parse_tsv(text):
    """Parse ``n<TAB>p/q`` lines; blank lines and ``#`` comments are skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError("line %d: expected 'n<TAB>value', got %r" % (lineno, line))
        try:
            n = int(fields[0])
            value = parse_rational(fields[1])
        except ValueError as exc:
            raise ValueError("line %d: %s" % (lineno, exc)) from None
        if n < 0:
            raise ValueError("line %d: negative index" % lineno)
        rows.append((n, value))
    return rows


_default = SequenceCache()


def default_cache():
    return _default


def bernoulli_number(n):
    return _default.bernoulli_number(n)


def euler_number(n):
    return _default.euler_number(n)


def bernoulli_poly(n):
    return _default.bernoulli_poly(n)


def euler_poly(n):
    return _default.euler_poly(n)


def euler_at_zero(n):
    return _default.euler_at_zero(n)


def dual_sequence(a):
    """a*_n = sum_k C(n, k) (-1)^k a_k over the given prefix."""
    a = [Fraction(v) for v in a]
    return [sum((-1) ** k * comb(n, k) * a[k] for k in range(n + 1)) for n in range(len(a))]


def a_poly_coeffs(k, a):
    """Ascending coefficients of A_k(t) = sum_l C(k, l) (-1)^l a_l t^(k-l)."""
    if len(a) < k + 1:
        raise LengthError("A_%d needs %d sequence terms, got %d" % (k, k + 1, len(a)))
    return tuple((-1) ** (k - i) * comb(k, k - i) * Fraction(a[k - i]) for i in range(k + 1))


def a_poly(k, a, v="x"):
    coeffs = a_poly_coeffs(k, a)
    return MultiPoly([({v: i}, c) for i, c in enumerate(coeffs) if c])


def a_poly_star(k, a, v="x"):
    """A*_k built from the dual of ``a``."""
    if len(a) < k + 1:
        raise LengthError("A*_%d needs %d sequence terms, got %d" % (k, k + 1, len(a)))
    return a_poly(k, dual_sequence(list(a)[: k + 1]), v)
