"""Eigenvalues from the exact characteristic polynomial.

This route shares nothing with the Jacobi solver.  Every float64 entry is an
exact dyadic rational, so after scaling by a power of two the matrix is an
integer matrix ``B = D*M``.  Its characteristic polynomial comes out of
Faddeev-LeVerrier in exact integer arithmetic, is split into square-free
factors (each factor's roots carry a known multiplicity), and the roots of
each factor are isolated with Sturm sequences inside the Gershgorin interval
and bisected at dyadic points to the requested width.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .matrix import MatrixLike, Spectrum, as_symmetric

MAX_ORACLE_ORDER = 8
ROOT_WIDTH = 1e-12


# Dense polynomials: coefficient lists, lowest degree first. -------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return [k * c for k, c in enumerate(p)][1:]


def _divmod(num, den):
    num = [Fraction(c) for c in num]
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    lead = Fraction(den[-1])
    while len(_trim(num)) >= len(den):
        num = _trim(num)
        k = len(num) - len(den)
        f = num[-1] / lead
        q[k] = f
        for i, c in enumerate(den):
            num[i + k] -= f * c
        num.pop()
    return _trim(q), _trim(num)


def _monic(p):
    p = _trim(p)
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def square_free_factors(p):
    """Yun's algorithm: ``[(f_1, 1), (f_2, 2), ...]`` with ``p ~ prod f_i**i``."""
    p = _monic(p)
    a = _gcd(p, _deriv(p))
    b = _divmod(p, a)[0]
    c = _divmod(_deriv(p), a)[0]
    d = _sub(c, _deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        b_next = _divmod(b, a)[0]
        c = _divmod(d, a)[0]
        if len(a) > 1:
            out.append((a, i))
        b = b_next
        d = _sub(c, _deriv(b))
        i += 1
    return out


def _integer_poly(p):
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    p = [Fraction(c) for c in _trim(p)]
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints] if g else ints


def sturm_sequence(p):
    seq = [_trim(p), _deriv(_trim(p))]
    while seq[-1]:
        rem = _divmod(seq[-2], seq[-1])[1]
        seq.append([-c for c in rem])
    return [_integer_poly(s) for s in seq[:-1]]


def _sign_at(p, num: int, exp: int) -> int:
    """Sign of integer polynomial ``p`` at ``num / 2**exp``."""
    d = len(p) - 1
    acc = 0
    for k, c in enumerate(p):
        acc += c * num ** k << (exp * (d - k))
    return (acc > 0) - (acc < 0)


def _variations(seq, num: int, exp: int) -> int:
    signs = [s for s in (_sign_at(p, num, exp) for p in seq) if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _align(a, b):
    (na, ea), (nb, eb) = a, b
    e = max(ea, eb)
    return na << (e - ea), nb << (e - eb), e


def _mid(a, b):
    na, nb, e = _align(a, b)
    return na + nb, e + 1


def _width(a, b) -> Fraction:
    na, nb, e = _align(a, b)
    return Fraction(nb - na, 1 << e)


def _isolate(seq, lo, hi):
    """Intervals ``(a, b]`` each holding exactly one root of ``seq[0]``."""
    out = []
    stack = [(lo, hi, _variations(seq, *lo) - _variations(seq, *hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            out.append((a, b))
            continue
        m = _mid(a, b)
        left = _variations(seq, *a) - _variations(seq, *m)
        stack.append((m, b, count - left))
        stack.append((a, m, left))
    return out


def _refine(seq, a, b, width: Fraction):
    """Shrink the isolating interval ``(a, b]`` below ``width``; return its midpoint."""
    p = seq[0]
    sa, sb = _sign_at(p, *a), _sign_at(p, *b)
    if sb == 0:
        return Fraction(b[0], 1 << b[1])
    while _width(a, b) > width:
        m = _mid(a, b)
        if sa != 0:
            sm = _sign_at(p, *m)
            if sm == 0:
                return Fraction(m[0], 1 << m[1])
            if sm == sa:
                a = m
            else:
                b = m
        else:
            # a is a root of p outside (a, b]; fall back to Sturm counting
            if _variations(seq, *a) - _variations(seq, *m) == 1:
                b = m
            else:
                a = m
            sa = _sign_at(p, *a)
    na, nb, e = _align(a, b)
    return Fraction(na + nb, 1 << (e + 1))


def charpoly_coefficients(b):
    """Characteristic polynomial of an integer matrix, lowest degree first.

    Faddeev-LeVerrier: every division is exact over the integers.
    """
    n = len(b)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = B M_{k-1} + c_{n-k+1} I
        prod = [[sum(b[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        mk = prod
        tr = sum(sum(b[i][t] * mk[t][i] for t in range(n)) for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier produced a non-integer coefficient")
        coeffs[n - k] = q
    return coeffs


def _integer_scaling(a: np.ndarray):
    fr = [[Fraction(float(x)) for x in row] for row in a]
    scale = max((x.denominator for row in fr for x in row), default=1)
    return [[int(x * scale) for x in row] for row in fr], scale


def charpoly_eigen_oracle(m: MatrixLike, width: float = ROOT_WIDTH) -> Spectrum:
    """Eigenvalues via the exact characteristic polynomial (order at most 8).

    Each root is bracketed to an interval narrower than ``width`` and
    reported as the interval midpoint, repeated by its multiplicity.
    """
    m = as_symmetric(m)
    n = m.n
    if n > MAX_ORACLE_ORDER:
        raise ValueError(f"oracle supports order <= {MAX_ORACLE_ORDER}, got {n}")
    if n == 0:
        return Spectrum(())
    b, scale = _integer_scaling(m.array)
    coeffs = charpoly_coefficients(b)
    radius = [sum(abs(x) for j, x in enumerate(row) if j != i) for i, row in enumerate(b)]
    lo = min(b[i][i] - radius[i] for i in range(n)) - 1
    hi = max(b[i][i] + radius[i] for i in range(n)) + 1
    target = Fraction(width) * scale
    roots = []
    for factor, mult in square_free_factors(coeffs):
        seq = sturm_sequence(factor)
        for a, c in _isolate(seq, (lo, 0), (hi, 0)):
            root = _refine(seq, a, c, target) / scale
            roots.extend([float(root)] * mult)
    if len(roots) != n:
        raise ArithmeticError(f"isolated {len(roots)} real roots, expected {n}")
    return Spectrum(tuple(roots))
