"""Quantum integers, the Jones polynomial recursion, and semisimplicity tests.

[n]_q = 1 + q + ... + q^(n-1); the balanced form is <n>_q = q^-(n-1) [n]_{q^2}.
The Jones polynomials satisfy P_0 = P_1 = 1, P_{n+1}(x) = P_n(x) - x P_{n-1}(x)
and P_n(1/(q + q^-1 + 2)) = [n+1]_q / (1+q)^n.  A Temperley-Lieb algebra on k
strands at loop parameter +-(q + q^-1) is semisimple whenever <k>!_q is
nonzero; the partial Temperley-Lieb algebra at 1 +- (q + q^-1) inherits the
criterion through its blocks, whose entries live at parameter +-(q + q^-1).
Root-of-unity behaviour is tested symbolically, by exact divisibility by
cyclotomic polynomials.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .scalar import LaurentPoly, XPoly, evaluate_q


def q_int(n):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly({i: 1 for i in range(n)})


def q_factorial(n):
    out = LaurentPoly.one()
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


def balanced_q_int(n):
    """<n>_q = q^-(n-1) [n]_{q^2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return LaurentPoly({-(n - 1) + 2 * i: 1 for i in range(n)})


def balanced_q_factorial(n):
    out = LaurentPoly.one()
    for i in range(1, n + 1):
        out = out * balanced_q_int(i)
    return out


@functools.lru_cache(maxsize=None)
def jones_p(n):
    """P_n(x): P_0 = P_1 = 1, P_{n+1} = P_n - x P_{n-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return XPoly.one()
    return jones_p(n - 1) - XPoly.gen() * jones_p(n - 2)


def jones_identity_check(n, q0):
    """Exact check of (1+q)^n P_n(1/beta) = [n+1]_q at beta = q + q^-1 + 2."""
    q0 = Fraction(q0)
    if q0 == 0 or q0 == -1:
        raise ValueError("q0 must avoid 0 and -1")
    beta = q0 + 1 / q0 + 2
    if beta == 0:
        raise ValueError("beta = q0 + q0^-1 + 2 vanishes")
    lhs = jones_p(n).evaluate(1 / beta) * (1 + q0) ** n
    rhs = evaluate_q(q_int(n + 1), q0)
    return lhs == rhs


def jones_identity_symbolic(n):
    """(1+q)^n P_n(q/(1+q)^2) as a polynomial; equals [n+1]_q when the
    identity holds.  1/beta = q/(1+q)^2 clears all denominators because
    deg P_n <= n/2."""
    one_plus_q = LaurentPoly({0: 1, 1: 1})
    total = LaurentPoly.zero()
    for e, c in jones_p(n).coeffs.items():
        if n - 2 * e < 0:
            raise AssertionError("Jones polynomial degree exceeded n/2")
        total = total + c * LaurentPoly.monomial(e) * one_plus_q ** (n - 2 * e)
    return total


def tl_semisimple(k, q0):
    """True iff <k>!_q is nonzero at the rational point q0."""
    ok, _ = tl_semisimple_witness(k, q0)
    return ok


def tl_semisimple_witness(k, q0):
    """(verdict, vanishing factor index or None)."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ValueError("q0 must be nonzero")
    for n in range(1, k + 1):
        if evaluate_q(balanced_q_int(n), q0) == 0:
            return False, n
    return True, None


def ptl_semisimple(k, q0):
    """Semisimplicity of the k-strand partial Temperley-Lieb algebra at
    delta = 1 +- (q0 + q0^-1): needs every block's entry algebra, a
    Temperley-Lieb algebra on n <= k strands at +-(q0 + q0^-1), semisimple."""
    return all(tl_semisimple(n, q0) for n in range(k + 1))


def ptl_semisimple_witness(k, q0):
    for n in range(k + 1):
        ok, bad = tl_semisimple_witness(n, q0)
        if not ok:
            return False, bad
    return True, None


# -- symbolic root-of-unity tests ------------------------------------------------

@functools.lru_cache(maxsize=None)
def cyclotomic(n):
    """Coefficient list (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    # q^n - 1 divided by the cyclotomic polynomials of the proper divisors
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic(d))
    return tuple(poly)


def _polydiv_exact(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + len(den) - 1] / den[-1]
        out[i] = coef
        for j, dc in enumerate(den):
            num[i + j] -= coef * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    assert all(c.denominator == 1 for c in out)
    return [int(c) for c in out]


def vanishes_at_primitive_root(p, ell):
    """Does the Laurent polynomial vanish at a primitive ell-th root of unity?

    Tested by exact divisibility by the cyclotomic polynomial, after
    clearing the q-powers; no algebraic numbers are ever constructed.
    """
    if p.is_zero():
        return True
    shift = -p.min_exponent()
    coeffs = [0] * (p.max_exponent() + shift + 1)
    for e, c in p.coeffs.items():
        coeffs[e + shift] = c
    den = list(cyclotomic(ell))
    num = [Fraction(c) for c in coeffs]
    if len(num) < len(den):
        return False
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1] / den[-1]
        for j, dc in enumerate(den):
            num[i + j] -= coef * dc
    return not any(num)


def tl_semisimple_at_root_of_unity(k, ell):
    """Symbolic semisimplicity verdict with q a primitive ell-th root of unity."""
    for n in range(1, k + 1):
        if vanishes_at_primitive_root(balanced_q_int(n), ell):
            return False
    return True
