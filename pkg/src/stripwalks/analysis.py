"""Numerical layer: real-root isolation of denominator polynomials, and
conversion of radii of convergence into connective constants.

Root finding is bisection on (0, 1] with exact rational sign evaluation at
dyadic points, so brackets are rigorous.  Since every counting series here
has non-negative coefficients, the smallest positive real root of the
denominator is the smallest-modulus singularity (Pringsheim); a winding-number
check over a circle just inside that radius guards against an unexpected
smaller complex root and fails loudly if one exists.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .genfunc import (
    IntPolynomial,
    W3_BRIDGE_DENOMINATOR,
    W3_LOOP_POLYNOMIAL,
    W4_LOWER_DENOMINATOR,
    atoms_width4_upper,
    important_part_denominator,
)
from .lattice import CountTable

DEFAULT_TOL = 1e-12
_SCAN_CELLS = 1024
_WINDING_SAMPLES = 2880


@dataclass(frozen=True)
class RootResult:
    """A bracketed root of a polynomial and the derived growth constant."""

    root: float
    mu: float
    tolerance: float
    bracket: tuple[float, float]

    def round6(self) -> tuple[float, float]:
        """(root, mu) rounded half-even to the conventional 6 decimals."""
        return (round(self.root, 6), round(self.mu, 6))


def _winding_number(p: IntPolynomial, radius: float) -> int:
    """Number of roots of p strictly inside |t| = radius, by argument principle.

    The sample count is far above the polynomial degree, so the argument
    cannot jump by more than pi between consecutive samples.
    """
    total = 0.0
    prev = p.evaluate_complex(complex(radius, 0.0))
    for k in range(1, _WINDING_SAMPLES + 1):
        z = radius * cmath.exp(2j * cmath.pi * k / _WINDING_SAMPLES)
        cur = p.evaluate_complex(z)
        total += cmath.phase(cur / prev)
        prev = cur
    return round(total / (2 * cmath.pi))


def smallest_positive_root(
    p: IntPolynomial,
    tol: float = DEFAULT_TOL,
    check_smallest_modulus: bool = True,
) -> RootResult:
    """Least t in (0, 1] with p(t) = 0, bracketed to tol by exact bisection.

    Requires p(0) = 1 and a sign change on (0, 1]; raises if no sign change
    is found, or if the winding check detects a complex root of smaller
    modulus.
    """
    if p.constant_term != 1:
        raise ValueError("expected a polynomial with constant term 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    lo = Fraction(0)
    hi = None
    exact_hit = None
    for k in range(1, _SCAN_CELLS + 1):
        t = Fraction(k, _SCAN_CELLS)
        v = p(t)
        if v == 0:
            exact_hit = t
            break
        if v < 0:
            hi = t
            break
        lo = t
    if exact_hit is not None:
        lo = hi = exact_hit
    elif hi is None:
        raise ValueError("no sign change on (0, 1]; cannot bracket a root")
    else:
        ftol = Fraction(tol)
        while hi - lo > ftol:
            mid = (lo + hi) / 2
            v = p(mid)
            if v == 0:
                lo = hi = mid
                break
            if v > 0:
                lo = mid
            else:
                hi = mid

    root = float((lo + hi) / 2)
    if check_smallest_modulus and root > 0:
        inside = _winding_number(p, root * (1 - 1e-6))
        if inside != 0:
            raise ArithmeticError(
                f"{inside} root(s) of smaller modulus inside |t| = {root:.6f}"
            )
    return RootResult(root, 1.0 / root, tol, (float(lo), float(hi)))


def connective_constant_width3(tol: float = DEFAULT_TOL) -> RootResult:
    """Connective constant of the width-3 strip, from two independent polynomials.

    The smallest positive roots of the full degree-14 bridge denominator and
    of the reduced degree-6 loop polynomial must agree to 1e-9; the result is
    the reciprocal of that root, approximately 1.9146.
    """
    r_full = smallest_positive_root(W3_BRIDGE_DENOMINATOR, tol)
    r_loop = smallest_positive_root(W3_LOOP_POLYNOMIAL, tol)
    if abs(r_full.root - r_loop.root) > 1e-9:
        raise ArithmeticError(
            "width-3 denominators disagree: "
            f"{r_full.root!r} (full) vs {r_loop.root!r} (loop)"
        )
    return r_loop


def mu_bounds_width4(tol: float = DEFAULT_TOL) -> tuple[RootResult, RootResult]:
    """(lower, upper) bounds for the width-4 connective constant.

    The lower bound comes from the left-step-free composition's denominator
    (root near 0.487645, mu_lower near 2.0507); the upper bound from the
    degree-44 loop-star denominator of the overcounting atoms (root near
    0.461722, mu_upper near 2.1658).
    """
    lower = smallest_positive_root(W4_LOWER_DENOMINATOR, tol)
    d44 = important_part_denominator(atoms_width4_upper(), 4)
    upper = smallest_positive_root(d44, tol)
    if not lower.mu < upper.mu:
        raise ArithmeticError("lower bound is not below upper bound")
    return lower, upper


def estimate_mu(counts: CountTable) -> list[tuple[int, float, float]]:
    """Per-length growth estimates (n, counts[n]**(1/n), counts[n]/counts[n-1]).

    The n-th-root column converges to the connective constant from below for
    bridge tables; the ratio column converges much faster for rational
    generating functions with a simple dominant pole.
    """
    out = []
    for n in range(1, counts.n_max + 1):
        c = counts[n]
        prev = counts[n - 1]
        nth_root = c ** (1.0 / n)
        ratio = c / prev if prev else float("inf")
        out.append((n, nth_root, ratio))
    return out
