"""Exact integer polynomials, rational generating functions, and the
irreducible-bridge alphabet compositions for the width-3 and width-4 strips.

Everything here is exact over unbounded integers; no floating point is used.
Rational functions are *not* reduced to lowest terms automatically -- sums and
products simply multiply numerators and denominators -- and equality is tested
by cross-multiplication.  This keeps the composed functions in the same
unreduced shape as the published quotients they are checked against; an
explicit :meth:`RationalGF.reduced` is available where a cancelled form is
wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .lattice import BRIDGE_TYPES


@dataclass(frozen=True)
class IntPolynomial:
    """A polynomial in t with exact integer coefficients, ascending powers.

    Normal form has no trailing zero coefficient; the zero polynomial is the
    empty coefficient tuple and has degree -1.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("coefficients must be in normal form (no trailing zeros)")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "IntPolynomial":
        if coefficient == 0:
            return cls.zero()
        return cls((0,) * power + (coefficient,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    @property
    def constant_term(self) -> int:
        return self.coefficient(0)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.from_coefficients(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial.from_coefficients(k * c for c in self.coefficients)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coefficients)

    def unshift(self, k: int) -> "IntPolynomial":
        """Divide exactly by t**k."""
        if self.is_zero:
            return self
        if any(c != 0 for c in self.coefficients[:k]):
            raise ValueError(f"polynomial is not divisible by t^{k}")
        return IntPolynomial(self.coefficients[k:])

    def __call__(self, t: Fraction | int) -> Fraction | int:
        acc: Fraction | int = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def pretty(self, var: str = "t") -> str:
        """Render in the conventional ``a + b t + c t^2`` style."""
        if self.is_zero:
            return "0"
        parts = []
        for p, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                term = str(mag)
            else:
                t_part = var if p == 1 else f"{var}^{p}"
                term = t_part if mag == 1 else f"{mag}{t_part}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _poly(*coeffs: int) -> IntPolynomial:
    return IntPolynomial.from_coefficients(coeffs)


# --- rational-coefficient helpers used only for gcd reduction -------------


def _frac_divmod(
    a: list[Fraction], b: list[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = a[:]
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        coef = r[-1] / b[-1]
        deg = len(r) - len(b)
        q[deg] = coef
        for i, cb in enumerate(b):
            r[deg + i] -= coef * cb
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor, returned as a primitive integer polynomial."""
    fa = [Fraction(c) for c in a.coefficients]
    fb = [Fraction(c) for c in b.coefficients]
    while fb:
        _, r = _frac_divmod(fa, fb)
        fa, fb = fb, r
    if not fa:
        return IntPolynomial.zero()
    denom = lcm(*(f.denominator for f in fa))
    ints = [int(f * denom) for f in fa]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial.from_coefficients(ints)


def _poly_exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    fa = [Fraction(c) for c in a.coefficients]
    fb = [Fraction(c) for c in b.coefficients]
    q, r = _frac_divmod(fa, fb)
    if r:
        raise ValueError("polynomial division is not exact")
    out = []
    for f in q:
        if f.denominator != 1:
            raise ValueError("quotient is not an integer polynomial")
        out.append(int(f))
    return IntPolynomial.from_coefficients(out)


@dataclass(frozen=True)
class RationalGF:
    """A ratio of integer polynomials with denominator constant term 1.

    The constant term of the denominator is normalized to +1 at construction
    (a constant term of -1 flips both signs; 0 is rejected, as every counting
    series here is an ordinary power series).
    """

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        c = self.denominator.constant_term
        if c == 0:
            raise ValueError("denominator constant term must be non-zero")
        if c < 0:
            object.__setattr__(self, "numerator", -self.numerator)
            object.__setattr__(self, "denominator", -self.denominator)
        if self.denominator.constant_term != 1:
            raise ValueError("denominator constant term must be +1 or -1")

    @classmethod
    def from_polynomial(cls, p: IntPolynomial) -> "RationalGF":
        return cls(p, IntPolynomial.one())

    @classmethod
    def zero(cls) -> "RationalGF":
        return cls(IntPolynomial.zero(), IntPolynomial.one())

    @classmethod
    def one(cls) -> "RationalGF":
        return cls(IntPolynomial.one(), IntPolynomial.one())

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(
            self.numerator * other.denominator - other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __mul__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self) -> int:
        raise TypeError("RationalGF is not hashable (equality is by cross-multiplication)")

    def star(self) -> "RationalGF":
        """1/(1 - g), the generating function of arbitrary concatenations.

        Requires g(0) = 0; otherwise the geometric series diverges.
        """
        if self.numerator.constant_term != 0:
            raise ValueError("star requires a generating function with zero constant term")
        return RationalGF(self.denominator, self.denominator - self.numerator)

    def series(self, n_max: int) -> tuple[int, ...]:
        """The first n_max + 1 Taylor coefficients, exactly.

        Uses the linear recurrence a_n = num_n - sum_{k>=1} den_k a_{n-k}
        induced by the denominator.
        """
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        den = self.denominator.coefficients
        out: list[int] = []
        for n in range(n_max + 1):
            v = self.numerator.coefficient(n)
            for k in range(1, min(n, len(den) - 1) + 1):
                v -= den[k] * out[n - k]
            out.append(v)
        return tuple(out)

    def reduced(self) -> "RationalGF":
        """The same function with the numerator/denominator gcd cancelled."""
        if self.numerator.is_zero:
            return RationalGF.zero()
        g = _poly_gcd(self.numerator, self.denominator)
        if g.degree < 1:
            return self
        return RationalGF(
            _poly_exact_div(self.numerator, g), _poly_exact_div(self.denominator, g)
        )

    def pretty(self, var: str = "t") -> str:
        return f"({self.numerator.pretty(var)}) / ({self.denominator.pretty(var)})"


ONE_MINUS_T = _poly(1, -1)
TAIL_GF = RationalGF(IntPolynomial.one(), ONE_MINUS_T)  # 1 / (1 - t)


# ---------------------------------------------------------------------------
# Alphabet atoms
# ---------------------------------------------------------------------------


def atoms_width3() -> dict[str, RationalGF]:
    """Generating functions of the width-3 irreducible bridge types.

    OI counts the single outer-to-inner shape per length, IO the two
    inner-to-outer ones, and OO the outer-to-outer staircases, each with an
    arbitrary tail of leading right steps.
    """
    oi = RationalGF(_poly(0, 0, 1), ONE_MINUS_T)
    io = RationalGF(_poly(0, 0, 2), ONE_MINUS_T)
    # Tailless staircases have one shape per length divisible by 3.
    oo = RationalGF(_poly(0, 0, 0, 1), _poly(1, 0, 0, -1)) * TAIL_GF
    return {"OI": oi, "IO": io, "OO": oo}


def atoms_width4_lower() -> dict[str, RationalGF]:
    """Width-4 atoms restricted to bridges that never step left.

    These undercount every type, so the composed series is a lower bound for
    the bridge counts.
    """
    return {
        "II": RationalGF(_poly(0, 0, 1), ONE_MINUS_T),
        "OI": RationalGF(_poly(0, 0, 1, 1), ONE_MINUS_T),
        "IO": RationalGF(_poly(0, 0, 1, 1), ONE_MINUS_T),
        "OO": RationalGF(_poly(0, 0, 0, 0, 1), ONE_MINUS_T),
    }


# Common denominator (1 - 2t + t^2 - t^4)(1 - t) of the width-4 upper atoms.
TWO_ROW_DENOMINATOR = _poly(1, -2, 1, 0, -1)
UPPER_ATOM_DENOMINATOR = TWO_ROW_DENOMINATOR * ONE_MINUS_T

# Numerators of the width-4 upper-bound atoms over UPPER_ATOM_DENOMINATOR.
UPPER_ATOM_NUMERATORS = {
    "OO": _poly(0, 0, 0, 0, 1, -2, 1, 4, -9, 4, 7, -18, 11, 12, 756, -286, 301, 474),
    "IO": _poly(0, 0, 1, -1, -1, 1, 0, -3, 2, -1, -2, 6, -9, 9, 289, -113, 115, 180),
    "OI": _poly(0, 0, 1, -1, -1, 1, 0, -3, 2, -1, -2, 6, -9, 9, 289, -113, 115, 180),
    "II": _poly(0, 0, 1, -2, 1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 302, -114, 115, 186),
}

# Generating functions of the transformed two-row walks, per type.
TRANSFORMED_WALK_GFS = {
    "OO": RationalGF(_poly(0, 0, 1), TWO_ROW_DENOMINATOR),
    "IO": RationalGF(_poly(0, 1, -1), TWO_ROW_DENOMINATOR),
    "OI": RationalGF(_poly(0, 1, -1), TWO_ROW_DENOMINATOR),
    "II": RationalGF(_poly(0, 0, 1), TWO_ROW_DENOMINATOR),
}

# Right steps added by the transformation, i.e. the power of t divided out.
ADDED_STEPS = {"OO": 2, "IO": 1, "OI": 1, "II": 0}

# Coefficient corrections subtracted from the transformed-walk series before
# the tail is restored; each is justified by exhaustive search over the
# tailless irreducible bridges of length <= 13.
CORRECTION_POLYNOMIALS = {
    "OO": _poly(1, 2, 3, 4, 5, 10, 17, 24, 45, 72, 109, 188, 301, 474),
    "IO": _poly(1, 1, 0, 0, 2, 4, 6, 11, 16, 26, 44, 67, 115, 180),
    "OI": _poly(1, 1, 0, 0, 2, 4, 6, 11, 16, 26, 44, 67, 115, 180),
    "II": _poly(0, 0, 0, 2, 3, 4, 6, 10, 17, 28, 45, 72, 115, 186),
}


def atoms_width4_upper() -> dict[str, RationalGF]:
    """Width-4 atoms that overcount every type (upper-bound composition)."""
    return {
        t: RationalGF(UPPER_ATOM_NUMERATORS[t], UPPER_ATOM_DENOMINATOR)
        for t in BRIDGE_TYPES
    }


def upper_atom_from_pipeline(bridge_type: str) -> RationalGF:
    """Rebuild one upper atom from the transformed-walk generating function.

    Pipeline: divide the transformed-walk function by t**added (undoing the
    inserted right steps), subtract the correction polynomial, and restore
    the tail by multiplying with 1/(1-t).
    """
    if bridge_type not in BRIDGE_TYPES:
        raise ValueError(f"unknown bridge type {bridge_type!r}")
    base = TRANSFORMED_WALK_GFS[bridge_type]
    unshifted = RationalGF(
        base.numerator.unshift(ADDED_STEPS[bridge_type]), base.denominator
    )
    corrected = unshifted - RationalGF.from_polynomial(
        CORRECTION_POLYNOMIALS[bridge_type]
    )
    return corrected * TAIL_GF


# ---------------------------------------------------------------------------
# Bridge-code compositions
# ---------------------------------------------------------------------------


def _require_atoms(atoms: Mapping[str, RationalGF], needed: tuple[str, ...]) -> None:
    missing = [t for t in needed if t not in atoms]
    if missing:
        raise ValueError(f"missing atoms for types {missing}")


def compose_bridge_code(atoms: Mapping[str, RationalGF], width: int) -> RationalGF:
    """Generating function of all bridges, composed from the alphabet atoms.

    Width 3 realizes the code [IO OO* OI]* ~(IO OO*) r*; width 4 inserts the
    II* factors: [II* IO OO* OI]* II* ~(IO OO*) r*.  The tilde factor is
    (1 + IO OO*) and the trailing right-step run contributes 1/(1-t).
    """
    if width == 3:
        _require_atoms(atoms, ("IO", "OO", "OI"))
        oo_star = atoms["OO"].star()
        loop = atoms["IO"] * oo_star * atoms["OI"]
        return loop.star() * (RationalGF.one() + atoms["IO"] * oo_star) * TAIL_GF
    if width == 4:
        _require_atoms(atoms, ("IO", "OO", "OI", "II"))
        oo_star = atoms["OO"].star()
        ii_star = atoms["II"].star()
        loop = ii_star * atoms["IO"] * oo_star * atoms["OI"]
        return (
            loop.star()
            * ii_star
            * (RationalGF.one() + atoms["IO"] * oo_star)
            * TAIL_GF
        )
    raise ValueError(f"width must be 3 or 4, got {width}")


def important_part_denominator(
    atoms: Mapping[str, RationalGF], width: int, reduce: bool = False
) -> IntPolynomial:
    """Denominator of the starred loop body of the bridge code.

    The loop body is IO OO* OI for width 3 and IO OO* OI II* for width 4.
    With ``reduce=False`` the denominator is returned exactly as the star
    produces it from the atoms' unreduced product; with ``reduce=True`` the
    gcd with the star's numerator is cancelled first, which collapses the
    width-3 denominator to its degree-6 core.  The smallest positive root is
    the same either way (the extra factors only vanish at t = 1).
    """
    if width == 3:
        _require_atoms(atoms, ("IO", "OO", "OI"))
        loop = atoms["IO"] * atoms["OO"].star() * atoms["OI"]
    elif width == 4:
        _require_atoms(atoms, ("IO", "OO", "OI", "II"))
        loop = atoms["IO"] * atoms["OO"].star() * atoms["OI"] * atoms["II"].star()
    else:
        raise ValueError(f"width must be 3 or 4, got {width}")
    starred = loop.star()
    if reduce:
        starred = starred.reduced()
    return starred.denominator


# ---------------------------------------------------------------------------
# Published reference forms reproduced by the compositions above
# ---------------------------------------------------------------------------

# Width-3 bridge generating function, displayed quotient.
W3_BRIDGE_NUMERATOR = _poly(1, -5, 12, -22, 35, -47, 56, -58, 49, -37, 25, -11, 2)
W3_BRIDGE_DENOMINATOR = _poly(
    1, -6, 15, -24, 35, -48, 53, -46, 31, -16, 4, 10, -17, 10, -2
)

# Reduced denominator of the width-3 loop star: 1 - t - 2t^3 - t^4 - 2t^5 - 2t^6.
W3_LOOP_POLYNOMIAL = _poly(1, -1, 0, -2, -1, -2, -2)

# Width-4 lower-bound generating function, displayed quotient.
W4_LOWER_NUMERATOR = _poly(1, -1, 1, 1, -1)
W4_LOWER_DENOMINATOR = _poly(1, -2, 0, 1, -2, -1)

# Width-4 loop-star denominator (degree 44), displayed expansion.
W4_LOOP_DENOMINATOR = IntPolynomial(
    (
        1, -12, 65, -209, 434, -568, 338, 305, -907, 770,
        292, -1462, 1406, 446, -3945, 13408, -42903, 101573, -158117, 136952,
        4507, -182921, 225943, -49787, -215357, 317489, -108470, -314100, 801774, -1620468,
        3204285, -4939210, 4697564, -1024682, -3939143, 5903640, -3220560, -980952, 2685716, -1510904,
        -162295, 605850, -239118, -42432, 55764,
    )
)
