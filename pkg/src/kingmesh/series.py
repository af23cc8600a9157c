"""Exact truncated power series in t whose coefficients are integer polynomials
in a marker variable u.

A ``UPoly`` is an element of Z[u] with arbitrary-precision coefficients; a
``Series`` of order N represents an element of Z[u][[t]] modulo t^(N+1).  All
arithmetic is exact: there is no floating point anywhere, and division is only
defined when the constant term of the divisor is the constant polynomial +1 or
-1 (every denominator used by the generating-function builders has this form,
so a failure here always indicates a transcription bug rather than a numerical
problem).
"""

from __future__ import annotations

from typing import Iterable, Sequence


class NonUnitConstantTermError(ArithmeticError):
    """Raised when dividing by a series whose t^0 coefficient is not +-1.

    Carries the offending constant coefficient so reports can show it.
    """

    def __init__(self, coefficient: "UPoly"):
        self.coefficient = coefficient
        super().__init__(
            f"series division needs a constant term of +1 or -1, got {coefficient}"
        )


class UPoly:
    """Dense polynomial in u over Python ints, kept in canonical form
    (no trailing zero coefficients; the zero polynomial stores nothing)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @staticmethod
    def const(value: int) -> "UPoly":
        return UPoly((value,))

    @staticmethod
    def zero() -> "UPoly":
        return _UP_ZERO

    @staticmethod
    def one() -> "UPoly":
        return _UP_ONE

    @staticmethod
    def monomial(power: int, coefficient: int = 1) -> "UPoly":
        """coefficient * u**power"""
        if power < 0:
            raise ValueError("power must be nonnegative")
        return UPoly((0,) * power + (coefficient,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree, with the convention degree(0) = -1."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def evaluate(self, value: int) -> int:
        acc = 0
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    def shift(self, power: int) -> "UPoly":
        """Multiply by u**power.  A negative power performs exact division by
        u**(-power) and requires the low coefficients to vanish."""
        if self.is_zero or power == 0:
            return self
        if power > 0:
            return UPoly((0,) * power + self._c)
        k = -power
        if any(self._c[:k]):
            raise ValueError(f"{self} is not divisible by u^{k}")
        return UPoly(self._c[k:])

    def _scaled(self, factor: int) -> "UPoly":
        if factor == 0:
            return _UP_ZERO
        if factor == 1:
            return self
        return UPoly(c * factor for c in self._c)

    def __add__(self, other):
        other = _as_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return UPoly(-c for c in self._c)

    def __mul__(self, other):
        other = _as_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return _UP_ZERO
        if len(a) == 1:
            return other._scaled(a[0])
        if len(b) == 1:
            return self._scaled(b[0])
        # Single-term operands are common (substituted series have monomial
        # coefficients); shifting beats the quadratic loop there.
        ia = _single_term_index(a)
        if ia >= 0:
            return other._scaled(a[ia]).shift(ia)
        ib = _single_term_index(b)
        if ib >= 0:
            return self._scaled(b[ib]).shift(ib)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return UPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == (() if other == 0 else (other,))
        if isinstance(other, UPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"UPoly({self._c!r})"

    def __str__(self):
        return format_upoly(self)

    @staticmethod
    def parse(text: str) -> "UPoly":
        return parse_upoly(text)


def _single_term_index(coeffs: Sequence[int]) -> int:
    """Index of the only nonzero entry, or -1 if there are several."""
    found = -1
    for i, c in enumerate(coeffs):
        if c:
            if found >= 0:
                return -1
            found = i
    return found


def _as_upoly(value) -> "UPoly":
    if isinstance(value, UPoly):
        return value
    if isinstance(value, int):
        return UPoly((value,))
    return NotImplemented


_UP_ZERO = UPoly()
_UP_ONE = UPoly((1,))


def format_upoly(p: UPoly) -> str:
    """Render ascending in u, omitting zero terms: ``500+136u+10u^2``.

    The zero polynomial renders as ``0``; unit coefficients drop the ``1``
    (``u^3``, ``-u``)."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "u" if k == 1 else f"u^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


def parse_upoly(text: str) -> UPoly:
    """Inverse of :func:`format_upoly` (also accepts redundant '+'/spaces)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict[int, int] = {}
    i, n = 0, len(s)
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < n and s[j].isdigit():
            j += 1
        mag_digits = s[i:j]
        i = j
        power = 0
        if i < n and s[i] == "u":
            i += 1
            power = 1
            if i < n and s[i] == "^":
                i += 1
                j = i
                while j < n and s[j].isdigit():
                    j += 1
                if j == i:
                    raise ValueError(f"missing exponent at position {i} in {text!r}")
                power = int(s[i:j])
                i = j
        elif not mag_digits:
            raise ValueError(f"expected term at position {i} in {text!r}")
        mag = int(mag_digits) if mag_digits else 1
        coeffs[power] = coeffs.get(power, 0) + sign * mag
    if not coeffs:
        return _UP_ZERO
    out = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return UPoly(out)


class Series:
    """Power series in t truncated at a fixed inclusive order, with UPoly
    coefficients.  Instances are immutable; arithmetic requires equal orders."""

    __slots__ = ("_order", "_c")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = [_coerce_coeff(x) for x in coeffs]
        if len(c) > order + 1:
            raise ValueError("more coefficients than the order allows")
        c.extend([_UP_ZERO] * (order + 1 - len(c)))
        self._order = order
        self._c = tuple(c)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "Series":
        return Series(order)

    @staticmethod
    def one(order: int) -> "Series":
        return Series(order, (1,))

    @staticmethod
    def t(order: int) -> "Series":
        return Series.term(order, tpow=1)

    @staticmethod
    def term(order: int, coefficient: int = 1, tpow: int = 0, upow: int = 0) -> "Series":
        """coefficient * u**upow * t**tpow (zero if tpow exceeds the order)."""
        if tpow > order:
            return Series(order)
        c = [_UP_ZERO] * (tpow + 1)
        c[tpow] = UPoly.monomial(upow, coefficient)
        return Series(order, c)

    @staticmethod
    def from_ints(order: int, values: Iterable[int]) -> "Series":
        return Series(order, values)

    # -- basic access -------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[UPoly, ...]:
        return self._c

    def coeff(self, n: int) -> UPoly:
        if not 0 <= n <= self._order:
            raise IndexError(f"coefficient t^{n} outside truncation order {self._order}")
        return self._c[n]

    def is_zero(self, through: int | None = None) -> bool:
        upto = self._order if through is None else min(through, self._order)
        return all(c.is_zero for c in self._c[: upto + 1])

    def first_nonzero(self) -> int | None:
        for n, c in enumerate(self._c):
            if not c.is_zero:
                return n
        return None

    # -- ring operations ----------------------------------------------------

    def _check_order(self, other: "Series") -> None:
        if self._order != other._order:
            raise ValueError(
                f"truncation orders differ: {self._order} != {other._order}"
            )

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        return Series(self._order, (a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        return Series(self._order, (a - b for a, b in zip(self._c, other._c)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Series(self._order, (-a for a in self._c))

    def __mul__(self, other):
        if isinstance(other, (int, UPoly)):
            f = _as_upoly(other)
            return Series(self._order, (a * f for a in self._c))
        if not isinstance(other, Series):
            return NotImplemented
        self._check_order(other)
        n = self._order
        out = [_UP_ZERO] * (n + 1)
        b = other._c
        for i, x in enumerate(self._c):
            if x.is_zero:
                continue
            for j in range(n + 1 - i):
                y = b[j]
                if not y.is_zero:
                    out[i + j] = out[i + j] + x * y
        return Series(n, out)

    __rmul__ = __mul__

    def divide(self, divisor: "Series") -> "Series":
        """The unique q with divisor*q == self up to the truncation order.

        Requires the t^0 coefficient of the divisor to be the constant +1 or
        -1 (forward substitution stays in Z[u])."""
        self._check_order(divisor)
        b0 = divisor._c[0]
        if b0.degree > 0 or b0.coeff(0) not in (1, -1):
            raise NonUnitConstantTermError(b0)
        inv = b0.coeff(0)
        n = self._order
        b_terms = [(m, c) for m, c in enumerate(divisor._c) if m > 0 and not c.is_zero]
        out: list[UPoly] = []
        for k in range(n + 1):
            acc = self._c[k]
            for m, c in b_terms:
                if m > k:
                    break
                q = out[k - m]
                if not q.is_zero:
                    acc = acc - c * q
            out.append(acc._scaled(inv))
        return Series(n, out)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.divide(other)

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, UPoly)):
            c = _as_upoly(other)
            s = Series(self._order)
            return Series(self._order, (c,)) if not c.is_zero else s
        return NotImplemented

    # -- substitutions and shifts -------------------------------------------

    def subst_ut(self, power: int) -> "Series":
        """Substitute t -> u**power * t (the t^n coefficient gains u**(power*n))."""
        if power < 0:
            raise ValueError("power must be nonnegative")
        if power == 0:
            return self
        return Series(
            self._order, (c.shift(power * n) for n, c in enumerate(self._c))
        )

    def eval_u(self, value: int) -> "Series":
        """Evaluate every coefficient at u = value (result has constant coefficients)."""
        return Series(self._order, (UPoly.const(c.evaluate(value)) for c in self._c))

    def mul_t(self, power: int) -> "Series":
        """Multiply by t**power at the same order (top coefficients fall off)."""
        if power < 0:
            raise ValueError("power must be nonnegative; use div_t for division")
        if power == 0:
            return self
        return Series(self._order, (_UP_ZERO,) * power + self._c[: self._order + 1 - power])

    def div_t(self, power: int) -> "Series":
        """Exact division by t**power; the result order drops by power."""
        if power == 0:
            return self
        if power > self._order:
            raise ValueError("cannot divide past the truncation order")
        if any(not c.is_zero for c in self._c[:power]):
            raise ValueError(f"series is not divisible by t^{power}")
        return Series(self._order - power, self._c[power:])

    def div_u(self) -> "Series":
        """Exact division of every coefficient by u."""
        return Series(self._order, (c.shift(-1) for c in self._c))

    def scale_u(self, power: int) -> "Series":
        """Multiply every coefficient by u**power."""
        return Series(self._order, (c.shift(power) for c in self._c))

    def truncated(self, order: int) -> "Series":
        """Forget coefficients above the given (smaller or equal) order."""
        if order > self._order:
            raise ValueError("cannot extend a truncated series")
        return Series(order, self._c[: order + 1])

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._order == other._order and self._c == other._c

    def __hash__(self):
        return hash((self._order, self._c))

    def __repr__(self):
        return f"Series(order={self._order}, {str(self)!r})"

    def __str__(self):
        parts = []
        for n, c in enumerate(self._c):
            if c.is_zero:
                continue
            body = format_upoly(c)
            if "+" in body[1:] or "-" in body[1:]:
                body = f"({body})"
            if n == 0:
                parts.append(body)
            else:
                tpart = "t" if n == 1 else f"t^{n}"
                parts.append(tpart if body == "1" else f"{body}*{tpart}")
        return " + ".join(parts) if parts else "0"


def _coerce_coeff(value) -> UPoly:
    if isinstance(value, UPoly):
        return value
    if isinstance(value, int):
        return UPoly((value,))
    raise TypeError(f"cannot use {value!r} as a series coefficient")
