"""Closed-form generating functions for king-permutation statistics.

Everything here is an exact truncated series (see :mod:`kingmesh.series`).
Three families are exposed:

* ``class_series``            -- plain counts of a restricted class, in t;
* ``strong_point_series``     -- counts refined by the number of strong
                                 points (occurrences of the length-1 catalog
                                 patterns X / X'), in t and u;
* ``avoidance_series`` /
  ``distribution_series``     -- per catalog pattern: the number of class
                                 members with zero occurrences, respectively
                                 the full occurrence distribution marked by u.

The distribution builders exist only for the solved catalog entries; the open
entries have exhaustive data (see :mod:`kingmesh.oracle`) but no closed form.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .kings import KingClass
from .mesh import SOLVED_IDS
from .series import Series, UPoly

BASE_NAMES = ("A", "B", "C", "Atu", "Btu", "Ctu")


@lru_cache(maxsize=None)
def king_series(order: int) -> Series:
    """Counting series of king permutations: sum of n! t^n (1-t)^n / (1+t)^n.

    Term n is divisible by t^n, so summing n = 0..order is exact at the
    truncation order.
    """
    one = Series.one(order)
    t = Series.t(order)
    step = (one - t) / (one + t) * t
    total = one
    term = one
    for n in range(1, order + 1):
        term = term * step * n
        if term.is_zero():
            break
        total = total + term
    return total


@lru_cache(maxsize=None)
def class_series(king_class: KingClass, order: int) -> Series:
    """Counting series of a restricted king class.

    ALL is :func:`king_series`; S and L share one series (reverse-complement
    swaps them), as do SL and LS (complement swaps them).
    """
    kc = KingClass(king_class)
    a = king_series(order)
    one = Series.one(order)
    t = Series.t(order)
    if kc is KingClass.ALL:
        return a
    if kc in (KingClass.S, KingClass.L):
        return a / (one + t)
    return t / (one + t) + a / ((one + t) * (one + t))


@lru_cache(maxsize=None)
def strong_point_series(king_class: KingClass, order: int) -> Series:
    """Distribution of strong points over a class, marked by u.

    Over the full class this is simultaneously the distribution of X and of
    X'; over S/L it is the distribution of X; over SL that of X and over LS
    that of X' (the symmetry that maps the classes onto each other also maps
    one length-1 pattern to the other).
    """
    kc = KingClass(king_class)
    a = king_series(order)
    one = Series.one(order)
    t = Series.t(order)
    u = Series.term(order, upow=1)
    ut = Series.term(order, tpow=1, upow=1)
    den = one + t * (one + u + ut) + t * (one - u) * a
    if kc is KingClass.ALL:
        return (one + ut) * (one + t) * a / den
    if kc in (KingClass.S, KingClass.L):
        return (one + t) * a / den
    return ut / (one + ut) + (one + t) * a / ((one + ut) * den)


def strong_point_avoiders(order: int) -> Series:
    """Series of king permutations with no strong point at all; identical for
    every one of the five classes."""
    a = king_series(order)
    one = Series.one(order)
    t = Series.t(order)
    return (one + t) * a / (one + t + t * a)


def _halved_king_counts(order: int) -> list[int]:
    a = king_series(order)
    halves = [0, 0]
    for n in range(2, order + 1):
        count = a.coeff(n).evaluate(0)
        if count % 2:
            raise AssertionError(f"king count at n={n} is odd: {count}")
        halves.append(count // 2)
    return halves[: order + 1]


@lru_cache(maxsize=None)
def avoidance_series(ident: str, order: int) -> Series:
    """Counting series of king permutations avoiding a solved catalog pattern."""
    ident = str(ident)
    if ident not in SOLVED_IDS:
        raise ValueError(f"no closed avoidance form for pattern {ident!r}")
    a = king_series(order)
    one = Series.one(order)
    t = Series.t(order)
    opt = one + t
    if ident in ("X", "X'"):
        return strong_point_avoiders(order)
    if ident == "10":
        # Exactly half the class of each length n >= 2 avoids; the pattern
        # needs the outer elements increasing and reversal flips that.
        halves = _halved_king_counts(order)
        rows = [1, 1] + halves[2:] if order >= 1 else [1]
        return Series.from_ints(order, rows[: order + 1])
    if ident in ("11", "14", "30", "34", "36", "45"):
        return a  # unavoidable-free: no king permutation contains these
    if ident == "12":
        return t + a / opt
    if ident == "13":
        return t * t / opt + (one + 2 * t) * a / (opt * opt)
    if ident == "16":
        return opt * opt * a / (one + t + t * a)
    if ident == "17":
        return (one / opt + t * opt / (one + t + t * a)) * a
    if ident == "19":
        return (one + t - t * a / opt) * a
    if ident == "20":
        return (one + t * t / opt - t * t * a / (opt * opt)) * a
    if ident == "22":
        return (one + t * t - t * t * a * a / (opt * opt)) * a
    if ident == "27":
        return (t + one / opt - t * t * a * a / (opt * (one + t + t * a))) * a
    if ident == "28":
        return opt * opt * a / (opt * opt + t * t * (a - t - one) * a)
    if ident == "33":
        q = one + t + t * a
        return opt * (one + t + t * (2 * one + t) * a) * a / (q * q)
    if ident == "55":
        return opt * (a - t) / (one + t * (a - t - one))
    if ident == "63":
        return (2 * a - t - one) / (a - t)
    # "64"
    return one + t + one / opt - one / a


@lru_cache(maxsize=None)
def distribution_series(ident: str, order: int) -> Series:
    """Occurrence distribution of a solved catalog pattern over king
    permutations, with u marking the number of occurrences.

    At u = 0 this reduces to :func:`avoidance_series`, and at u = 1 every
    coefficient collapses to the class count.
    """
    ident = str(ident)
    if ident not in SOLVED_IDS:
        raise ValueError(f"no closed distribution form for pattern {ident!r}")
    a = king_series(order)
    one = Series.one(order)
    t = Series.t(order)
    u = Series.term(order, upow=1)
    ut = Series.term(order, tpow=1, upow=1)
    opt = one + t
    if ident in ("X", "X'"):
        return strong_point_series(KingClass.ALL, order)
    if ident == "10":
        halves = _halved_king_counts(order)
        coeffs = [UPoly.one()] + [UPoly.one()] * (1 if order >= 1 else 0)
        coeffs += [UPoly((h, h)) for h in halves[2 : order + 1]]
        return Series(order, coeffs[: order + 1])
    if ident in ("11", "14", "30", "34", "36", "45"):
        return a
    if ident == "12":
        return a / opt + (a.subst_ut(1) / (one + ut)).mul_t(1)
    if ident == "13":
        return (t * t * (one - u)) / opt + (one + 2 * t + u * t * t) * a / (opt * opt)
    if ident == "16":
        return _distribution_16(order)
    if ident == "17":
        den = one + t * (one + u + ut + (one - u) * a)
        return (one / opt + t * opt / den) * a
    if ident == "19":
        return (one + t - ut - t * (one - u) * a / opt) * a
    if ident == "20":
        return (one + t * t * (one - u) / opt - t * t * (one - u) * a / (opt * opt)) * a
    if ident == "22":
        return (one + t * t * (one - u) * (one - a * a / (opt * opt))) * a
    if ident == "27":
        den = one + t * (one + u + ut + (one - u) * a)
        return (one + (t * t * (one - u) / opt) * (one - a * a / den)) * a
    if ident == "28":
        den = one + t * (2 * one + t * (one + (one - u) * (a - t - one) * a))
        return opt * opt * a / den
    if ident == "33":
        num = opt * (one + t * (one + u + ut + (2 * one - u + t) * a)) * a
        den = (one + t + t * a) * (one + t * (one + u + ut + (one - u) * a))
        return num / den
    if ident == "55":
        num = opt * (t * (one - u) - (one - ut) * a)
        den = -one + t * (one - u + t - (one - u) * a)
        return num / den
    if ident == "63":
        num = opt * (one - u) + (u - 2 * one + u * t * t) * a
        den = -u + t * (one - u + ut) - (one - u) * a
        return num / den
    # "64"
    num = (u - one) * (one + ut) * opt + (2 * one - u + t * (2 * one + t + u - u * u)) * a
    den = u * (one + ut) * opt + (one - u) * (one + t + ut) * a
    return num / den


def _distribution_16(order: int) -> Series:
    # E = sum_{i>=0} u^C(i,2) t^i (1+u^i t) * prod_{j<=i} F(u^j t) * prod_{k<=i, k>=1} G(u^k t)
    # with F = (1+t)A/(1+t+tA) and G = (A-1-t)/((1+t)A).  Consecutive partial
    # products differ by the factor (FG)(u^i t), and F*G telescopes to
    # H = (A-1-t)/(1+t+tA), so the running product only ever multiplies by a
    # substituted-univariate series (monomial coefficients, cheap).  H is
    # divisible by t^4, which makes the tail of the sum vanish quickly.
    a = king_series(order)
    one = Series.one(order)
    t = Series.t(order)
    q = one + t + t * a
    running = (one + t) * a / q
    h = (a - one - t) / q
    total = (one + t) * running
    for i in range(1, order + 1):
        running = running * h.subst_ut(i)
        if running.is_zero():
            break
        factor = one + Series.term(order, tpow=1, upow=i)
        term = (factor * running).mul_t(i).scale_u(math.comb(i, 2))
        total = total + term
    return total


def series_by_name(name: str, order: int) -> Series:
    """Resolve a CLI-style series name.

    ``A`` / ``B`` / ``C`` are the class counting series (full class, the
    not-beginning-with-smallest class, and the doubly restricted class);
    ``Atu`` / ``Btu`` / ``Ctu`` are the corresponding strong-point
    distributions; ``P:<id>`` and ``E:<id>`` are per-pattern avoidance and
    distribution series.
    """
    if name in BASE_NAMES:
        kc = {
            "A": KingClass.ALL,
            "B": KingClass.S,
            "C": KingClass.SL,
            "Atu": KingClass.ALL,
            "Btu": KingClass.S,
            "Ctu": KingClass.SL,
        }[name]
        if name.endswith("tu"):
            return strong_point_series(kc, order)
        return class_series(kc, order)
    if name.startswith("P:"):
        return avoidance_series(name[2:], order)
    if name.startswith("E:"):
        return distribution_series(name[2:], order)
    raise ValueError(
        f"unknown series {name!r}; expected one of {BASE_NAMES}, P:<id> or E:<id>"
    )
