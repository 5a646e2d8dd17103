"""Exact necessary-condition arithmetic for complete bipartite graphs.

Each function evaluates one inequality that every grid representation
of K_{m,n} within a bend budget k must satisfy, either for general
paths or for monotonic ones (both coordinates non-decreasing along
the path).  A violated inequality certifies that no representation of
the stated kind exists.  All arithmetic is exact over the rationals;
nothing here rounds.

The evaluators return a ``BoundVerdict`` carrying both sides of the
comparison.  For ``lbl1`` the source inequality

    (k+1)(m+n) >= m*n + sqrt(2k(m+n))

contains a square root, so it is evaluated in the equivalent squared
form 2k(m+n) <= d*|d| with d = (k+1)(m+n) - m*n; the reported lhs/rhs
are those of the squared form and the violation flag is unchanged by
the rewriting (d < 0 violates both forms).

``verdict`` combines the inequalities with the known constructive
results into a three-valued membership answer; it says "yes" or "no"
only on grounds actually established, and "unknown" otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb


class RangeError(ValueError):
    """Parameters outside the domain of the requested inequality."""


class UnsupportedMError(ValueError):
    """No closed-form witness size is available for this m."""


@dataclass(frozen=True, slots=True)
class BoundVerdict:
    """One evaluated inequality: ``violated`` holds iff lhs > rhs."""

    name: str
    m: int
    n: int
    k: int
    lhs: Fraction
    rhs: Fraction
    violated: bool

    def to_doc(self) -> dict:
        return {
            "name": self.name,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "violated": self.violated,
        }


def _require_range(m: int, n: int, k: int) -> None:
    if not 3 <= m <= n:
        raise RangeError(f"need 3 <= m <= n, got m={m}, n={n}")
    if k < 0:
        raise RangeError(f"need k >= 0, got k={k}")


def _verdict(name: str, m: int, n: int, k: int, lhs: Fraction, rhs: Fraction) -> BoundVerdict:
    return BoundVerdict(name, m, n, k, lhs, rhs, lhs > rhs)


def lbl1(m: int, n: int, k: int) -> BoundVerdict:
    """Necessary condition for K_{m,n} with at most k bends per path.

    Squared form of (k+1)(m+n) >= mn + sqrt(2k(m+n)); see the module
    docstring.  Requires 3 <= m <= n and k >= 0.
    """
    _require_range(m, n, k)
    d = (k + 1) * (m + n) - m * n
    return _verdict("lbl1", m, n, k, Fraction(2 * k * (m + n)), Fraction(d * abs(d)))


def lbl_crossings(m: int, n: int, k: int, c: int) -> BoundVerdict:
    """n(2m-k-2) <= 2c + 2(k+1)m, where c counts the crossings among
    the paths of the m-side.

    Violation for every admissible c rules the representation out; the
    caller supplies the crossing count (or an upper bound for it).
    """
    _require_range(m, n, k)
    if c < 0:
        raise RangeError(f"need c >= 0, got c={c}")
    lhs = Fraction(n * (2 * m - k - 2))
    rhs = Fraction(2 * c + 2 * (k + 1) * m)
    return _verdict("lbl_crossings", m, n, k, lhs, rhs)


def acp_lower(m: int, n: int, k: int, a: int, c: int, p: int) -> BoundVerdict:
    """n(m - ceil((k+1)/2)) <= a + 2c + p for the m-side interaction
    counts of any representation with at most k bends per path."""
    _require_range(m, n, k)
    if min(a, c, p) < 0:
        raise RangeError(f"need a, c, p >= 0, got a={a}, c={c}, p={p}")
    lhs = Fraction(n * (m - _ceil_half(k + 1)))
    rhs = Fraction(a + 2 * c + p)
    return _verdict("acp_lower", m, n, k, lhs, rhs)


def mlbl(m: int, n: int, k: int) -> BoundVerdict:
    """Necessary condition for monotonic representations of K_{m,n}:

        n(2m-k-2) <= k(m-1)m + m^2/2 + 2(k+1)m
    """
    _require_range(m, n, k)
    lhs = Fraction(n * (2 * m - k - 2))
    rhs = k * (m - 1) * m + Fraction(m * m, 2) + 2 * (k + 1) * m
    return _verdict("mlbl", m, n, k, lhs, rhs)


def mlbl2(m: int, n: int, k: int) -> BoundVerdict:
    """Second necessary condition for monotonic representations:

        n(m - ceil((k+1)/2)) <=
            C(m,2) (2 floor((k+1)/2) ceil((k+1)/2) + k)
            + m^2/4 (1 + (ceil((k+1)/2) - floor((k+1)/2))^2)
    """
    _require_range(m, n, k)
    fl, ce = _floor_half(k + 1), _ceil_half(k + 1)
    lhs = Fraction(n * (m - ce))
    rhs = comb(m, 2) * (2 * fl * ce + k) + Fraction(m * m, 4) * (1 + (ce - fl) ** 2)
    return _verdict("mlbl2", m, n, k, lhs, rhs)


def _floor_half(x: int) -> int:
    return x // 2


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def threshold_b2m3(m: int) -> Fraction:
    """Smallest closed-form n beyond which K_{m,n} has no monotonic
    representation with 2m-3 bends per path: 2m^3 - m^2/2 - m + 1.

    Any integer n >= this value gives a graph whose monotonic bend
    number exceeds 2m-3 while 2m-2 bends always suffice.
    """
    if m < 2:
        raise RangeError(f"need m >= 2, got m={m}")
    return 2 * m**3 - Fraction(m * m, 2) - m + 1


def heldt_n(m: int) -> int:
    """Witness size n for which K_{m,n} has a known representation with
    m-1 bends but none with m-2.

    Closed forms exist for even m >= 4 (m^3/4 - m^2/2 - m + 4) and odd
    m >= 7 (m^3/4 - m^2 + 3m/4).  Other m, including m = 5, raise
    ``UnsupportedMError``.
    """
    if m >= 4 and m % 2 == 0:
        return m**3 // 4 - m**2 // 2 - m + 4
    if m >= 7 and m % 2 == 1:
        return (m**3 + 3 * m) // 4 - m**2
    raise UnsupportedMError(f"no witness size is available for m={m}")


# ======================================================================
# Membership verdicts
# ======================================================================


class Membership(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True, slots=True)
class KnownStatus:
    """Three-valued answer with the rule that produced it."""

    membership: Membership
    reason: str

    def to_doc(self) -> dict:
        return {"membership": self.membership.value, "reason": self.reason}


def verdict(m: int, n: int, k: int, monotonic: bool = False) -> KnownStatus:
    """Decide, where known, whether K_{m,n} admits a representation
    with at most k bends per path (monotonic paths if requested).

    Positive answers come from constructions: stars for m <= 1, the
    small-case table for m = 2, and the staircase construction once
    k >= 2m-2.  Negative answers come from violated inequalities:
    ``lbl1`` always applies, ``mlbl``/``mlbl2`` for monotonic paths,
    and the m = 2 table is exact.  Everything else is unknown.
    """
    if m < 0 or n < 0 or m > n:
        raise RangeError(f"need 0 <= m <= n, got m={m}, n={n}")
    if k < 0:
        raise RangeError(f"need k >= 0, got k={k}")

    if m <= 1:
        return KnownStatus(
            Membership.YES, "stars and edgeless graphs embed with straight paths"
        )
    if m == 2:
        needed = 0 if n <= 1 else (1 if n <= 4 else 2)
        if k >= needed:
            return KnownStatus(
                Membership.YES, f"two-row case needs only {needed} bends for n={n}"
            )
        return KnownStatus(
            Membership.NO, f"two-row case is known to need {needed} bends for n={n}"
        )
    if k >= 2 * m - 2:
        return KnownStatus(
            Membership.YES, "staircase construction realizes K_{m,n} with 2m-2 bends"
        )
    v = lbl1(m, n, k)
    if v.violated:
        return KnownStatus(Membership.NO, f"lbl1 violated: {v.lhs} > {v.rhs}")
    if monotonic:
        for v in (mlbl(m, n, k), mlbl2(m, n, k)):
            if v.violated:
                return KnownStatus(
                    Membership.NO, f"{v.name} violated: {v.lhs} > {v.rhs}"
                )
    return KnownStatus(Membership.UNKNOWN, "no applicable rule decides this case")
