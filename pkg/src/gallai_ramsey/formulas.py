"""Closed-form extremal orders and Gallai-Ramsey values for (K4PLUS, K3) profiles.

Everything here is exact integer arithmetic.  Rational comparisons such as
``a <= (p/q) * b`` are checked as ``q*a <= p*b``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ParameterError


class ParityCase(enum.Enum):
    EE = 1    # s even, k-s even
    EO = 2    # s even, k-s odd
    KODD = 3  # s = k, k odd
    OO = 4    # s odd, k-s odd
    OE = 5    # s odd, k-s even, s < k

    @property
    def j(self) -> int:
        return self.value


def _check_range(k: int, s: int) -> None:
    if k < 1 or s < 0 or s > k:
        raise ParameterError(f"need k >= 1 and 0 <= s <= k, got k={k}, s={s}")


def parity_case(k: int, s: int) -> ParityCase:
    _check_range(k, s)
    if s == k and k % 2 == 1:
        return ParityCase.KODD
    if s % 2 == 0:
        return ParityCase.EE if (k - s) % 2 == 0 else ParityCase.EO
    return ParityCase.OO if (k - s) % 2 == 1 else ParityCase.OE


def _half(x: int) -> int:
    if x < 0 or x % 2:
        raise ParameterError(f"exponent {x}/2 is not a nonnegative integer")
    return x // 2


def f_j(j: int, k: int, s: int) -> int:
    """The j-th member of the family, defined only where its exponents are whole."""
    if j == 1:
        return 17 ** _half(s) * 5 ** _half(k - s)
    if j == 2:
        return 2 * 17 ** _half(s) * 5 ** _half(k - s - 1)
    if j == 3:
        return 4 * 17 ** _half(k - 1)
    if j == 4:
        return 8 * 17 ** _half(s - 1) * 5 ** _half(k - s - 1)
    if j == 5:
        return 16 * 17 ** _half(s - 1) * 5 ** _half(k - s - 2)
    raise ParameterError(f"no f_{j}")


def f(k: int, s: int) -> int:
    """Largest order of a Gallai k-coloring avoiding the (s, k-s) forbidden profile."""
    return f_j(parity_case(k, s).j, k, s)


def gr_value(k: int, s: int) -> int:
    return f(k, s) + 1


_RAMSEY = {
    ("K3", "K3"): 6,
    ("K4PLUS", "K3"): 9,
    ("K3", "K4PLUS"): 9,
    ("K4PLUS", "K4PLUS"): 18,
}


def ramsey_constant(pair) -> int:
    """Classical two-color Ramsey numbers for K3 / K4PLUS pairs (lookup)."""
    key = tuple(str(p).upper().replace("+", "PLUS") for p in pair)
    try:
        return _RAMSEY[key]
    except KeyError:
        raise ParameterError(f"no stored Ramsey number for {pair!r}") from None


def table(k_max: int) -> list:
    """Rows ``(k, s, case, f, gr)`` for ``1 <= k <= k_max``, ``0 <= s <= k``."""
    rows = []
    for k in range(1, k_max + 1):
        for s in range(k + 1):
            val = f(k, s)
            rows.append((k, s, parity_case(k, s).name, val, val + 1))
    return rows


# inequality sweep -----------------------------------------------------------

# partner family for f(k-1, s-2) given the family of f(k, s), with the exact ratio
# numerator/denominator
_SHIFT_K1_S2 = {
    ParityCase.EE: (ParityCase.EO, 2, 17),
    ParityCase.KODD: (ParityCase.OO, 2, 17),
    ParityCase.OO: (ParityCase.OE, 2, 17),
    ParityCase.EO: (ParityCase.EE, 5, 34),
    ParityCase.OE: (ParityCase.OO, 5, 34),
}


@dataclass
class Violation:
    display: str
    k: int
    s: int
    j: int
    lhs: int
    rhs: int


@dataclass
class InequalityReport:
    k_max: int
    checked: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "k_max": self.k_max,
            "checked": dict(self.checked),
            # big values as decimal strings so no JSON reader rounds them
            "violations": [dict(vars(v), lhs=str(v.lhs), rhs=str(v.rhs)) for v in self.violations],
            "ok": self.ok,
        }


def verify_inequalities(k_max: int) -> InequalityReport:
    """Sweep every display over ``1 <= k <= k_max`` wherever its arguments are in range.

    Displays ``1``-``5`` are the recursion inequalities; ``6`` is the exact
    identity ``17 f(k-2, s-2) = f(k, s)`` (same family on both sides); ``7`` the
    exact cross-family ratio of ``f(k-1, s-2)`` to ``f(k, s)`` (2/17 or 5/34)
    together with the bound ``f(k-1, s-2) <= 5/34 f(k, s)``; ``8`` is
    ``f(k, s-2) <= 5/17 f(k, s)``.
    """
    if k_max < 2:
        raise ParameterError("k_max must be >= 2")
    rep = InequalityReport(k_max)

    def ok(k, s):
        return k >= 1 and 0 <= s <= k

    def check(display, k, s, lhs, rhs, equal=False):
        rep.checked[display] = rep.checked.get(display, 0) + 1
        good = lhs == rhs if equal else lhs <= rhs
        if not good:
            rep.violations.append(Violation(display, k, s, parity_case(k, s).j, lhs, rhs))

    for k in range(1, k_max + 1):
        for s in range(k + 1):
            fk = f(k, s)
            case = parity_case(k, s)
            if ok(k - 1, s):
                check("1", k, s, 2 * f(k - 1, s), fk)
            if ok(k - 2, s):
                check("2", k, s, 5 * f(k - 2, s), fk)
            if s >= 1 and ok(k - 1, s - 1):
                check("3", k, s, 16 * f(k - 1, s - 1), 5 * fk)
            if s >= 1 and ok(k - 2, s - 1):
                check("4", k, s, 8 * f(k - 2, s - 1), fk)
            if s >= 1 and ok(k - 1, s - 1):
                check("5", k, s, f(k, s - 1) + f(k - 1, s - 1), fk)
            if s >= 2 and ok(k - 2, s - 2):
                # the same family applies two steps down, so f_j itself is well defined
                inner = parity_case(k - 2, s - 2)
                if inner is not case:
                    rep.violations.append(Violation("6-family", k, s, case.j, inner.j, case.j))
                check("6", k, s, 17 * f_j(case.j, k - 2, s - 2), f_j(case.j, k, s), equal=True)
            if s >= 2 and ok(k - 1, s - 2):
                partner, num, den = _SHIFT_K1_S2[case]
                inner = parity_case(k - 1, s - 2)
                if inner is not partner:
                    rep.violations.append(Violation("7-family", k, s, case.j, inner.j, partner.j))
                lower = f(k - 1, s - 2)
                check("7-ratio", k, s, den * lower, num * fk, equal=True)
                check("7", k, s, 34 * lower, 5 * fk)
            if s >= 2:
                check("8", k, s, 17 * f(k, s - 2), 5 * fk)
    return rep
