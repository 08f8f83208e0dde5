"""Closed-form packet success probabilities for the standard layouts.

These are the closed-form evaluators: binomial tails for uniform single- and
two-channel layouts, plus the two fixed shared-photon polynomials for the
6-photon/7-qudit and 15-photon/11-qudit layouts.  Binomial coefficients are
exact integers (``math.comb``); each term is converted to floating point on
accumulation, summed left to right.  Passing :class:`fractions.Fraction`
probabilities keeps the arithmetic exact, which the tests use to bound the
double-precision roundoff.

Every return value is checked to lie in [0, 1] within 1e-12 and clamped.
"""

from __future__ import annotations

from math import comb

from .model import QrsCode, photons_per_qudit


class WithheldExceedsTolerance(ValueError):
    """More withheld qudits than the code can absorb."""


class ToleranceMismatch(ValueError):
    """Two-channel closed form requires a single-logical-qudit code (2k - d = 1)."""


_RANGE_TOL = 1e-12


def _checked(value):
    """Assert value is a probability up to roundoff; clamp floats into [0, 1]."""
    if not (-_RANGE_TOL <= value <= 1 + _RANGE_TOL):
        raise ArithmeticError(f"probability {value!r} outside [0, 1] beyond roundoff")
    if isinstance(value, float):
        return min(max(value, 0.0), 1.0)
    return value


def _check_p(p) -> None:
    if not (0 <= p <= 1):
        raise ValueError(f"probability {p} outside [0, 1]")


def qudit_survival(code: QrsCode, q: int, p):
    """Per-qudit survival p**m with m photons per qudit at degree q."""
    return p ** photons_per_qudit(code, q)


def ps_single(code: QrsCode, q: int, p):
    """Success probability with all d qudits in one channel.

    sum_{j=0}^{d-k} C(d, j) P^(d-j) (1-P)^j  with  P = p^ceil(log2(d)/q).
    """
    _check_p(p)
    d = code.d
    P = qudit_survival(code, q, p)
    total = sum(comb(d, j) * P ** (d - j) * (1 - P) ** j for j in range(code.tolerance() + 1))
    return _checked(total)


def ps_single_withheld(code: QrsCode, q: int, p, withheld: int):
    """Single-channel success when only d - withheld qudits are sent.

    The withheld qudits consume tolerance up front:
    sum_{j=0}^{d-k-l} C(d-l, j) P^(d-l-j) (1-P)^j.
    """
    _check_p(p)
    if withheld < 0:
        raise ValueError("withheld must be non-negative")
    if withheld > code.tolerance():
        raise WithheldExceedsTolerance(
            f"withheld={withheld} exceeds tolerance {code.tolerance()}"
        )
    sent = code.d - withheld
    budget = code.tolerance() - withheld
    P = qudit_survival(code, q, p)
    total = sum(comb(sent, j) * P ** (sent - j) * (1 - P) ** j for j in range(budget + 1))
    return _checked(total)


def ps_two_channel(code: QrsCode, q: int, n: int, p_a, p_b):
    """Success with n qudits in channel B and d - n in channel A.

    sum_{i=0}^{(d-1)/2} sum_{j=0}^{i} C(n, i-j) P_B^(n-(i-j)) (1-P_B)^(i-j)
                                    * C(d-n, j) P_A^(d-n-j) (1-P_A)^j

    The outer bound (d-1)/2 equals the tolerance only for codes with a single
    logical qudit (2k - d = 1); other codes are rejected.  Terms whose loss
    count exceeds a block size are zero and skipped.
    """
    _check_p(p_a)
    _check_p(p_b)
    if code.logical_qudits() != 1:
        raise ToleranceMismatch(f"2k-d={code.logical_qudits()}, need exactly 1")
    d = code.d
    if not (0 <= n <= d):
        raise ValueError(f"n={n} outside 0..{d}")
    P_a = qudit_survival(code, q, p_a)
    P_b = qudit_survival(code, q, p_b)
    total = sum(
        comb(n, i - j)
        * P_b ** (n - (i - j))
        * (1 - P_b) ** (i - j)
        * comb(d - n, j)
        * P_a ** (d - n - j)
        * (1 - P_a) ** j
        for i in range((d - 1) // 2 + 1)
        for j in range(i + 1)
        if i - j <= n and j <= d - n
    )
    return _checked(total)


def ps6(p1, p2):
    """Success polynomial of the 6-photon/7-qudit shared-photon layout.

    Channel 2 carries the three degree-4 photons (each holding one full qudit
    plus one qubit of the shared qudit); channel 1 carries the three degree-3
    photons.  Seven monomials: every photon-loss pattern that erases at most
    three qudits.
    """
    _check_p(p1)
    _check_p(p2)
    w1, w2 = 1 - p1, 1 - p2
    total = (
        p1**3 * p2**3
        + comb(3, 1) * p2**2 * w2 * p1**3
        + comb(3, 1) * p1**2 * w1 * p2**3
        + comb(3, 1) * p2**2 * w2 * comb(3, 1) * p1**2 * w1
        + comb(3, 2) * p2 * w2**2 * p1**3
        + comb(3, 2) * p2**3 * w1**2 * p1
        + p2**3 * w1**3
    )
    return _checked(total)


# Survivor-count corrections of the 15-photon polynomial: of the C(7,3)
# three-subsets of channel-2 photons, 20 erase six distinct qudits and are
# fatal; the two mixed corrections subtract the analogous fatal combinations
# with one or two channel-1 photons also lost.
_C15_22 = comb(7, 2) * comb(8, 2) - 3 * (
    comb(2, 1) * comb(2, 1) * comb(6, 2) + comb(2, 1) * comb(1, 1) * comb(5, 2)
)
_C15_31 = comb(7, 3) * comb(8, 1) - (
    3 * (comb(2, 2) * comb(2, 1) * comb(5, 1) + comb(2, 2) * comb(1, 1) * comb(4, 2))
    + 20 * comb(8, 1)
)


def ps15(p1, p2):
    """Success polynomial of the 15-photon/11-qudit mixed-degree layout.

    Channel 2 carries seven degree-4 photons, each spanning two qudits with
    2+2 qubits; channel 1 carries eight degree-2 photons, each holding half
    of one qudit.  The corrected coefficients (C(7,3)-20 = 15, 348, 72)
    remove loss patterns that erase more than five qudits.  The two
    two-losses-in-one-channel terms carry the squared loss factor their
    survivor exponents imply.
    """
    _check_p(p1)
    _check_p(p2)
    w1, w2 = 1 - p1, 1 - p2
    total = (
        p1**8 * p2**7
        + comb(7, 1) * p2**6 * w2 * p1**8
        + comb(8, 1) * p2**7 * w1 * p1**7
        + comb(7, 2) * p2**5 * w2**2 * p1**8
        + comb(8, 2) * p2**7 * w1**2 * p1**6
        + comb(7, 1) * comb(8, 1) * p2**6 * w2 * w1 * p1**7
        + (comb(7, 3) - 20) * p2**4 * w2**3 * p1**8
        + comb(8, 3) * p2**7 * w1**3 * p1**5
        + comb(7, 2) * comb(8, 1) * p2**5 * w2**2 * w1 * p1**7
        + comb(7, 1) * comb(8, 2) * p2**6 * w2 * w1**2 * p1**6
        + comb(8, 4) * p2**7 * w1**4 * p1**4
        + comb(7, 1) * comb(8, 3) * p2**6 * w2 * w1**3 * p1**5
        + _C15_22 * p2**5 * w2**2 * w1**2 * p1**6
        + _C15_31 * p2**4 * w2**3 * w1 * p1**7
        + comb(8, 5) * p2**7 * w1**5 * p1**3
    )
    return _checked(total)
