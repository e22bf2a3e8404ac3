"""Independent checks that a formula really is an identity for pi/4.

``fold_formula`` composes every term through the exact arctangent addition
law arctan(a/b) + s*arctan(c/d) = arctan((ad + s*bc)/(bd - s*ac)) on raw
integers; a complete formula must land on tangent exactly 1. No fraction
reduction is performed, so the intermediate integers grow, which is fine
at the sizes where exact folding is used.

``float_sanity`` is the quick machine-precision cross check: the plain
double sum 4*(m*atan(1/q0) + sum of s*atan(1/q)).
"""
from __future__ import annotations

import math

from ._bigint import bigint
from .errors import FoldError, IncompleteFormulaError
from .exactint import Ratio

__all__ = ["float_sanity", "fold_formula"]


def fold_formula(formula) -> Ratio:
    """Fold a complete formula into one arctangent; identity iff num == den.

    Starts from arctan(0/1) and adds the first term coefficient-many
    times, then each signed term. Raises FoldError if a fold ever lands
    exactly on a zero denominator (tangent through pi/2), which cannot
    happen for formulas produced by the generator.
    """
    if not formula.complete:
        raise IncompleteFormulaError("cannot verify a partial formula as an identity")
    num, den = bigint(0), bigint(1)
    for term in formula.terms:
        q, s = bigint(term.q), term.sign
        for _ in range(term.coefficient):
            num, den = num * q + s * den, den * q - s * num
            if den == 0:
                raise FoldError("fold passed through tangent pi/2 (zero denominator)")
    return Ratio(int(num), int(den))


def float_sanity(formula) -> float:
    """Machine-precision value of the formula times 4 (should be close to pi).

    Denominators beyond the double range make 1/q underflow to zero and
    drop out on their own, so partial formulas are fine here.
    """
    first = formula.terms[0]
    total = first.coefficient * math.atan(first.sign / first.q)
    for term in formula.terms[1:]:
        total += math.atan(term.sign / term.q)
    return 4.0 * total
