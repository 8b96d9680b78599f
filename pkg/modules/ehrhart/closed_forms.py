import math
from enum import Enum
from fractions import Fraction

from core.errors import UsageError
from modules.ehrhart.polynomial import EhrhartPolynomial, Scalar
from modules.polytope.h_polytope import PolytopeLabel


class Family(Enum):
    A = "A"
    C = "C"
    A_STAR = "Astar"
    C_STAR = "Cstar"

    @property
    def enumerable(self) -> bool:
        """Only the dual families have an H-representation here."""
        return self in (Family.A_STAR, Family.C_STAR)

    @property
    def polytope_label(self) -> PolytopeLabel:
        if self is Family.A_STAR:
            return PolytopeLabel.A_STAR
        if self is Family.C_STAR:
            return PolytopeLabel.C_STAR
        raise UsageError(f"family {self.value} is only available through its closed form")


_ALIASES = {
    "a": Family.A,
    "c": Family.C,
    "astar": Family.A_STAR,
    "a_star": Family.A_STAR,
    "a*": Family.A_STAR,
    "cstar": Family.C_STAR,
    "c_star": Family.C_STAR,
    "c*": Family.C_STAR,
}


def parse_family(name: str) -> Family:
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise UsageError(f"unknown polytope {name!r}; expected one of A, C, Astar, Cstar")


def binomial(n: Scalar, r: int) -> Fraction:
    """n(n-1)...(n-r+1)/r!, the polynomial extension of C(n, r) to any n."""
    if r < 0:
        return Fraction(0)
    return Fraction(math.prod(n - j for j in range(r)), math.factorial(r))


def binomial_polynomial(shift: int, r: int) -> EhrhartPolynomial:
    """C(k + shift, r) as a polynomial in k."""
    result = EhrhartPolynomial.constant(Fraction(1, math.factorial(r)))
    for j in range(r):
        result = result * EhrhartPolynomial.linear(1, shift - j)
    return result


def _check_dim(d: int):
    if d < 1:
        raise UsageError(f"closed forms need d >= 1, got {d}")


def eval_closed_form(family: Family, d: int, k: Scalar) -> Fraction:
    _check_dim(d)
    if family is Family.A:
        return sum((Fraction(math.comb(d, i) ** 2) * binomial(k + d - i, d) for i in range(d + 1)), Fraction(0))
    if family is Family.C:
        return sum((Fraction(math.comb(2 * d, 2 * i)) * binomial(k + d - i, d) for i in range(d + 1)), Fraction(0))
    if family is Family.A_STAR:
        return sum((Fraction(math.comb(d + 1, i)) * Fraction(k) ** i for i in range(d + 1)), Fraction(0))
    if family is Family.C_STAR:
        return Fraction(k + 1) ** d + Fraction(k) ** d
    raise UsageError(f"unknown family {family}")


def closed_form_polynomial(family: Family, d: int) -> EhrhartPolynomial:
    """Exact coefficient expansion of the family's Ehrhart polynomial."""
    _check_dim(d)
    label = f"{family.value}_{d} closed form"
    if family is Family.A:
        terms = [math.comb(d, i) ** 2 * binomial_polynomial(d - i, d) for i in range(d + 1)]
    elif family is Family.C:
        terms = [math.comb(2 * d, 2 * i) * binomial_polynomial(d - i, d) for i in range(d + 1)]
    elif family is Family.A_STAR:
        terms = [EhrhartPolynomial(tuple(math.comb(d + 1, i) for i in range(d + 1)))]
    else:
        k = EhrhartPolynomial.linear(1, 0)
        terms = [(k + 1) ** d, k ** d]
    total = EhrhartPolynomial.constant(0)
    for term in terms:
        total = total + term
    return total.with_label(label)


def boundary_closed_form(family: Family, d: int, k: int) -> Fraction:
    """|k∂P ∩ Z^d| = E(k) - E(k-1) for the reflexive families; 0 at k = 0."""
    if k == 0:
        return Fraction(0)
    return eval_closed_form(family, d, k) - eval_closed_form(family, d, k - 1)
