from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


def _strip(coefficients: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    coeffs = [Fraction(c) for c in coefficients] or [Fraction(0)]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """
    Polynomial in k with exact rational coefficients, low degree first:
    coefficients[i] is the coefficient of k^i. `label` records provenance
    (closed form of some family, interpolated counts, ...) and takes no part
    in equality.
    """
    coefficients: Tuple[Fraction, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _strip(self.coefficients))

    @classmethod
    def constant(cls, value: Scalar, label: str = "") -> "EhrhartPolynomial":
        return cls((value,), label)

    @classmethod
    def linear(cls, slope: Scalar, intercept: Scalar, label: str = "") -> "EhrhartPolynomial":
        return cls((intercept, slope), label)

    @property
    def degree(self) -> int:
        if len(self.coefficients) == 1 and self.coefficients[0] == 0:
            return -1
        return len(self.coefficients) - 1

    @property
    def dim(self) -> int:
        return max(self.degree, 0)

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, k: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * k + c
        return result

    def _coerce(self, other) -> "EhrhartPolynomial":
        if isinstance(other, EhrhartPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return EhrhartPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (Fraction(0),) * (n - len(self.coefficients))
        b = other.coefficients + (Fraction(0),) * (n - len(other.coefficients))
        return EhrhartPolynomial(tuple(x + y for x, y in zip(a, b)), self.label)

    __radd__ = __add__

    def __neg__(self):
        return EhrhartPolynomial(tuple(-c for c in self.coefficients), self.label)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return EhrhartPolynomial(tuple(product), self.label)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = EhrhartPolynomial.constant(1, self.label)
        for _ in range(exponent):
            result = result * self
        return result

    def compose_linear(self, slope: Scalar, intercept: Scalar) -> "EhrhartPolynomial":
        """p(slope * k + intercept)."""
        inner = EhrhartPolynomial.linear(slope, intercept)
        result = EhrhartPolynomial.constant(0)
        for c in reversed(self.coefficients):
            result = result * inner + c
        return EhrhartPolynomial(result.coefficients, self.label)

    def reflect(self) -> "EhrhartPolynomial":
        """p(-k-1)."""
        return self.compose_linear(-1, -1)

    def with_label(self, label: str) -> "EhrhartPolynomial":
        return EhrhartPolynomial(self.coefficients, label)

    def to_floats(self) -> List[float]:
        return [float(c) for c in self.coefficients]

    def format_coefficients(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def invariant_violations(self) -> List[str]:
        """Which lattice-polytope invariants fail: positive lead, E(0) = 1, integer values on 0..d."""
        problems = []
        if self.leading <= 0:
            problems.append(f"leading coefficient {self.leading} is not positive")
        if self.coefficients[0] != 1:
            problems.append(f"constant term {self.coefficients[0]} is not 1")
        for k in range(self.dim + 1):
            value = self(k)
            if value.denominator != 1 or value < 0:
                problems.append(f"value at k={k} is {value}, not a nonnegative integer")
        return problems

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0 and self.degree >= 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*k")
            else:
                terms.append(f"{c}*k^{i}")
        return " + ".join(reversed(terms)) or "0"
