"""Sparse multivariate polynomials with exact rational coefficients."""

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from types import MappingProxyType
from typing import Any, TypeAlias

import mpmath

from qasc.algebra._rational import as_fraction, format_rational, fraction_to_mpf
from qasc.utils import NonDivisibilityError, QascTypeError, QascValueError

Exponent: TypeAlias = tuple[int, ...]
Scalar: TypeAlias = Fraction | int


def _add_into(target: dict[Exponent, Fraction], exp: Exponent, coef: Fraction) -> None:
    value = target.get(exp, 0) + coef
    if value:
        target[exp] = value
    else:
        target.pop(exp, None)


def _graded_lex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


class MPoly:
    """Immutable sparse polynomial in x_1, ..., x_n over the rationals.

    Terms are stored as a map from exponent tuples to nonzero Fractions.
    Variables are addressed by 0-based index in this class.
    """

    __slots__ = ("_hash", "_nvars", "_terms")

    def __init__(
        self, nvars: int, terms: Mapping[Sequence[int], Scalar | str] | None = None
    ):
        """Initialize the polynomial.

        Args:
            nvars: The number of variables.
            terms: Map from exponent vectors to coefficients. Zero
                coefficients are dropped.
        """
        if nvars < 0:
            raise QascValueError(f"nvars must be nonnegative, got {nvars}.")
        clean: dict[Exponent, Fraction] = {}
        for raw_exp, raw_coef in (terms or {}).items():
            exp = tuple(int(e) for e in raw_exp)
            if len(exp) != nvars:
                raise QascValueError(
                    f"Exponent {exp} does not have length nvars={nvars}."
                )
            if any(e < 0 for e in exp):
                raise QascValueError(f"Negative exponent in {exp}.")
            _add_into(clean, exp, as_fraction(raw_coef))
        self._nvars = nvars
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, nvars: int, terms: dict[Exponent, Fraction]) -> "MPoly":
        # terms must already be clean: right length, nonzero Fractions
        poly = cls.__new__(cls)
        poly._nvars = nvars
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        """The zero polynomial."""
        return cls._trusted(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar | str) -> "MPoly":
        """A constant polynomial."""
        value = as_fraction(value)
        if value == 0:
            return cls.zero(nvars)
        return cls._trusted(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars: int) -> "MPoly":
        """The constant polynomial 1."""
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        """The variable x_{index+1} (0-based index)."""
        return cls.monomial(nvars, {index: 1})

    @classmethod
    def monomial(
        cls, nvars: int, powers: Mapping[int, int], coefficient: Scalar = 1
    ) -> "MPoly":
        """A single term, given as {variable index: power}."""
        exp = [0] * nvars
        for index, power in powers.items():
            if not 0 <= index < nvars:
                raise QascValueError(f"Variable index {index} out of range.")
            exp[index] = power
        return cls(nvars, {tuple(exp): coefficient})

    # Accessors

    @property
    def nvars(self) -> int:
        """Number of variables."""
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        """Read-only view of the terms."""
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        """Number of nonzero terms."""
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Iterate over (exponent, coefficient) pairs in graded-lex order."""
        return iter(self.sorted_terms())

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self._terms

    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, index: int) -> int:
        """Degree in the single variable x_{index+1}."""
        return max((e[index] for e in self._terms), default=-1)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        """Coefficient of a monomial (zero if absent)."""
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        """Value of the polynomial at the origin."""
        return self.coefficient((0,) * self._nvars)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in ascending graded-lexicographic order, the canonical order."""
        return sorted(self._terms.items(), key=lambda item: _graded_lex_key(item[0]))

    def leading_exponent(self) -> Exponent:
        """Lexicographically largest exponent (used by exact division)."""
        if not self._terms:
            raise QascValueError("The zero polynomial has no leading term.")
        return max(self._terms)

    # Arithmetic

    def _check_compatible(self, other: "MPoly") -> None:
        if other._nvars != self._nvars:
            raise QascTypeError(
                f"Variable count mismatch: {self._nvars} != {other._nvars}."
            )

    def _coerce(self, other: object) -> "MPoly | None":
        if isinstance(other, MPoly):
            self._check_compatible(other)
            return other
        if isinstance(other, Fraction | int) and not isinstance(other, bool):
            return MPoly.constant(self._nvars, other)
        return None

    def __add__(self, other: object) -> "MPoly":
        """Exact sum."""
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result = dict(self._terms)
        for exp, coef in rhs._terms.items():
            _add_into(result, exp, coef)
        return MPoly._trusted(self._nvars, result)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        """Additive inverse."""
        return MPoly._trusted(self._nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "MPoly":
        """Exact difference."""
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        result = dict(self._terms)
        for exp, coef in rhs._terms.items():
            _add_into(result, exp, -coef)
        return MPoly._trusted(self._nvars, result)

    def __rsub__(self, other: object) -> "MPoly":
        """Exact difference with the polynomial on the right."""
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def scale(self, value: Scalar) -> "MPoly":
        """Multiply by a rational scalar."""
        value = as_fraction(value)
        if value == 0:
            return MPoly.zero(self._nvars)
        return MPoly._trusted(
            self._nvars, {e: c * value for e, c in self._terms.items()}
        )

    def __mul__(self, other: object) -> "MPoly":
        """Exact product with a polynomial or a rational scalar."""
        if isinstance(other, Fraction | int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_compatible(other)
        result: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2, strict=True))
                _add_into(result, exp, c1 * c2)
        return MPoly._trusted(self._nvars, result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "MPoly":
        """Nonnegative integer power by repeated squaring."""
        if power < 0:
            raise QascValueError("Polynomials only support nonnegative powers.")
        result = MPoly.one(self._nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def mul_truncated(self, other: "MPoly", degmax: int) -> "MPoly":
        """Product keeping only terms of total degree at most `degmax`."""
        self._check_compatible(other)
        result: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            if d1 > degmax:
                continue
            for e2, c2 in other._terms.items():
                if d1 + sum(e2) > degmax:
                    continue
                exp = tuple(a + b for a, b in zip(e1, e2, strict=True))
                _add_into(result, exp, c1 * c2)
        return MPoly._trusted(self._nvars, result)

    def __eq__(self, other: object) -> bool:
        """Exact equality; scalars compare as constant polynomials."""
        if isinstance(other, Fraction | int) and not isinstance(other, bool):
            other = MPoly.constant(self._nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        """Hash of the immutable term map."""
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    # Structural transformations

    def transform(
        self, fn: Callable[[Exponent], tuple[Exponent, Fraction]]
    ) -> "MPoly":
        """Map every term x^e to c(e) x^{e'} where fn(e) = (e', c(e))."""
        result: dict[Exponent, Fraction] = {}
        for exp, coef in self._terms.items():
            new_exp, factor = fn(exp)
            if factor:
                _add_into(result, new_exp, coef * factor)
        return MPoly._trusted(self._nvars, result)

    def scale_variable(self, index: int, value: Scalar) -> "MPoly":
        """Substitute x_i -> value * x_i."""
        value = as_fraction(value)
        return self.transform(lambda e: (e, value ** e[index]))

    def permute(self, perm: Sequence[int]) -> "MPoly":
        """Send variable i to position perm[i]."""
        if sorted(perm) != list(range(self._nvars)):
            raise QascValueError(f"{perm} is not a permutation of the variables.")

        def _move(exp: Exponent) -> tuple[Exponent, Fraction]:
            new = [0] * self._nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            return tuple(new), Fraction(1)

        return self.transform(_move)

    def swap(self, i: int, j: int) -> "MPoly":
        """Exchange the variables x_i and x_j."""
        perm = list(range(self._nvars))
        perm[i], perm[j] = j, i
        return self.permute(perm)

    def divided_difference(self, i: int, j: int) -> "MPoly":
        """Return (f - s_ij f) / (x_i - x_j), always a polynomial.

        Computed termwise: for exponents a at i and b at j with a > b,
        (x_i^a x_j^b - x_i^b x_j^a) / (x_i - x_j) expands to the complete
        homogeneous sum of degree a - b - 1 times (x_i x_j)^b.
        """
        result: dict[Exponent, Fraction] = {}
        for exp, coef in self._terms.items():
            a, b = exp[i], exp[j]
            if a == b:
                continue
            sign = Fraction(1) if a > b else Fraction(-1)
            hi, lo = max(a, b), min(a, b)
            for k in range(hi - lo):
                new = list(exp)
                new[i] = lo + (hi - lo - 1 - k)
                new[j] = lo + k
                _add_into(result, tuple(new), sign * coef)
        return MPoly._trusted(self._nvars, result)

    def divide_by_variable(self, index: int) -> "MPoly":
        """Exact division by x_i; raises if some term has no factor x_i."""
        result: dict[Exponent, Fraction] = {}
        for exp, coef in self._terms.items():
            if exp[index] == 0:
                raise NonDivisibilityError(
                    f"Term with exponent {exp} is not divisible by x{index + 1}."
                )
            new = list(exp)
            new[index] -= 1
            result[tuple(new)] = coef
        return MPoly._trusted(self._nvars, result)

    def exact_divide(self, den: "MPoly") -> "MPoly":
        """Exact quotient self / den.

        Uses lexicographic leading-term division; any remainder means the
        quotient is not a polynomial and raises NonDivisibilityError.
        """
        self._check_compatible(den)
        if den.is_zero():
            raise QascValueError("Division by the zero polynomial.")
        lead_exp = den.leading_exponent()
        lead_coef = den._terms[lead_exp]
        remainder = dict(self._terms)
        quotient: dict[Exponent, Fraction] = {}
        while remainder:
            exp = max(remainder)
            if any(e < d for e, d in zip(exp, lead_exp, strict=True)):
                raise NonDivisibilityError(
                    f"{self} is not divisible by {den} (stuck at exponent {exp})."
                )
            q_exp = tuple(e - d for e, d in zip(exp, lead_exp, strict=True))
            q_coef = remainder[exp] / lead_coef
            quotient[q_exp] = q_coef
            for d_exp, d_coef in den._terms.items():
                prod_exp = tuple(a + b for a, b in zip(q_exp, d_exp, strict=True))
                _add_into(remainder, prod_exp, -q_coef * d_coef)
        return MPoly._trusted(self._nvars, quotient)

    def homogeneous_part(self, degree: int) -> "MPoly":
        """Terms of total degree exactly `degree`."""
        return MPoly._trusted(
            self._nvars, {e: c for e, c in self._terms.items() if sum(e) == degree}
        )

    def truncate(self, degmax: int, variables: Iterable[int] | None = None) -> "MPoly":
        """Drop terms whose degree in `variables` (default: all) exceeds degmax."""
        idx = list(range(self._nvars)) if variables is None else list(variables)
        return MPoly._trusted(
            self._nvars,
            {e: c for e, c in self._terms.items() if sum(e[i] for i in idx) <= degmax},
        )

    def embed(self, nvars: int, offset: int = 0) -> "MPoly":
        """View the polynomial inside a ring with more variables."""
        if offset + self._nvars > nvars:
            raise QascValueError("Target ring is too small for the embedding.")
        result = {}
        for exp, coef in self._terms.items():
            new = [0] * nvars
            new[offset : offset + self._nvars] = exp
            result[tuple(new)] = coef
        return MPoly._trusted(nvars, result)

    def is_symmetric(self) -> bool:
        """True if invariant under every adjacent transposition."""
        return all(self == self.swap(i, i + 1) for i in range(self._nvars - 1))

    # Evaluation

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self._nvars:
            raise QascValueError(
                f"Point has {len(point)} coordinates, expected {self._nvars}."
            )
        values = [as_fraction(v) for v in point]
        total = Fraction(0)
        for exp, coef in self._terms.items():
            term = coef
            for v, e in zip(values, exp, strict=True):
                if e:
                    term *= v**e
            total += term
        return total

    def evaluate_numeric(self, point: Sequence[Any]) -> mpmath.mpf:
        """Value at a point of mpmath numbers, at the working precision."""
        if len(point) != self._nvars:
            raise QascValueError(
                f"Point has {len(point)} coordinates, expected {self._nvars}."
            )
        values = [
            fraction_to_mpf(v) if isinstance(v, Fraction | int) else mpmath.mpf(v)
            for v in point
        ]
        total = mpmath.mpf(0)
        for exp, coef in self._terms.items():
            term = fraction_to_mpf(coef)
            for v, e in zip(values, exp, strict=True):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, index: int, value: Scalar) -> "MPoly":
        """Set x_i to a rational value, keeping the variable count."""
        value = as_fraction(value)

        def _sub(exp: Exponent) -> tuple[Exponent, Fraction]:
            new = list(exp)
            new[index] = 0
            return tuple(new), value ** exp[index]

        return self.transform(_sub)

    # Serialization

    def to_json(self) -> dict[str, Any]:
        """Polynomial JSON: nvars and graded-lex sorted terms with "p/q" coefs."""
        return {
            "nvars": self._nvars,
            "terms": [
                {"exp": list(exp), "coef": format_rational(coef)}
                for exp, coef in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "MPoly":
        """Inverse of `to_json`."""
        try:
            nvars = int(data["nvars"])
            terms = {tuple(t["exp"]): t["coef"] for t in data["terms"]}
        except (KeyError, TypeError) as e:
            raise QascValueError(f"Malformed polynomial JSON: {e}") from e
        return cls(nvars, terms)

    def __repr__(self) -> str:
        """Unambiguous representation."""
        return f"MPoly(nvars={self._nvars}, {self})"

    def __str__(self) -> str:
        """Human readable form, e.g. x1^2*x2 - 3/2*x1 + 1."""
        if not self._terms:
            return "0"
        pieces = []
        for exp, coef in reversed(self.sorted_terms()):
            monomial = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e
            )
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if not monomial:
                body = format_rational(mag)
            elif mag == 1:
                body = monomial
            else:
                body = f"{format_rational(mag)}*{monomial}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text
