from dataclasses import dataclass
from fractions import Fraction
from typing import Union
from sympy import isprime
from hopfsage.utils.errors import FieldError

Scalar = Union[Fraction, int]


@dataclass(frozen=True)
class Field:
    """Exact base field: Q (characteristic 0) or F_p.

    Scalars over Q are ``Fraction`` instances (always in lowest terms with a
    positive denominator); scalars over F_p are plain ints in ``[0, p)``.
    """
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise FieldError(
                f"F_p requires a prime p, got {self.characteristic}")

    @classmethod
    def rationals(cls) -> 'Field':
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> 'Field':
        return cls(p)

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    @property
    def zero(self) -> Scalar:
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.characteristic else Fraction(1)

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        p = self.characteristic
        if not p:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise FieldError(f"{value} has no image in F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        try:
            if '/' in text:
                num, den = text.split('/', 1)
                return self(Fraction(int(num), int(den)))
            return self(int(text))
        except (ValueError, ZeroDivisionError) as e:
            raise FieldError(f"Invalid scalar '{text}': {str(e)}")

    def format(self, value: Scalar) -> str:
        if self.characteristic:
            return str(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.characteristic:
            return a * b % self.characteristic
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        if self.characteristic:
            return -a % self.characteristic
        return -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def header(self) -> str:
        """Instance-file header line for this field."""
        return f"field F {self.characteristic}" if self.characteristic \
            else "field Q"

    def __str__(self) -> str:
        return f"F_{self.characteristic}" if self.characteristic else "Q"


QQ = Field.rationals()
