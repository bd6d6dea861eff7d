# curvecount/models/degree.py

from fractions import Fraction
from math import lcm
from typing import Dict, Union

from sympy import sympify
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import ring

from curvecount.core.errors import NonExactDivisionError

# Anel Q[d]; os valores são sempre inteiros para d inteiro
_POLY_RING, _D = ring("d", QQ)

Number = Union[int, "DegreeCoeff"]


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


class DegreeCoeff:
    """
    Polinômio no símbolo de grau d.

    Constantes representam execuções numéricas; o símbolo d representa a
    execução simbólica. O produto e a soma nunca introduzem
    denominadores; só exact_div (quocientes por simetria) o faz, e apenas
    quando o resultado continua inteiro em todo d inteiro.
    """

    __slots__ = ("_poly",)

    def __init__(self, poly=None):
        self._poly = _POLY_RING.zero if poly is None else poly

    # ------------------------------------------------------------------
    # Construtores
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> "DegreeCoeff":
        return cls(_POLY_RING.ground_new(value))

    @classmethod
    def symbol(cls) -> "DegreeCoeff":
        return cls(_D)

    @classmethod
    def from_coefficients(cls, coefficients: Dict[int, Union[int, Fraction]]) -> "DegreeCoeff":
        """Montar a partir de {expoente de d: coeficiente}."""
        poly = _POLY_RING.zero
        for exponent, value in coefficients.items():
            if exponent < 0:
                raise ValueError("Expoente de d deve ser não negativo")
            value = Fraction(value)
            poly += _POLY_RING.term_new((exponent,), QQ(value.numerator, value.denominator))
        return cls(poly)

    @classmethod
    def parse(cls, text: str) -> "DegreeCoeff":
        """
        Ler um polinômio em d, por exemplo "3*(d-1)^2" ou
        "(9*d^6 - 54*d^5 + 1050)/2".
        """
        try:
            expr = sympify(text.replace("^", "**"), locals={"d": _POLY_RING.symbols[0]})
            return cls(_POLY_RING.from_expr(expr))
        except (ValueError, TypeError, CoercionFailed) as exc:
            raise ValueError(f"Polinômio em d inválido: {text!r}") from exc

    @staticmethod
    def coerce(value: Number) -> "DegreeCoeff":
        if isinstance(value, DegreeCoeff):
            return value
        if isinstance(value, int):
            return DegreeCoeff.constant(value)
        raise TypeError(f"Coeficiente não suportado: {value!r}")

    # ------------------------------------------------------------------
    # Consultas
    # ------------------------------------------------------------------

    @property
    def coefficients(self) -> Dict[int, Union[int, Fraction]]:
        """Mapa expoente -> coeficiente, sem zeros armazenados."""
        result = {}
        for (exponent,), coeff in self._poly.terms():
            value = _to_fraction(coeff)
            result[exponent] = int(value) if value.denominator == 1 else value
        return result

    @property
    def is_constant(self) -> bool:
        return self._poly.is_ground

    @property
    def degree(self) -> int:
        """Grau em d; -1 para o polinômio nulo."""
        if not self._poly:
            return -1
        return max(exponent for (exponent,) in self._poly.keys())

    def evaluate(self, value: int) -> int:
        """Avaliar em d = value; o resultado precisa ser inteiro."""
        result = _to_fraction(self._poly.evaluate(_D, value))
        if result.denominator != 1:
            raise NonExactDivisionError(
                f"{self} não é inteiro em d = {value}: {result}"
            )
        return int(result)

    def to_int(self) -> int:
        if not self.is_constant:
            raise ValueError(f"{self} depende de d")
        return self.evaluate(0)

    def is_integer_valued(self) -> bool:
        """Verdadeiro se o polinômio assume valores inteiros em todo d inteiro."""
        # Basta checar deg+1 inteiros consecutivos (base binomial)
        for value in range(max(self.degree, 0) + 1):
            if _to_fraction(self._poly.evaluate(_D, value)).denominator != 1:
                return False
        return True

    def exact_div(self, divisor: int) -> "DegreeCoeff":
        """
        Dividir por um inteiro positivo exigindo resultado inteiro em todo d.

        Raises:
            NonExactDivisionError: Se algum valor deixar resto
        """
        if divisor <= 0:
            raise ValueError("Divisor deve ser positivo")
        quotient = DegreeCoeff(self._poly.quo_ground(QQ(divisor)))
        if not quotient.is_integer_valued():
            raise NonExactDivisionError(
                f"({self})/{divisor} não é inteiro para todo d"
            )
        return quotient

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def __add__(self, other: Number) -> "DegreeCoeff":
        if isinstance(other, int):
            return DegreeCoeff(self._poly + other)
        if isinstance(other, DegreeCoeff):
            return DegreeCoeff(self._poly + other._poly)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Number) -> "DegreeCoeff":
        if isinstance(other, int):
            return DegreeCoeff(self._poly - other)
        if isinstance(other, DegreeCoeff):
            return DegreeCoeff(self._poly - other._poly)
        return NotImplemented

    def __rsub__(self, other: Number) -> "DegreeCoeff":
        return (-self) + other

    def __mul__(self, other: Number) -> "DegreeCoeff":
        if isinstance(other, int):
            return DegreeCoeff(self._poly * other)
        if isinstance(other, DegreeCoeff):
            return DegreeCoeff(self._poly * other._poly)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "DegreeCoeff":
        return DegreeCoeff(-self._poly)

    def __pow__(self, exponent: int) -> "DegreeCoeff":
        return DegreeCoeff(self._poly ** exponent)

    def __bool__(self) -> bool:
        return bool(self._poly)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._poly == _POLY_RING.ground_new(other)
        if isinstance(other, DegreeCoeff):
            return self._poly == other._poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._poly.items()))

    # ------------------------------------------------------------------
    # Forma canônica
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        """
        Potências decrescentes com sinais explícitos, ex.: "9*d^3 - 27*d^2 - d + 30".
        Coeficientes fracionários viram "(...)/m" com denominador comum.
        """
        terms = sorted(self.coefficients.items(), reverse=True)
        if not terms:
            return "0"
        denominator = lcm(*(Fraction(c).denominator for _, c in terms))
        pieces = []
        for index, (exponent, coeff) in enumerate(terms):
            numerator = int(Fraction(coeff) * denominator)
            magnitude = abs(numerator)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "d" if exponent == 1 else f"d^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if index == 0:
                pieces.append(f"-{body}" if numerator < 0 else body)
            else:
                pieces.append(f" - {body}" if numerator < 0 else f" + {body}")
        text = "".join(pieces)
        if denominator == 1:
            return text
        return f"({text})/{denominator}"

    def __repr__(self) -> str:
        return f"DegreeCoeff('{self}')"


ZERO = DegreeCoeff.constant(0)
ONE = DegreeCoeff.constant(1)
D = DegreeCoeff.symbol()
