"""Parameter models for polynomial families and scaled regimes."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.exceptions import DomainError


class PolynomialSpec(BaseModel):
    """Degree and family parameters of an orthogonal polynomial or Bessel series."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"n": 12, "alpha": 0.5}},
    )

    n: int = Field(..., ge=0, description="Polynomial degree")
    alpha: float | None = Field(None, description="q-Laguerre parameter, > -1")
    nu: float | None = Field(None, description="q-Bessel order, > -1")

    @field_validator("alpha", "nu")
    @classmethod
    def check_above_minus_one(cls, v: float | None) -> float | None:
        """Reject orders at or below -1 with a domain error."""
        if v is not None and v <= -1:
            raise DomainError(f"order must exceed -1, got {v}")
        return v


class NomeRule(str, Enum):
    """How the nome is coupled to n in a scaled regime."""

    TWO_PI = "two_pi"  # q = exp(-2 pi n^-a)
    PI = "pi"  # q = exp(-pi n^-a)

    @property
    def coefficient(self) -> float:
        """Multiplier c in q = exp(-c pi n^-a)."""
        return 2.0 if self is NomeRule.TWO_PI else 1.0


class ScaledFormula(str, Enum):
    """Closed-form scaled asymptotics, named by function and argument sign."""

    EULER_POSITIVE = "euler-positive"
    EULER_NEGATIVE = "euler-negative"
    QGAMMA_REFLECTED = "qgamma-reflected"
    QGAMMA_SHIFTED = "qgamma-shifted"
    RAMANUJAN_NEGATIVE = "ramanujan-negative"
    RAMANUJAN_POSITIVE = "ramanujan-positive"
    BESSEL_IMAGINARY = "bessel-imaginary"
    BESSEL_REAL = "bessel-real"
    SW_NEGATIVE = "sw-negative"
    SW_POSITIVE = "sw-positive"
    SW_ORTHONORMAL = "sw-orthonormal"
    LAGUERRE_NEGATIVE = "laguerre-negative"
    LAGUERRE_POSITIVE = "laguerre-positive"
    LAGUERRE_ORTHONORMAL = "laguerre-orthonormal"

    @property
    def nome_rule(self) -> NomeRule:
        """Nome coupling the formula is stated under."""
        return _TRAITS[self][0]

    @property
    def rate_coefficient(self) -> float:
        """Envelope exponent is -rate_coefficient * pi * n^a."""
        return _TRAITS[self][1]

    @property
    def oscillatory(self) -> bool:
        """True when the main term carries a cosine factor."""
        return _TRAITS[self][2]

    @property
    def requires(self) -> str | None:
        """Name of the extra regime parameter the formula needs, if any."""
        return _TRAITS[self][3]


# nome rule, envelope rate / (pi n^a), cosine factor, extra parameter
_TRAITS: dict[ScaledFormula, tuple[NomeRule, float, bool, str | None]] = {
    ScaledFormula.EULER_POSITIVE: (NomeRule.TWO_PI, 1.0, False, None),
    ScaledFormula.EULER_NEGATIVE: (NomeRule.TWO_PI, 2.0, True, None),
    ScaledFormula.QGAMMA_REFLECTED: (NomeRule.TWO_PI, 2.0, True, None),
    ScaledFormula.QGAMMA_SHIFTED: (NomeRule.TWO_PI, 2.0, False, None),
    ScaledFormula.RAMANUJAN_NEGATIVE: (NomeRule.PI, 1.0, False, None),
    ScaledFormula.RAMANUJAN_POSITIVE: (NomeRule.PI, 2.0, True, None),
    ScaledFormula.BESSEL_IMAGINARY: (NomeRule.PI, 1.0, False, "nu"),
    ScaledFormula.BESSEL_REAL: (NomeRule.PI, 2.0, True, "nu"),
    ScaledFormula.SW_NEGATIVE: (NomeRule.TWO_PI, 0.5, False, None),
    ScaledFormula.SW_POSITIVE: (NomeRule.TWO_PI, 1.0, True, None),
    ScaledFormula.SW_ORTHONORMAL: (NomeRule.TWO_PI, 1.0, True, None),
    ScaledFormula.LAGUERRE_NEGATIVE: (NomeRule.TWO_PI, 0.5, False, "alpha"),
    ScaledFormula.LAGUERRE_POSITIVE: (NomeRule.TWO_PI, 1.0, True, "alpha"),
    ScaledFormula.LAGUERRE_ORTHONORMAL: (NomeRule.TWO_PI, 1.0, True, "alpha"),
}


class ScaledRegime(BaseModel):
    """Parameterization n, a, u (plus nu, alpha, gamma) of a scaled limit."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"n": 32, "a_exp": 0.4, "u": 0.3, "nome_rule": "two_pi"}
        },
    )

    n: int = Field(..., ge=1, description="Scaling index")
    a_exp: float = Field(..., gt=0, lt=0.5, description="Exponent a in n^a")
    u: float = Field(0.0, description="Real shift of the argument")
    nome_rule: NomeRule = Field(NomeRule.TWO_PI, description="Nome coupling")
    nu: float | None = Field(None, gt=-1, description="q-Bessel order")
    alpha: float | None = Field(None, gt=-1, description="q-Laguerre parameter")
    gamma: float | None = Field(None, gt=0, description="Eta scaling factor")

    @classmethod
    def for_formula(cls, formula: ScaledFormula, **values: Any) -> "ScaledRegime":
        """Build a regime with the nome rule the formula is stated under."""
        return cls(nome_rule=formula.nome_rule, **values)
