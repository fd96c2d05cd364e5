"""Result models returned by evaluations and verification checks."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..core.numerics import LogComplex
from .params import ScaledFormula, ScaledRegime

_LOG_DOMAIN = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class RemainderReport(BaseModel):
    """A tail remainder r1 or r2 with its certified bound."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["r1", "r2"] = Field(..., description="Which remainder")
    a: complex = Field(..., description="Base of the product")
    q: float = Field(..., description="Nome")
    n: int = Field(..., description="Shift index")
    value: complex = Field(..., description="Measured remainder")
    bound: float = Field(..., ge=0, description="2|a|q^n/(1-q)")
    ratio: float = Field(..., ge=0, description="|value| / bound")
    satisfied: bool = Field(..., description="|value| <= bound")


class EtaAsymptoticReport(BaseModel):
    """Direct (q;q)_inf against its closed form at q = exp(-2 pi / (gamma n^a))."""

    model_config = _LOG_DOMAIN

    gamma: float
    a_exp: float
    n: int
    direct: LogComplex
    main_term: LogComplex
    rel_dev: float = Field(..., ge=0)
    reciprocal_rel_dev: float = Field(..., ge=0)
    envelope: float = Field(..., description="exp(-2 pi gamma n^a)")
    within_envelope: bool


class WeightValue(BaseModel):
    """A weight function value kept alongside its logarithm."""

    model_config = ConfigDict(frozen=True)

    x: float
    value: float = Field(..., description="May underflow to 0; log_value is exact")
    log_value: float = Field(..., description="Natural log of |value|")
    sign: int = Field(1, description="Sign of the weight: 1, -1 or 0")


class ThetaRepResult(BaseModel):
    """A function at a scaled argument split as prefactor * (theta_4 + e(n))."""

    model_config = _LOG_DOMAIN

    family: Literal["aq", "bessel", "sw", "laguerre"]
    q: float
    z: complex
    n: int
    extra_param: float | None = Field(None, description="nu or alpha where used")
    lhs: LogComplex = Field(..., description="Directly evaluated function value")
    prefactor: LogComplex
    theta_term: complex
    residual: complex = Field(..., description="Measured e(n)")
    bound: float = Field(..., ge=0)
    satisfied: bool
    reconstruction_rel_dev: float = Field(..., ge=0)

    @property
    def ratio(self) -> float:
        """|e(n)| / bound."""
        return abs(self.residual) / self.bound if self.bound > 0 else 0.0


class AsymptoticComparison(BaseModel):
    """A direct evaluation compared with the closed-form main term of a formula."""

    model_config = _LOG_DOMAIN

    formula: ScaledFormula
    regime: ScaledRegime
    direct: LogComplex
    main_term: LogComplex
    rel_dev: float = Field(..., ge=0)
    stated_rate: float = Field(..., description="Envelope exponent: envelope = exp(-stated_rate)")
    oscillatory_factor: float | None = None
    mode: Literal["relative", "absolute"] = "relative"
    envelope: float = Field(..., ge=0)
    passed: bool


class IdentityCheck(BaseModel):
    """Both sides of an exact identity and their relative deviation."""

    model_config = _LOG_DOMAIN

    name: str
    parameters: dict[str, float]
    lhs: LogComplex
    rhs: LogComplex
    rel_dev: float = Field(..., ge=0)
    tolerance: float
    passed: bool


class OrthogonalityResult(BaseModel):
    """Quadrature Gram matrix of an orthogonal family against its norms."""

    model_config = ConfigDict(frozen=True)

    family: Literal["sw", "qlaguerre"]
    q: float
    alpha: float | None = None
    max_degree: int
    gram: list[list[float]]
    target_diagonal: list[float]
    max_diagonal_rel_error: float
    max_offdiagonal_ratio: float
    tolerance: float
    passed: bool


class RateFitReport(BaseModel):
    """Least-squares slope of ln(rel_dev) against n^a."""

    model_config = ConfigDict(frozen=True)

    formula: ScaledFormula
    a_exp: float
    u: float
    n_values: list[int]
    rel_devs: list[float]
    slope: float
    expected_slope: float
    window: tuple[float, float]
    within_window: bool
    # slope below the window: the deviation decays faster than the stated envelope
    faster_than_stated: bool = False
    decreasing: bool
    passed: bool
