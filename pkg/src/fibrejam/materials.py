"""Constitutive laws for the three printed materials.

The soft Shore A-30 resin (Agilus30) is represented by an incompressible
hyperelastic Yeoh model, the stiffer Shore A-85 blend by a linear elastic
model, and the Shore D end-plate resin by a rigid placeholder. All stress
values are nominal (engineering) stress in MPa over the unit stretch
``lambda = deformed length / reference length``; the working unit system
is N / mm / MPa throughout.

Uniaxial incompressible kinematics are assumed (``lambda_2 = lambda_3 =
lambda^-1/2``), so the first invariant is ``I1 = lambda^2 + 2/lambda`` and
the Yeoh nominal stress follows from ``P = dW/dlambda`` with
``W = c1*(I1-3) + c2*(I1-3)^2 + c3*(I1-3)^3``.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from . import optimize
from .errors import (
    DomainError,
    InsufficientDataError,
    UnsupportedMaterialError,
)

__all__ = [
    "YeohModel",
    "LinearElasticModel",
    "Rigid",
    "MaterialModel",
    "StressStrainSample",
    "AGILUS30_YEOH",
    "SHORE_A85_LINEAR",
    "END_PLATE_RIGID",
    "nominal_stress",
    "tangent_stiffness",
    "strain_energy_density",
    "fit_yeoh",
    "YeohFitResult",
    "load_dogbone_csv",
    "DOGBONE_CSV_HEADER",
]


@dataclass(frozen=True)
class YeohModel:
    """Incompressible Yeoh hyperelastic model, coefficients in MPa.

    ``label`` names the friction-pairing grade of the printed material;
    the soft fibre sections default to Shore "A30".
    """

    c1: float
    c2: float
    c3: float
    label: str = "A30"

    def __post_init__(self):
        if not (self.c1 > 0.0):
            raise DomainError(f"c1 must be positive, got {self.c1}")
        for name in ("c1", "c2", "c3"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")


@dataclass(frozen=True)
class LinearElasticModel:
    """Linear elastic model, modulus in MPa."""

    e_modulus: float
    label: str = "A85"

    def __post_init__(self):
        if not (self.e_modulus > 0.0 and math.isfinite(self.e_modulus)):
            raise DomainError(f"e_modulus must be positive and finite, got {self.e_modulus}")


@dataclass(frozen=True)
class Rigid:
    """Infinite-stiffness placeholder for the printed end plates."""

    label: str = "rigid"


MaterialModel = Union[YeohModel, LinearElasticModel, Rigid]

# Fitted coefficients for the printed resins (Shore A-30 Agilus30 and the
# Shore A-85 Vero/Agilus blend), N/mm/MPa unit system.
AGILUS30_YEOH = YeohModel(c1=1.2e-2, c2=1.0e-4, c3=6.2e-3)
SHORE_A85_LINEAR = LinearElasticModel(e_modulus=7.34)
END_PLATE_RIGID = Rigid()


@dataclass(frozen=True)
class StressStrainSample:
    """One uniaxial dogbone measurement: stretch and nominal stress (MPa)."""

    stretch: float
    nominal_stress: float

    def __post_init__(self):
        if not (self.stretch >= 1.0):
            raise DomainError(f"stretch must be >= 1, got {self.stretch}")
        if not math.isfinite(self.nominal_stress):
            raise DomainError("nominal_stress must be finite")


def _yeoh_raw(model: YeohModel, lam):
    """Nominal stress and tangent without domain checks (solver internal).

    Valid for any lam > 0; negative values below lam = 1 represent the
    compressive branch the solver may transiently visit during Newton
    iteration.
    """
    lam = np.asarray(lam, dtype=float)
    x = lam * lam + 2.0 / lam - 3.0  # I1 - 3
    b = 2.0 * (lam - 1.0 / (lam * lam))  # dI1/dlam
    poly = model.c1 + 2.0 * model.c2 * x + 3.0 * model.c3 * x * x
    stress = b * poly
    tangent = (2.0 + 4.0 / lam**3) * poly + b * b * (2.0 * model.c2 + 6.0 * model.c3 * x)
    return stress, tangent


def _linear_raw(model: LinearElasticModel, lam):
    lam = np.asarray(lam, dtype=float)
    stress = model.e_modulus * (lam - 1.0)
    tangent = np.full_like(lam, model.e_modulus)
    return stress, tangent


def _raw_stress_tangent(model: MaterialModel, lam):
    if isinstance(model, YeohModel):
        return _yeoh_raw(model, lam)
    if isinstance(model, LinearElasticModel):
        return _linear_raw(model, lam)
    raise UnsupportedMaterialError(f"no stress law for material {model!r}")


def _check_stretch(stretch) -> np.ndarray:
    lam = np.asarray(stretch, dtype=float)
    if np.any(lam < 1.0):
        raise DomainError("stretch < 1 (compression) is outside the model domain")
    return lam


def nominal_stress(model: MaterialModel, stretch):
    """Nominal (engineering) stress in MPa at the given stretch.

    Accepts a scalar or array stretch >= 1 and returns the matching shape.
    """
    lam = _check_stretch(stretch)
    stress, _ = _raw_stress_tangent(model, lam)
    return stress if isinstance(stretch, np.ndarray) else float(stress)


def tangent_stiffness(model: MaterialModel, stretch):
    """Analytic slope dP/dlambda in MPa at the given stretch."""
    lam = _check_stretch(stretch)
    _, tangent = _raw_stress_tangent(model, lam)
    return tangent if isinstance(stretch, np.ndarray) else float(tangent)


def strain_energy_density(model: MaterialModel, stretch):
    """Stored elastic energy per unit reference volume (MPa = mJ/mm^3)."""
    lam = _check_stretch(stretch)
    if isinstance(model, YeohModel):
        x = lam * lam + 2.0 / lam - 3.0
        w = model.c1 * x + model.c2 * x * x + model.c3 * x * x * x
    elif isinstance(model, LinearElasticModel):
        w = 0.5 * model.e_modulus * (lam - 1.0) ** 2
    else:
        raise UnsupportedMaterialError(f"no strain energy for material {model!r}")
    return w if isinstance(stretch, np.ndarray) else float(w)


@dataclass
class YeohFitResult(optimize.FitResult):
    """Least-squares fit outcome carrying the fitted Yeoh model."""

    model: YeohModel = field(default=None)  # type: ignore[assignment]


# Open lower bound on c1 approximated by a tiny positive floor.
_C1_FLOOR = 1e-12


def fit_yeoh(
    samples: Sequence[StressStrainSample],
    initial_guess: YeohModel,
    lower: Sequence[float] = (_C1_FLOOR, -np.inf, -np.inf),
    upper: Sequence[float] = (np.inf, np.inf, np.inf),
    options: optimize.TrfOptions | None = None,
) -> YeohFitResult:
    """Fit Yeoh coefficients to uniaxial dogbone data by least squares.

    Minimizes the sum of squared nominal-stress residuals over the sample
    set with the bound-constrained trust-region solver. Requires at least
    four samples with strictly increasing stretch. Non-convergence is
    reported through the result status; the best iterate is still
    returned. A fit driven to the ``c1`` floor (e.g. all-zero stress data)
    is flagged ``degenerate-fit``.
    """
    if len(samples) < 4:
        raise InsufficientDataError(f"need at least 4 samples, got {len(samples)}")
    stretches = np.array([s.stretch for s in samples], dtype=float)
    stresses = np.array([s.nominal_stress for s in samples], dtype=float)
    if np.any(np.diff(stretches) <= 0.0):
        raise DomainError("sample stretches must be strictly increasing")

    def residual(params: np.ndarray) -> np.ndarray:
        model = YeohModel(max(params[0], _C1_FLOOR), params[1], params[2])
        stress, _ = _yeoh_raw(model, stretches)
        return stress - stresses

    problem = optimize.LeastSquaresProblem(
        residual=residual,
        initial_guess=np.array([initial_guess.c1, initial_guess.c2, initial_guess.c3]),
        lower=np.asarray(lower, dtype=float),
        upper=np.asarray(upper, dtype=float),
    )
    result = optimize.trf_least_squares(problem, options)

    c1, c2, c3 = result.parameters
    flags = result.flags
    if c1 <= max(_C1_FLOOR, lower[0]) * (1.0 + 1e-9) or np.max(np.abs(stresses)) == 0.0:
        flags = flags + ("degenerate-fit",)
    model = YeohModel(max(c1, _C1_FLOOR), c2, c3)
    return YeohFitResult(
        parameters=result.parameters,
        residual_norm=result.residual_norm,
        iterations=result.iterations,
        status=result.status,
        history=result.history,
        flags=flags,
        active_bounds=result.active_bounds,
        model=model,
    )


DOGBONE_CSV_HEADER = "stretch,nominal_stress_mpa"


def load_dogbone_csv(path) -> list[StressStrainSample]:
    """Read a uniaxial dogbone dataset (header ``stretch,nominal_stress_mpa``)."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != DOGBONE_CSV_HEADER.split(","):
            raise DomainError(f"expected header {DOGBONE_CSV_HEADER!r}, got {header!r}")
        samples = [StressStrainSample(float(row[0]), float(row[1])) for row in reader if row]
    if not samples:
        raise InsufficientDataError("dogbone file contains no samples")
    stretches = [s.stretch for s in samples]
    if any(b <= a for a, b in zip(stretches, stretches[1:])):
        raise DomainError("dogbone stretches must be strictly increasing")
    return samples
