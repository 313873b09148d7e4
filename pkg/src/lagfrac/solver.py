"""Spectral collocation for initial value problems with a fractional term.

The unknown is expanded in a generalized Laguerre basis. The differential
equation is enforced at the smallest Gauss nodes and the initial data fill
the remaining rows, giving a dense square system for the coefficients that
is solved directly by LU with partial pivoting.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import linalg as _linalg

from .fractional import OrderFunction, _caputo_matrix, _require_derivative_window
from .laguerre import (
    InterpolantCoeffs,
    LaguerreParams,
    _checked_degree,
    _values_at_zero,
    eval_basis,
    eval_interpolant,
    gauss_rule,
)

__all__ = [
    "SolverError",
    "IvpSpec",
    "LinearSystem",
    "ErrorReport",
    "collocation_nodes",
    "assemble",
    "solve",
    "max_abs_error",
]

logger = logging.getLogger(__name__)


class SolverError(RuntimeError):
    """The collocation system could not be solved reliably."""


@dataclass(frozen=True)
class IvpSpec:
    """An initial value problem with an added fractional derivative term.

    The equation is a(x) u^(m)(x) + b(x) D^(rho(x)) u(x) + c(x) u(x) = f(x)
    on [0, domain_length] with u(0) = u0, plus u'(0) = v0 when the
    fractional order lies in (1, 2). The coefficient and forcing callables
    must be pure and finite on the domain.
    """

    params: LaguerreParams
    N: int
    order: OrderFunction
    m: int
    a: Callable[[float], float]
    b: Callable[[float], float]
    c: Callable[[float], float]
    f: Callable[[float], float]
    u0: float
    domain_length: float
    v0: Optional[float] = None

    def __post_init__(self):
        degree = int(self.N)
        if degree != self.N or degree < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N!r}")
        object.__setattr__(self, "N", degree)
        m = int(self.m)
        if m != self.m or m not in (1, 2):
            raise ValueError(f"m must be 1 or 2, got {self.m!r}")
        object.__setattr__(self, "m", m)
        _require_derivative_window(self.order)
        if self.order.n == 2:
            if self.v0 is None:
                raise ValueError("v0 is required when the order lies in (1, 2)")
            if not np.isfinite(float(self.v0)):
                raise ValueError("v0 must be finite")
            object.__setattr__(self, "v0", float(self.v0))
        else:
            if self.v0 is not None:
                raise ValueError("v0 must be omitted when the order lies in (0, 1)")
            if m != 1:
                raise ValueError("m must be 1 when the order lies in (0, 1)")
        for name in ("a", "b", "c", "f"):
            if not callable(getattr(self, name)):
                raise ValueError(f"{name} must be callable")
        if not np.isfinite(float(self.u0)):
            raise ValueError("u0 must be finite")
        object.__setattr__(self, "u0", float(self.u0))
        length = float(self.domain_length)
        if not np.isfinite(length) or length <= 0.0:
            raise ValueError(f"domain_length must be positive, got {self.domain_length!r}")
        object.__setattr__(self, "domain_length", length)


@dataclass(frozen=True)
class LinearSystem:
    """Dense collocation system; basis degrees index rows, equations index columns."""

    matrix: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=float)
        vec = np.array(self.rhs, dtype=float)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError(f"matrix must be square, got shape {mat.shape}")
        if vec.shape != (mat.shape[0],):
            raise ValueError("rhs length must match the matrix dimension")
        if not (np.all(np.isfinite(mat)) and np.all(np.isfinite(vec))):
            raise ValueError("system entries must be finite")
        mat.setflags(write=False)
        vec.setflags(write=False)
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "rhs", vec)


@dataclass(frozen=True)
class ErrorReport:
    """Maximum absolute deviation of an expansion from a reference on [0, L]."""

    N: int
    params: LaguerreParams
    max_abs_error: float
    grid_size: int
    domain_length: float

    def __post_init__(self):
        if not np.isfinite(self.max_abs_error) or self.max_abs_error < 0.0:
            raise ValueError(f"max_abs_error must be finite and nonnegative, "
                             f"got {self.max_abs_error!r}")


def collocation_nodes(params: LaguerreParams, N, count) -> np.ndarray:
    """The `count` smallest zeros of the degree-(N+1) basis polynomial, ascending."""
    degree = _checked_degree(N, "N")
    c = int(count)
    if c != count or c < 0:
        raise ValueError(f"count must be a nonnegative integer, got {count!r}")
    if c > degree + 1:
        raise ValueError(f"count must be at most N+1={degree + 1}, got {count}")
    rule = gauss_rule(params, degree)
    return np.array(rule.nodes[:c])


def _sampled(func, nodes: np.ndarray, name: str) -> np.ndarray:
    vals = np.array([float(func(x)) for x in nodes])
    if not np.all(np.isfinite(vals)):
        raise ValueError(
            f"function {name!r} returned a non-finite value on the collocation nodes")
    return vals


def assemble(spec: IvpSpec) -> LinearSystem:
    """Build the square collocation system for the given problem.

    One column per collocation node carries the equation
    a(x_j) u^(m) + b(x_j) D^(rho) u + c(x_j) u = f(x_j); the remaining one
    or two columns carry the initial conditions via the basis boundary
    values L_i(0) and (for orders in (1, 2)) the slopes L_i'(0).
    """
    n = spec.order.n
    count = spec.N if n == 1 else spec.N - 1
    nodes = collocation_nodes(spec.params, spec.N, count)
    theta, beta = spec.params.theta, spec.params.beta

    basis_rows = eval_basis(spec.params, spec.N, nodes)
    frac_rows = _caputo_matrix(spec.params, spec.order, spec.N, nodes)
    integer_rows = np.zeros((spec.N + 1, count))
    shifted = LaguerreParams(theta + spec.m, beta)
    integer_rows[spec.m:] = (-beta) ** spec.m * eval_basis(shifted, spec.N - spec.m, nodes)

    a_vals = _sampled(spec.a, nodes, "a")
    b_vals = _sampled(spec.b, nodes, "b")
    c_vals = _sampled(spec.c, nodes, "c")
    f_vals = _sampled(spec.f, nodes, "f")

    matrix = np.empty((spec.N + 1, spec.N + 1))
    matrix[:, :count] = a_vals * integer_rows + b_vals * frac_rows + c_vals * basis_rows
    matrix[:, count] = _values_at_zero(spec.params, spec.N)
    rhs = np.empty(spec.N + 1)
    rhs[:count] = f_vals
    rhs[count] = spec.u0
    if n == 2:
        slope = np.zeros(spec.N + 1)
        slope[1:] = -beta * _values_at_zero(LaguerreParams(theta + 1.0, beta), spec.N - 1)
        matrix[:, count + 1] = slope
        rhs[count + 1] = spec.v0
    return LinearSystem(matrix=matrix, rhs=rhs)


def solve(spec: IvpSpec) -> InterpolantCoeffs:
    """Solve the collocation system and return the coefficient expansion.

    Dense LU with partial pivoting on the transposed system. A reciprocal
    condition estimate in the infinity norm is logged for every solve and
    gates matrices that are singular at working precision.
    """
    system = assemble(spec)
    matrix = system.matrix.T.copy()
    rhs = system.rhs.copy()
    anorm = float(np.linalg.norm(matrix, np.inf))
    with warnings.catch_warnings():
        # exact zero pivots surface through the rcond gate below
        warnings.simplefilter("ignore")
        lu, piv = _linalg.lu_factor(matrix)
    gecon = _linalg.get_lapack_funcs("gecon", (lu,))
    rcond, info = gecon(lu, anorm, norm="I")
    eps = float(np.finfo(float).eps)
    if info != 0 or not np.isfinite(rcond) or rcond < eps:
        raise SolverError(
            f"collocation matrix is singular to working precision "
            f"(rcond={float(rcond):.3e}, N={spec.N})")
    coeffs = _linalg.lu_solve((lu, piv), rhs)
    if not np.all(np.isfinite(coeffs)):
        raise SolverError("linear solve produced non-finite coefficients")
    logger.info("solved collocation system N=%d, rcond=%.3e", spec.N, float(rcond))
    return InterpolantCoeffs(params=spec.params, coeffs=coeffs)


def max_abs_error(coeffs: InterpolantCoeffs, exact, domain_length, grid_size) -> ErrorReport:
    """Max |expansion - exact| over a uniform grid including both endpoints."""
    size = int(grid_size)
    if size != grid_size or size < 2:
        raise ValueError(f"grid_size must be an integer >= 2, got {grid_size!r}")
    length = float(domain_length)
    if not np.isfinite(length) or length <= 0.0:
        raise ValueError(f"domain_length must be positive, got {domain_length!r}")
    xs = np.linspace(0.0, length, size)
    approx = eval_interpolant(coeffs, xs)
    reference = np.array([float(exact(x)) for x in xs])
    if not np.all(np.isfinite(reference)):
        raise ValueError("exact returned a non-finite value on the error grid")
    value = float(np.max(np.abs(approx - reference)))
    return ErrorReport(N=coeffs.coeffs.size - 1, params=coeffs.params,
                       max_abs_error=value, grid_size=size, domain_length=length)
