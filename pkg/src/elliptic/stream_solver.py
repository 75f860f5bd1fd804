"""
Recovery of the angular stream function from the angular vorticity.

The stream function solves the compact five-point discretisation of

    (D_rr + (1/r) D_r + D_zz - 1/r^2) L_theta = -omega_theta

with Dirichlet values on every non-periodic boundary.
"""

import logging
import math
from functools import lru_cache
from typing import Literal, Optional

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import LinearOperator, SuperLU, bicgstab, spilu, splu

from src.config import Config
from src.errors import EllipticConvergenceError, FieldError
from src.fields import ScalarField
from src.geometry import Grid
from src.models import BaseModel

logger = logging.getLogger(__name__)

SolverMethod = Literal["direct", "bicgstab"]


class EllipticSolveReport(BaseModel):
    """
    Outcome of one stream function solve.

    Attributes:
        method: ``direct`` or ``bicgstab``.
        iterations: Iterations used, 1 for the direct solve.
        residual_norm: Discrete L^2 norm of the residual.
        tolerance: Residual bound the solve had to meet.
    """

    method: SolverMethod
    iterations: int
    residual_norm: float
    tolerance: float


def _second_difference(n: int, h: float, periodic: bool) -> sp.csr_matrix:
    main = np.full(n, -2.0 / h**2)
    off = np.full(n - 1, 1.0 / h**2)
    matrix = sp.diags([off, main, off], [-1, 0, 1], format="lil")
    if periodic:
        matrix[0, n - 1] = 1.0 / h**2
        matrix[n - 1, 0] = 1.0 / h**2
    return matrix.tocsr()


def _first_difference(n: int, h: float) -> sp.csr_matrix:
    off = np.full(n - 1, 1.0 / (2.0 * h))
    return sp.diags([-off, off], [-1, 1], format="csr")


@lru_cache(maxsize=8)
def stream_operator(grid: Grid) -> sp.csr_matrix:
    """
    Sparse matrix of the stream operator, row-major over (r, z) nodes.

    Interior rows hold the centered five-point stencil, Dirichlet rows the
    identity.

    Args:
        grid (Grid): The grid.

    Returns:
        sp.csr_matrix: Square matrix of size n_r * n_z.
    """
    inv_r = sp.diags(1.0 / grid.r)
    radial = (
        _second_difference(grid.n_r, grid.h_r, periodic=False)
        + inv_r @ _first_difference(grid.n_r, grid.h_r)
        - sp.diags(1.0 / grid.r**2)
    )
    axial = _second_difference(grid.n_z, grid.h_z, periodic=grid.z_periodic)
    full = sp.kron(radial, sp.identity(grid.n_z)) + sp.kron(
        sp.identity(grid.n_r), axial
    )
    boundary = grid.boundary_mask().ravel().astype(float)
    operator = sp.diags(1.0 - boundary) @ full + sp.diags(boundary)
    return operator.tocsr()


@lru_cache(maxsize=8)
def _factorization(grid: Grid) -> SuperLU:
    logger.debug("Factorising stream operator on a %dx%d grid", grid.n_r, grid.n_z)
    return splu(stream_operator(grid).tocsc())


class StreamSolver:
    """
    Stream function solver bound to one grid.

    The factorisation (direct) or incomplete factorisation (iterative) is
    built once per grid and shared by all solvers on that grid.

    Args:
        grid (Grid): The grid.
        method (SolverMethod | None): Defaults to ``Config.SOLVER.METHOD``.
        tolerance (float | None): Relative residual tolerance, scaled by
            max(1, ||rhs||). Defaults to ``Config.SOLVER.TOLERANCE``.
        max_iterations (int | None): Iteration cap of the iterative method.
    """

    def __init__(
        self,
        grid: Grid,
        method: Optional[SolverMethod] = None,
        tolerance: Optional[float] = None,
        max_iterations: Optional[int] = None,
    ) -> None:
        self.grid = grid
        self.method: SolverMethod = method or Config.SOLVER.METHOD  # type: ignore[assignment]
        if self.method not in ("direct", "bicgstab"):
            raise ValueError(f"unknown solver method {self.method}")
        self.tolerance = tolerance if tolerance is not None else Config.SOLVER.TOLERANCE
        self.max_iterations = max_iterations or Config.SOLVER.MAX_ITERATIONS
        self._operator = stream_operator(grid)
        self._quadrature = math.sqrt(grid.h_r * grid.h_z)

    def _l2(self, vector: np.ndarray) -> float:
        return self._quadrature * float(np.linalg.norm(vector))

    def rhs(
        self, omega_theta: ScalarField, bc: Optional[ScalarField] = None
    ) -> np.ndarray:
        """Right-hand side: -omega_theta inside, boundary data on Dirichlet nodes."""
        boundary = self.grid.boundary_mask()
        values = np.where(boundary, 0.0, -omega_theta.values)
        if bc is not None:
            values = np.where(boundary, bc.values, values)
        return values.ravel()

    def solve(
        self, omega_theta: ScalarField, bc: Optional[ScalarField] = None
    ) -> tuple[ScalarField, EllipticSolveReport]:
        """
        Solve for L_theta.

        Args:
            omega_theta (ScalarField): Angular vorticity.
            bc (ScalarField | None): Field whose values on the Dirichlet nodes
                are the boundary data; zero data when omitted.

        Returns:
            tuple[ScalarField, EllipticSolveReport]: The stream function and
            the solve report.

        Raises:
            FieldError: If the solution has non-finite values.
            EllipticConvergenceError: If the residual stays above tolerance.
        """
        b = self.rhs(omega_theta, bc)
        tolerance = self.tolerance * max(1.0, self._l2(b))
        if self.method == "direct":
            x = _factorization(self.grid).solve(b)
            iterations = 1
        else:
            x, iterations = self._iterate(b, tolerance)
        if not np.all(np.isfinite(x)):
            logger.error("Stream solve produced non-finite values")
            raise FieldError(f"{self.method} stream solve produced non-finite values")
        residual = self._l2(self._operator @ x - b)
        if not residual <= tolerance:
            logger.error(
                "Stream solve failed: residual %.3e above %.3e", residual, tolerance
            )
            raise EllipticConvergenceError(
                f"{self.method} stream solve did not converge", residual
            )
        stream = ScalarField.from_array(self.grid, x.reshape(self.grid.shape), "stream")
        report = EllipticSolveReport(
            method=self.method,
            iterations=iterations,
            residual_norm=residual,
            tolerance=tolerance,
        )
        return stream, report

    def _iterate(self, b: np.ndarray, tolerance: float) -> tuple[np.ndarray, int]:
        ilu = spilu(self._operator.tocsc())
        preconditioner = LinearOperator(self._operator.shape, ilu.solve)
        count = 0

        def _count(_: np.ndarray) -> None:
            nonlocal count
            count += 1

        x, _ = bicgstab(
            self._operator,
            b,
            rtol=0.0,
            atol=tolerance / self._quadrature,
            maxiter=self.max_iterations,
            M=preconditioner,
            callback=_count,
        )
        return x, count


def solve_stream(
    omega_theta: ScalarField,
    bc: Optional[ScalarField] = None,
    method: Optional[SolverMethod] = None,
) -> tuple[ScalarField, EllipticSolveReport]:
    """Solve the stream problem with a solver for the field's grid."""
    return StreamSolver(omega_theta.grid, method=method).solve(omega_theta, bc)
