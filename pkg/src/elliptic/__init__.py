from .ball_quadrature import BallQuadrature, BallSamples
from .biot_savart import BiotSavartReport, ball_radius, biot_savart_report
from .stream_solver import (
    EllipticSolveReport,
    StreamSolver,
    solve_stream,
    stream_operator,
)
from .velocity import close_state, derive, stream_gradient_identity, velocity_from_stream

__all__ = [
    "BallQuadrature",
    "BallSamples",
    "BiotSavartReport",
    "EllipticSolveReport",
    "StreamSolver",
    "ball_radius",
    "biot_savart_report",
    "close_state",
    "derive",
    "solve_stream",
    "stream_gradient_identity",
    "stream_operator",
    "velocity_from_stream",
]
