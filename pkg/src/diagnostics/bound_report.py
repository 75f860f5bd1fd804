"""
Measured and structural sides of one bound.
"""

from typing import Optional

from pydantic import Field

from src.models import BaseModel
from src.storage import MonitorRow


class BoundReport(BaseModel):
    """
    One evaluation of a bound.

    Attributes:
        monitor: Monitor name.
        location: Evaluation point or region, as written in the monitor spec.
        t: Evaluation time.
        window: Time window used, None for instantaneous monitors.
        lhs: Measured left-hand side.
        rhs: Structural right-hand side with the unspecified constant set to 1.
        rhs_terms: Named pieces of the right-hand side.
        implied_constant: lhs / rhs (0 if both vanish, inf if only rhs does).
        scale_free_constant: The implied constant with the logarithmic factor
            of the bound removed, for bounds that carry one.
        clipped: The evaluation region left the grid.
        m0: ||Gamma(t0)||_inf of the run.
    """

    monitor: str
    location: str
    t: float
    window: Optional[tuple[float, float]] = None
    lhs: float
    rhs: float
    rhs_terms: dict[str, float] = Field(default_factory=dict)
    implied_constant: float
    scale_free_constant: Optional[float] = None
    clipped: bool = False
    m0: float = 0.0

    def row(self) -> MonitorRow:
        return MonitorRow(
            time=self.t,
            monitor=self.monitor,
            point_or_region=self.location,
            lhs=self.lhs,
            rhs=self.rhs,
            implied_constant=self.implied_constant,
            clipped=self.clipped,
        )
