import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    """Configuration settings for the axisymmetric swirl simulator."""

    class APP:
        """Application-level settings."""

        TITLE = "axiswirl"
        DESCRIPTION = (
            "Axisymmetric Navier-Stokes simulator and a priori bound diagnostics"
        )
        VERSION = "0.1.0"

    class OUTPUT:
        """Output locations."""

        ROOT = os.getenv("AXISWIRL_OUTPUT_ROOT", "output")
        SNAPSHOT_PATTERN = "snap_{step:08d}.axs"
        MONITOR_SERIES = "monitors.csv"
        BLOWUP_DUMP = "blowup.axs"

    class LOGGING:
        """Logging settings."""

        LEVEL = os.getenv("AXISWIRL_LOG_LEVEL", "INFO")
        FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    class SOLVER:
        """Stream function solver settings."""

        METHOD = os.getenv("AXISWIRL_SOLVER", "direct")
        TOLERANCE = 1.0e-10
        MAX_ITERATIONS = 10_000

    class RUN:
        """Time stepping defaults."""

        CFL_ADVECTIVE = 0.4
        CFL_DIFFUSIVE = 0.5
        SNAPSHOT_STRIDE = 10
        VELOCITY_FLOOR = 1.0e-12
        MAX_STEPS = 10_000_000

    class MMS:
        """Manufactured solution convergence study."""

        R_MIN = 0.5
        R_MAX = 5.0
        Z_MIN = -5.0
        Z_MAX = 5.0
        T_END = 0.25
        GRIDS = "32x64,64x128,128x256"
        CONVERGENCE_PATTERN = "convergence_{family}.csv"

    class SCALING:
        """Scaling identity table."""

        TABLE_PATTERN = "scaling_k{k:g}.csv"

    class QUADRATURE:
        """Ball quadrature resolution."""

        RADIAL = 8
        POLAR = 8
        AZIMUTHAL = 16

    class SNAPSHOT:
        """Binary snapshot format."""

        MAGIC = b"AXISWIRL1\n"
        DTYPE = "<f8"

    class Testing:
        """Testing configurations."""

        class RANDOM:
            """Randomization settings for testing."""

            SEED = 0
