from src.config import Config


class TestConfig:
    class TestApp:
        def test_app(self) -> None:
            assert Config.APP.TITLE == "axiswirl"
            assert Config.APP.VERSION == "0.1.0"

    class TestOutput:
        def test_output(self) -> None:
            assert Config.OUTPUT.SNAPSHOT_PATTERN.format(step=12) == "snap_00000012.axs"
            assert Config.OUTPUT.MONITOR_SERIES == "monitors.csv"
            assert Config.OUTPUT.BLOWUP_DUMP == "blowup.axs"

    class TestSolver:
        def test_solver(self) -> None:
            assert Config.SOLVER.TOLERANCE == 1.0e-10
            assert Config.SOLVER.MAX_ITERATIONS == 10_000

    class TestRun:
        def test_run(self) -> None:
            assert Config.RUN.CFL_ADVECTIVE == 0.4
            assert Config.RUN.CFL_DIFFUSIVE == 0.5
            assert Config.RUN.SNAPSHOT_STRIDE == 10

    class TestQuadrature:
        def test_quadrature(self) -> None:
            assert (
                Config.QUADRATURE.RADIAL,
                Config.QUADRATURE.POLAR,
                Config.QUADRATURE.AZIMUTHAL,
            ) == (8, 8, 16)

    class TestSnapshot:
        def test_snapshot(self) -> None:
            assert Config.SNAPSHOT.MAGIC == b"AXISWIRL1\n"
            assert Config.SNAPSHOT.DTYPE == "<f8"

    class TestTesting:
        class TestRandom:
            def test_random(self) -> None:
                assert Config.Testing.RANDOM.SEED == 0
