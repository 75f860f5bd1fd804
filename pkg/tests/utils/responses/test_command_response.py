import pytest
from pydantic import ValidationError

from src.errors import (
    AxiswirlError,
    BlowUpError,
    ConfigError,
    EllipticConvergenceError,
    EmptyRegionError,
    FieldError,
    GridError,
    RetentionError,
    ScalingError,
    SnapshotError,
    UnknownFamilyError,
)
from src.utils.responses import CommandResponse, ExitStatus


class TestCommandResponse:
    def test_ok(self) -> None:
        response = CommandResponse(message="done")
        assert response.ok
        assert response.status_code == ExitStatus.OK
        assert response.data == {}

    def test_message_required(self) -> None:
        with pytest.raises(ValidationError, match="message must be provided"):
            CommandResponse(message="")

    class TestFromError:
        @pytest.mark.parametrize(
            "error, status",
            [
                (BlowUpError(0.5), ExitStatus.BLOW_UP),
                (EllipticConvergenceError("no", 1.0), ExitStatus.ELLIPTIC_FAILURE),
                (RetentionError("lambda", 1.0, 0.5), ExitStatus.RETENTION_ERROR),
                (SnapshotError("bad"), ExitStatus.SNAPSHOT_ERROR),
                (ScalingError("bad"), ExitStatus.SCALING_ERROR),
                (ConfigError("run.t_end", "bad"), ExitStatus.CONFIG_ERROR),
                (GridError("bad"), ExitStatus.CONFIG_ERROR),
                (EmptyRegionError("bad"), ExitStatus.CONFIG_ERROR),
                (UnknownFamilyError("bad"), ExitStatus.CONFIG_ERROR),
                (FieldError("bad"), ExitStatus.FAILURE),
                (AxiswirlError("bad"), ExitStatus.FAILURE),
            ],
        )
        def test_status(self, error: AxiswirlError, status: ExitStatus) -> None:
            response = CommandResponse.from_error(error)
            assert response.status_code == status
            assert response.message == str(error)
            assert response.data["error"] == type(error).__name__
            assert not response.ok

        def test_blow_up_dump(self) -> None:
            response = CommandResponse.from_error(BlowUpError(0.5, "out/blowup.axs"))
            assert response.data["dump"] == "out/blowup.axs"
            assert "out/blowup.axs" in response.message

        def test_blow_up_without_dump(self) -> None:
            assert "dump" not in CommandResponse.from_error(BlowUpError(0.5)).data

        def test_retention_names_monitor(self) -> None:
            response = CommandResponse.from_error(RetentionError("thm12 @ r=0.4", 0.16, 0.1))
            assert response.data["monitor"] == "thm12 @ r=0.4"

        def test_config_names_key(self) -> None:
            response = CommandResponse.from_error(ConfigError("grid.n_r", "too small"))
            assert response.data["key"] == "grid.n_r"
            assert response.message == "grid.n_r: too small"
