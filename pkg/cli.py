import os
import subprocess
import sys
from typing import Optional

from tap import Tap

from src.commands import cmd_mms_verify, cmd_monitor, cmd_run, cmd_scale_check
from src.config import Config
from src.logger import setup_logging
from src.utils.responses import CommandResponse, ExitStatus

SEP = os.path.sep


class ArgumentParser(Tap):
    command: str
    args: list[str] = []
    overrides: list[str] = []
    output: Optional[str] = None
    log_level: Optional[str] = None

    def configure(self) -> None:
        self.add_argument("command", type=str, help="Command to run")
        self.add_argument("args", type=str, nargs="*", help="Command arguments")
        self.add_argument(
            "--overrides",
            "--set",
            type=str,
            nargs="*",
            help="Config overrides written section.key=value",
        )
        self.add_argument(
            "--output", type=str, help="Output directory, overrides AXISWIRL_OUTPUT_ROOT"
        )
        self.add_argument("--log_level", type=str, help="Logging level")


def _finish(response: CommandResponse) -> None:
    print(response.message)
    for key, value in response.data.items():
        print(f"\t{key}: {value}")
    sys.exit(int(response.status_code))


def _expect(args: list[str], count: int, usage: str) -> None:
    if len(args) != count:
        print(f"Usage: python cli.py {usage}")
        sys.exit(int(ExitStatus.CONFIG_ERROR))


def run(args: list[str], output: Optional[str], overrides: list[str]) -> None:
    """
    command: run
    Simulate a configured flow: run <config> [--set section.key=value ...]
    Writes snapshots and monitors.csv to the output directory.
    """
    _expect(args, 1, "run <config>")
    _finish(cmd_run(args[0], output, overrides))


def monitor(args: list[str], output: Optional[str]) -> None:
    """
    command: monitor
    Evaluate monitors on stored snapshots: monitor <dir> "<spec>; <spec>"
    """
    _expect(args, 2, 'monitor <dir> "<name> @ key=value,..."')
    _finish(cmd_monitor(args[0], args[1], output))


def mms_verify(args: list[str], output: Optional[str], overrides: list[str]) -> None:
    """
    command: mms-verify
    Manufactured solution refinement study: mms-verify <family> [n_rxn_z,...]
    Domain and final time: --set mms.r_max=1.5 mms.t_end=0.01 ...
    """
    if len(args) not in (1, 2):
        print("Usage: python cli.py mms-verify <family> [32x64,64x128,128x256]")
        sys.exit(int(ExitStatus.CONFIG_ERROR))
    grids = args[1] if len(args) == 2 else Config.MMS.GRIDS
    _finish(cmd_mms_verify(args[0], grids, output, overrides))


def scale_check(args: list[str], output: Optional[str]) -> None:
    """
    command: scale-check
    Rescaling identities on stored snapshots: scale-check <dir> <k>
    """
    _expect(args, 2, "scale-check <dir> <k>")
    try:
        k = float(args[1])
    except ValueError:
        print(f"k must be a number, got {args[1]!r}")
        sys.exit(int(ExitStatus.SCALING_ERROR))
    _finish(cmd_scale_check(args[0], k, output))


def clean(files: list[str] = ["src", "tests", "cli.py"]) -> None:
    """
    command: clean
    Clean up the code
    """
    subprocess.run(
        [
            "autoflake",
            "-r",
            "--exclude=__init__.py, conftest.py",
            "--remove-all-unused-imports",
            "--remove-unused-variables",
            "-i",
            *files,
        ]
    )
    subprocess.run(["isort", *files, "--profile", "black"])
    subprocess.run(["black", *files])
    subprocess.run(["mypy", "--strict", *files])


def import_fixtures() -> None:
    """
    command: import-fixtures
    This command imports all the fixtures in the
    `tests/fixtures` directory to the `conftest.py` file.
    """
    conftest = open(f"tests{SEP}conftest.py", "w")
    fixtures = os.path.join("tests", "fixtures")
    for dirpath, dirnames, filenames in os.walk(fixtures):
        for filename in sorted(filenames):
            if filename.endswith(".py"):
                lines = open(os.path.join(dirpath, filename)).read().split("\n")
                function_names = [
                    lines[i + 1].split("def ")[1].split("(")[0]
                    for i, line in enumerate(lines)
                    if line.startswith("@pytest.fixture")
                ]
                if function_names:
                    path = os.path.relpath(dirpath, fixtures).replace(SEP, ".")
                    path = f".fixtures.{path}.{filename.split('.')[0]}"
                    while ".." in path:
                        path = path.replace("..", ".")
                    conftest.write(f"from {path} import {', '.join(function_names)}\n")
    conftest.close()
    clean(["tests/conftest.py"])


def run_tests() -> None:
    """
    command: run-tests
    This command runs all the tests in the `tests` directory.
    """
    subprocess.run(["pytest", "tests"])


def help() -> None:
    """
    command: help
    Show help
    """
    print(f"{Config.APP.TITLE} {Config.APP.VERSION}: {Config.APP.DESCRIPTION}")
    print("Usage: python cli.py [command] [args] [--set section.key=value ...] [--output DIR]")
    print("Commands:")
    commands: list[dict[str, str]] = []
    for name, obj in globals().items():
        if obj.__class__.__name__ == "type":
            continue
        if callable(obj):
            if type(obj.__doc__) != str or "command:" not in obj.__doc__:
                continue
            commands.append(
                {
                    "command": obj.__doc__.split("\n")[1].split(":")[1].strip(),
                    "description": "\n".join(
                        line.strip() for line in obj.__doc__.split("\n")[2:-1]
                    ),
                }
            )
    max_command_length = max([len(command["command"]) for command in commands])
    for cmd in commands:
        command = cmd["command"]
        description = cmd["description"]
        desc_lines = description.split("\n")
        print(f"\t{command:<{max_command_length}}:\t{desc_lines[0]}")
        for line in desc_lines[1:]:
            print(f"\t{'':<{max_command_length}} \t{line}")
        print()


if __name__ == "__main__":
    arg_parser = ArgumentParser()
    args = arg_parser.parse_args()
    setup_logging(args.log_level)

    if args.command == "run":
        run(args.args, args.output, args.overrides)
    elif args.command == "monitor":
        monitor(args.args, args.output)
    elif args.command == "mms-verify":
        mms_verify(args.args, args.output, args.overrides)
    elif args.command == "scale-check":
        scale_check(args.args, args.output)
    elif args.command == "clean":
        clean()
    elif args.command == "import-fixtures":
        import_fixtures()
    elif args.command == "run-tests":
        run_tests()
    elif args.command == "help":
        help()
    else:
        print("Invalid command")
        help()
        exit(1)
