from .command_response import CommandResponse, ExitStatus

__all__ = ["CommandResponse", "ExitStatus"]
