from .ValidData import ValidData, ValidItems

__all__ = ["ValidData", "ValidItems"]