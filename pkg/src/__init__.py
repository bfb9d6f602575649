"""smartenv-reasoner: temporal specifications mined from smart-environment event logs."""

__version__ = "0.1.0"
