"""Complex reduction of 4-variable Monge-Ampere equations."""

__version__ = "0.1.0"
