"""Pacote principal do Simulador EON com ataques de jamming."""

__version__ = "1.0.0"
