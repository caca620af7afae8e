"""Pacote do simulador de eventos discretos."""
