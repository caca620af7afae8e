"""Pacote de testes do simulador EON com jamming."""
