"""Pacote de experimentos em lote (varreduras de potência de jamming)."""
