"""Pacote de exportadores de resultados de simulação."""
