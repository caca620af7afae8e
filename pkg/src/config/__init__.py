"""Pacote de configuração do simulador: cenários, carregador YAML e CLI."""
