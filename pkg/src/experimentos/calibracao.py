"""
Módulo de calibração do comprimento dos enlaces.

O comprimento dos enlaces do cenário de referência não é publicado; esta
varredura repete a varredura de ε para vários comprimentos e resume cada
uma com analisar_tendencias, para escolher um comprimento que reproduza
as tendências esperadas.
"""

import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

from src.config.cenario import ConfigCenario
from src.experimentos.tendencias import TendenciasVarredura, analisar_tendencias
from src.experimentos.varredura import ResultadoVarredura, executar_varredura

# Configuração de logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PontoCalibracao:
    comprimento_km: float
    resultado: ResultadoVarredura
    tendencias: Optional[TendenciasVarredura]


def com_comprimento(config: ConfigCenario, comprimento_km: float) -> ConfigCenario:
    """Cópia do cenário com todos os enlaces no comprimento informado."""
    if not comprimento_km > 0:
        raise ValueError(f"Comprimento deve ser positivo: {comprimento_km}")
    enlaces = tuple((origem, destino, float(comprimento_km)) for origem, destino, _ in config.topologia.enlaces)
    return replace(config, topologia=replace(config.topologia, enlaces=enlaces))


def varrer_comprimentos(
    config: ConfigCenario,
    comprimentos_km: Sequence[float],
    paralelo: int = 1
) -> List[PontoCalibracao]:
    """
    Executa a varredura de ε para cada comprimento de enlace.

    Args:
        config: Cenário validado (os comprimentos dos enlaces são sobrescritos)
        comprimentos_km: Comprimentos a testar
        paralelo: Número de processos de cada varredura

    Returns:
        Um ponto por comprimento, na ordem informada
    """
    if not comprimentos_km:
        raise ValueError("Informe ao menos um comprimento")

    pontos = []
    for comprimento in comprimentos_km:
        logger.info(f"Calibração: enlaces com {comprimento} km")
        resultado = executar_varredura(com_comprimento(config, comprimento), paralelo=paralelo)
        pontos.append(PontoCalibracao(float(comprimento), resultado, analisar_tendencias(resultado)))

    reproduzem = [p.comprimento_km for p in pontos if p.tendencias is not None and p.tendencias.pico_interior]
    logger.info(f"Comprimentos com pico interior de bloqueio: {reproduzem or 'nenhum'}")
    return pontos
