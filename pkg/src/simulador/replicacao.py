"""
Módulo de replicação de simulações e agregação de métricas.
"""

import logging
from typing import Sequence

import numpy as np

from src.config.cenario import ConfigCenario
from src.simulador.modelos import Metricas, MetricasAgregadas
from src.simulador.simulador import executar

# Configuração de logging
logger = logging.getLogger(__name__)


def _media_desvio(valores: np.ndarray):
    # Desvio padrão amostral; uma única amostra ou amostras iguais têm desvio zero
    media = valores.mean(axis=0)
    if valores.shape[0] < 2:
        return media, np.zeros_like(media)
    desvio = valores.std(axis=0, ddof=1)
    return media, np.where(np.ptp(valores, axis=0) == 0, 0.0, desvio)


def agregar(sementes: Sequence[int], metricas: Sequence[Metricas]) -> MetricasAgregadas:
    """
    Média e desvio padrão amostral, elemento a elemento, das métricas.

    Args:
        sementes: Sementes das execuções
        metricas: Métricas na mesma ordem das sementes

    Returns:
        Métricas agregadas
    """
    if not metricas:
        raise ValueError("Nenhuma métrica para agregar")

    media_bloqueio, desvio_bloqueio = _media_desvio(
        np.array([m.probabilidade_bloqueio for m in metricas])
    )
    media_bloqueadas, desvio_bloqueadas = _media_desvio(np.array([m.bloqueadas for m in metricas], dtype=float))
    media_rede, desvio_rede = _media_desvio(np.stack([m.utilizacao_rede for m in metricas]))

    media_enlaces, desvio_enlaces = {}, {}
    for id_enlace in metricas[0].utilizacao_por_enlace:
        media_enlaces[id_enlace], desvio_enlaces[id_enlace] = _media_desvio(
            np.stack([m.utilizacao_por_enlace[id_enlace] for m in metricas])
        )

    return MetricasAgregadas(
        sementes=tuple(sementes),
        media_bloqueio=float(media_bloqueio),
        desvio_bloqueio=float(desvio_bloqueio),
        media_utilizacao_rede=media_rede,
        desvio_utilizacao_rede=desvio_rede,
        media_utilizacao_por_enlace=media_enlaces,
        desvio_utilizacao_por_enlace=desvio_enlaces,
        media_geradas=float(np.mean([m.geradas for m in metricas])),
        media_bloqueadas=float(media_bloqueadas),
        desvio_bloqueadas=float(desvio_bloqueadas),
    )


def replicar(config: ConfigCenario, sementes: Sequence[int]) -> MetricasAgregadas:
    """
    Executa replicações independentes e agrega os resultados.

    Args:
        config: Cenário validado
        sementes: Ao menos uma semente

    Returns:
        Métricas agregadas
    """
    if not sementes:
        raise ValueError("Informe ao menos uma semente")

    metricas = [executar(config, semente) for semente in sementes]
    agregado = agregar(sementes, metricas)
    logger.info(
        f"Replicações de '{config.nome}': bloqueio médio {agregado.media_bloqueio:.4f} "
        f"± {agregado.desvio_bloqueio:.4f} ({len(sementes)} sementes)"
    )
    return agregado
