"""
Módulo de varredura da potência de jamming.

Para cada ε da varredura e cada semente executa o simulador com todos os
jammers ajustados para ε e agrega os resultados por ε.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.config.cenario import ConfigCenario
from src.simulador.modelos import Metricas, MetricasAgregadas
from src.simulador.replicacao import agregar
from src.simulador.simulador import executar

# Configuração de logging
logger = logging.getLogger(__name__)


class ErroVarredura(RuntimeError):
    """Falha de uma execução da varredura, com suas coordenadas."""

    def __init__(self, epsilon_db: float, semente: int, causa: object):
        self.epsilon_db = epsilon_db
        self.semente = semente
        self.causa = str(causa)
        super().__init__(f"Execução falhou em epsilon={epsilon_db} dB, semente={semente}: {causa}")

    def __reduce__(self):
        # Necessário para atravessar o ProcessPoolExecutor
        return (self.__class__, (self.epsilon_db, self.semente, self.causa))


@dataclass(frozen=True)
class RegistroExecucao:
    epsilon_db: float
    semente: int
    metricas: Metricas


@dataclass
class ResultadoVarredura:
    """Um registro por (ε, semente) e um agregado por ε, ambos ordenados."""

    config: ConfigCenario
    registros: List[RegistroExecucao]
    agregados: Dict[float, MetricasAgregadas]

    @property
    def valores_epsilon(self) -> List[float]:
        return sorted(self.agregados)


def _executar_ponto(tarefa: Tuple[ConfigCenario, float, int]) -> Tuple[float, int, Metricas]:
    config, epsilon_db, semente = tarefa
    try:
        return epsilon_db, semente, executar(config.com_epsilon(epsilon_db), semente)
    except Exception as e:
        logger.error(f"Falha na execução epsilon={epsilon_db} dB, semente={semente}: {str(e)}")
        raise ErroVarredura(epsilon_db, semente, e) from e


def executar_varredura(config: ConfigCenario, paralelo: int = 1) -> ResultadoVarredura:
    """
    Executa a varredura de ε definida no cenário.

    Args:
        config: Cenário validado
        paralelo: Número de processos (1 executa em série)

    Returns:
        Resultado com registros ordenados por (ε, semente)

    Raises:
        ErroVarredura: Na primeira execução que falhar
    """
    valores = config.varredura.valores()
    tarefas = [(config, epsilon, semente) for epsilon in valores for semente in config.sementes]
    logger.info(
        f"Varredura de '{config.nome}': {len(valores)} valores de epsilon x "
        f"{len(config.sementes)} sementes = {len(tarefas)} execuções"
    )

    if paralelo > 1:
        with ProcessPoolExecutor(max_workers=paralelo) as executor:
            resultados = list(executor.map(_executar_ponto, tarefas))
    else:
        resultados = [_executar_ponto(tarefa) for tarefa in tarefas]

    resultados.sort(key=lambda item: (item[0], config.sementes.index(item[1])))
    registros = [RegistroExecucao(epsilon, semente, metricas) for epsilon, semente, metricas in resultados]

    agregados = {}
    for epsilon in valores:
        do_ponto = [registro for registro in registros if registro.epsilon_db == epsilon]
        agregados[epsilon] = agregar(
            [registro.semente for registro in do_ponto],
            [registro.metricas for registro in do_ponto],
        )
        logger.info(
            f"epsilon={epsilon} dB: bloqueio médio {agregados[epsilon].media_bloqueio:.4f} "
            f"± {agregados[epsilon].desvio_bloqueio:.4f}"
        )

    return ResultadoVarredura(config=config, registros=registros, agregados=agregados)
