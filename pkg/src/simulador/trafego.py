"""
Módulo de geração de tráfego dinâmico.
Chegadas de Poisson, tempos de permanência exponenciais, pares origem-destino
e taxas de bits uniformes, tudo determinado pela semente.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

# Configuração de logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Requisicao:
    """Pedido de circuito."""

    id: int
    origem: str
    destino: str
    taxa_gbps: int
    tempo_chegada: float
    tempo_permanencia: float

    def __post_init__(self) -> None:
        if self.origem == self.destino:
            raise ValueError(f"Requisição {self.id} com origem igual ao destino")
        if not self.tempo_permanencia > 0:
            raise ValueError(f"Requisição {self.id} com tempo de permanência não positivo")


def gerar_trafego(
    carga_erlang: float,
    tempo_medio_permanencia: float,
    pares_nos: Sequence[Tuple[str, str]],
    taxas_gbps: Sequence[int],
    quantidade: int,
    semente: int
) -> List[Requisicao]:
    """
    Gera a sequência de requisições de uma execução.

    A taxa de chegada é λ = carga / tempo médio de permanência.

    Args:
        carga_erlang: Carga oferecida em Erlang
        tempo_medio_permanencia: Média do tempo de permanência em segundos
        pares_nos: Pares ordenados (origem, destino) sorteados uniformemente
        taxas_gbps: Taxas de bits sorteadas uniformemente
        quantidade: Número de requisições
        semente: Semente do gerador

    Returns:
        Lista de requisições em ordem de chegada
    """
    if not carga_erlang > 0:
        raise ValueError(f"Carga deve ser positiva: {carga_erlang}")
    if quantidade < 1:
        raise ValueError(f"Quantidade de requisições deve ser >= 1: {quantidade}")
    if not pares_nos or not taxas_gbps:
        raise ValueError("Pares de nós e taxas de bits não podem ser vazios")

    taxa_chegada = carga_erlang / tempo_medio_permanencia
    gerador = np.random.default_rng(semente)

    intervalos = gerador.exponential(1.0 / taxa_chegada, quantidade)
    permanencias = gerador.exponential(tempo_medio_permanencia, quantidade)
    indices_pares = gerador.integers(len(pares_nos), size=quantidade)
    indices_taxas = gerador.integers(len(taxas_gbps), size=quantidade)
    chegadas = np.cumsum(intervalos)

    # Permanência nula tem probabilidade desprezível, mas é excluída pelo invariante
    permanencias = np.maximum(permanencias, np.finfo(float).tiny)

    logger.debug(f"Tráfego gerado: {quantidade} requisições, λ={taxa_chegada:.4f}/s, semente {semente}")

    return [
        Requisicao(
            id=i,
            origem=pares_nos[indices_pares[i]][0],
            destino=pares_nos[indices_pares[i]][1],
            taxa_gbps=int(taxas_gbps[indices_taxas[i]]),
            tempo_chegada=float(chegadas[i]),
            tempo_permanencia=float(permanencias[i]),
        )
        for i in range(quantidade)
    ]
