"""
Módulo com as entidades do simulador: circuitos, jammers e métricas.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

import numpy as np

from src.qot.modelo_snr import CanalEspectral
from src.rede.topologia import IdEnlace, Rota


@dataclass(frozen=True)
class Jammer:
    """
    Atacante estático que eleva em ε dB a potência dos circuitos que usam
    os slots [slot_inicial, slot_final] do enlace indicado.
    """

    enlace: IdEnlace
    slot_inicial: int
    slot_final: int
    epsilon_db: float = 0.0
    ambos_sentidos: bool = True

    def __post_init__(self) -> None:
        if self.slot_inicial < 0 or self.slot_final < self.slot_inicial:
            raise ValueError(f"Faixa de slots inválida para jammer: {self.slot_inicial}-{self.slot_final}")
        if self.epsilon_db < 0:
            raise ValueError(f"epsilon_db do jammer deve ser >= 0: {self.epsilon_db}")

    def atua_no_enlace(self, id_enlace: IdEnlace) -> bool:
        origem, destino = self.enlace
        if id_enlace == (origem, destino):
            return True
        return self.ambos_sentidos and id_enlace == (destino, origem)


@dataclass
class Circuito:
    """Caminho óptico estabelecido."""

    id: int
    rota: Rota
    intervalo: Tuple[int, int]
    taxa_gbps: int
    jammed: bool
    epsilon_db: float
    tempo_partida: float
    canal: CanalEspectral = field(repr=False)
    snr_admissao_db: Optional[float] = None

    def __post_init__(self) -> None:
        if self.jammed != (self.epsilon_db > 0):
            raise ValueError(f"Circuito {self.id}: flag jammed incoerente com epsilon_db={self.epsilon_db}")


@dataclass
class Metricas:
    """Métricas de uma execução do simulador."""

    geradas: int
    bloqueadas: int
    utilizacao_por_enlace: Dict[IdEnlace, np.ndarray]
    utilizacao_rede: np.ndarray
    bloqueios_por_motivo: Dict[str, int] = field(default_factory=dict)
    estabelecidos: int = 0
    finalizados: int = 0
    ativos_ao_final: int = 0
    circuitos_jammed: int = 0
    media_circuitos_ativos: float = 0.0

    @property
    def probabilidade_bloqueio(self) -> float:
        return self.bloqueadas / self.geradas if self.geradas else 0.0


@dataclass
class MetricasAgregadas:
    """Média e desvio padrão amostral das métricas de várias sementes."""

    sementes: Tuple[int, ...]
    media_bloqueio: float
    desvio_bloqueio: float
    media_utilizacao_rede: np.ndarray
    desvio_utilizacao_rede: np.ndarray
    media_utilizacao_por_enlace: Dict[IdEnlace, np.ndarray]
    desvio_utilizacao_por_enlace: Dict[IdEnlace, np.ndarray]
    media_geradas: float
    media_bloqueadas: float
    desvio_bloqueadas: float
