"""
Módulo com a representação imutável de um cenário de simulação.
"""

import math
from dataclasses import dataclass, field, replace
from typing import List, Tuple

from src.qot.parametros import ParametrosFisicos, db_para_linear
from src.simulador.modelos import Jammer

# Padrões da configuração de referência
NUM_SLOTS_PADRAO = 320
SLOTS_GUARDA_PADRAO = 2
TEMPO_PERMANENCIA_PADRAO = 600.0
LIMIAR_SNR_PADRAO_DB = 15.0
SEMENTES_PADRAO = tuple(range(1, 11))


@dataclass(frozen=True)
class ConfigTopologia:
    """Nós e enlaces bidirecionais (origem, destino, comprimento_km)."""

    nos: Tuple[str, ...]
    enlaces: Tuple[Tuple[str, str, float], ...]


@dataclass(frozen=True)
class ConfigVarredura:
    """Varredura de potência de jamming em dB, inclusiva nas duas pontas."""

    inicio_db: float = 0.0
    fim_db: float = 5.0
    passo_db: float = 0.5

    def valores(self) -> List[float]:
        """
        Pontos da varredura.

        Returns:
            Lista [inicio, inicio + passo, ..., <= fim]
        """
        quantidade = math.floor((self.fim_db - self.inicio_db) / self.passo_db + 1e-9)
        return [round(self.inicio_db + k * self.passo_db, 10) for k in range(quantidade + 1)]


@dataclass(frozen=True)
class ConfigFisica:
    """Parâmetros físicos nas unidades em que são configurados."""

    potencia_tx_dbm: float = 0.0
    largura_slot_ghz: float = 12.5
    atenuacao_db_km: float = 0.2
    comprimento_vao_km: float = 100.0
    gamma: float = 1.22
    beta2_ps2_km: float = 16.0
    frequencia_luz_hz: float = 1.93e14
    figura_ruido_db: float = 6.0

    def para_parametros(self) -> ParametrosFisicos:
        return ParametrosFisicos(
            potencia_tx=1e-3 * db_para_linear(self.potencia_tx_dbm),
            largura_slot=self.largura_slot_ghz * 1e9,
            atenuacao_db_por_km=self.atenuacao_db_km,
            comprimento_vao_km=self.comprimento_vao_km,
            gamma=self.gamma,
            beta2_ps2_por_km=self.beta2_ps2_km,
            frequencia_luz=self.frequencia_luz_hz,
            figura_ruido_db=self.figura_ruido_db,
        )


@dataclass(frozen=True)
class ConfigCenario:
    """Cenário completo, já validado e com padrões preenchidos."""

    topologia: ConfigTopologia
    nome: str = "cenario"
    carga_erlang: float = 120.0
    num_requisicoes: int = 100000
    tempo_medio_permanencia_s: float = TEMPO_PERMANENCIA_PADRAO
    taxas_gbps: Tuple[int, ...] = (50, 100, 200)
    slots_guarda: int = SLOTS_GUARDA_PADRAO
    num_slots: int = NUM_SLOTS_PADRAO
    limiar_snr_db: float = LIMIAR_SNR_PADRAO_DB
    modulacao: str = "16QAM"
    controle_snr: bool = True
    spm_elevado_jammed: bool = False
    alocacao_ciente_snr: bool = False
    utilizacao_por_enlace: bool = False
    jammers: Tuple[Jammer, ...] = ()
    varredura: ConfigVarredura = field(default_factory=ConfigVarredura)
    sementes: Tuple[int, ...] = SEMENTES_PADRAO
    fisica: ConfigFisica = field(default_factory=ConfigFisica)

    def com_epsilon(self, epsilon_db: float) -> "ConfigCenario":
        """Cópia do cenário com a potência de todos os jammers sobrescrita."""
        jammers = tuple(replace(jammer, epsilon_db=epsilon_db) for jammer in self.jammers)
        return replace(self, jammers=jammers)
