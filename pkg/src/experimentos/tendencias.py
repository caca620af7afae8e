"""
Módulo de análise das tendências de uma varredura de ε.

Resume, por ε, o bloqueio médio e a utilização média da faixa atacada e
das faixas vizinhas, e verifica os formatos de curva esperados sob ataque:
pico interior de bloqueio seguido de queda, desligamento da faixa atacada
e mínimo intermediário da utilização nas vizinhanças.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from src.experimentos.varredura import ResultadoVarredura
from src.simulador.modelos import Jammer

# Configuração de logging
logger = logging.getLogger(__name__)

LARGURA_VIZINHANCA = 10          # slots de cada lado da faixa atacada
PICO_MIN_DB = 1.0
PICO_MAX_DB = 2.5
RAZAO_PICO_MINIMA = 2.0          # pico >= 2x o bloqueio sem ataque
FRACAO_DECAIMENTO = 0.6          # bloqueio para ε >= ε* + 1 dB
EPSILON_DESLIGAMENTO_DB = 4.0
FRACAO_DESLIGAMENTO = 0.1
EPSILON_INICIO_QUEDA_DB = 2.0


@dataclass(frozen=True)
class TendenciasVarredura:
    """Curvas resumidas de uma varredura e os formatos verificados sobre elas."""

    faixa: Tuple[int, int]
    valores_epsilon: Tuple[float, ...]
    bloqueio: Tuple[float, ...]
    utilizacao_faixa: Tuple[float, ...]
    utilizacao_vizinhanca: Tuple[float, ...]
    epsilon_pico: float
    bloqueio_pico: float
    razao_pico_base: Optional[float]   # None se não há bloqueio sem ataque
    pico_interior: bool
    desligamento_faixa: bool
    minimo_vizinhanca_intermediario: bool

    def para_dict(self) -> Dict[str, Any]:
        dados = asdict(self)
        for chave, valor in dados.items():
            if isinstance(valor, tuple):
                dados[chave] = list(valor)
        return dados


@dataclass(frozen=True)
class ComparacaoJammers:
    """Pico de bloqueio com uma faixa atacada contra várias."""

    epsilon_pico_unico: float
    bloqueio_pico_unico: float
    epsilon_pico_multiplos: float
    bloqueio_pico_multiplos: float

    @property
    def pico_maior(self) -> bool:
        return self.bloqueio_pico_multiplos > self.bloqueio_pico_unico

    @property
    def pico_deslocado(self) -> bool:
        return self.epsilon_pico_multiplos != self.epsilon_pico_unico


def _indice(valores: Sequence[float], alvo: float) -> Optional[int]:
    for indice, valor in enumerate(valores):
        if abs(valor - alvo) < 1e-9:
            return indice
    return None


def _pico_interior(epsilons: np.ndarray, bloqueio: np.ndarray) -> bool:
    pico = int(np.argmax(bloqueio))
    base = bloqueio[0]
    if not PICO_MIN_DB <= epsilons[pico] <= PICO_MAX_DB:
        return False
    if bloqueio[pico] <= base or bloqueio[pico] < RAZAO_PICO_MINIMA * base:
        return False

    apos = epsilons >= epsilons[pico] + 1.0 - 1e-9
    if not apos.any():
        return False
    return bool(np.all(bloqueio[apos] < FRACAO_DECAIMENTO * bloqueio[pico]))


def _desligamento(epsilons: np.ndarray, utilizacao: np.ndarray) -> bool:
    zero = _indice(epsilons, 0.0)
    alvo = _indice(epsilons, EPSILON_DESLIGAMENTO_DB)
    if zero is None or alvo is None:
        return False
    if not utilizacao[alvo] < FRACAO_DESLIGAMENTO * utilizacao[zero]:
        return False

    queda = utilizacao[epsilons >= EPSILON_INICIO_QUEDA_DB - 1e-9]
    return bool(np.all(np.diff(queda) < 0))


def _minimo_intermediario(utilizacao: np.ndarray) -> bool:
    minimo = int(np.argmin(utilizacao))
    return 0 < minimo < utilizacao.size - 1


def analisar_tendencias(
    resultado: ResultadoVarredura, jammer: Optional[Jammer] = None
) -> Optional[TendenciasVarredura]:
    """
    Resume a varredura em torno da faixa de um jammer.

    Args:
        resultado: Resultado da varredura
        jammer: Jammer de referência (padrão: o primeiro do cenário)

    Returns:
        Tendências da varredura, ou None se o cenário não tiver jammers
    """
    if jammer is None:
        if not resultado.config.jammers:
            logger.debug("Cenário sem jammers: nenhuma tendência a analisar")
            return None
        jammer = resultado.config.jammers[0]

    num_slots = resultado.config.num_slots
    faixa = np.zeros(num_slots, dtype=bool)
    faixa[jammer.slot_inicial:jammer.slot_final + 1] = True
    vizinhanca = np.zeros(num_slots, dtype=bool)
    vizinhanca[max(0, jammer.slot_inicial - LARGURA_VIZINHANCA):jammer.slot_final + 1 + LARGURA_VIZINHANCA] = True
    vizinhanca &= ~faixa

    epsilons = np.array(resultado.valores_epsilon, dtype=float)
    bloqueio = np.array([resultado.agregados[e].media_bloqueio for e in resultado.valores_epsilon])
    curvas = [resultado.agregados[e].media_utilizacao_por_enlace[jammer.enlace] for e in resultado.valores_epsilon]
    utilizacao_faixa = np.array([curva[faixa].mean() for curva in curvas])
    utilizacao_vizinhanca = np.array([curva[vizinhanca].mean() for curva in curvas])

    pico = int(np.argmax(bloqueio))
    razao = float(bloqueio[pico] / bloqueio[0]) if bloqueio[0] > 0 else None

    tendencias = TendenciasVarredura(
        faixa=(jammer.slot_inicial, jammer.slot_final),
        valores_epsilon=tuple(float(e) for e in epsilons),
        bloqueio=tuple(float(b) for b in bloqueio),
        utilizacao_faixa=tuple(float(u) for u in utilizacao_faixa),
        utilizacao_vizinhanca=tuple(float(u) for u in utilizacao_vizinhanca),
        epsilon_pico=float(epsilons[pico]),
        bloqueio_pico=float(bloqueio[pico]),
        razao_pico_base=razao,
        pico_interior=_pico_interior(epsilons, bloqueio),
        desligamento_faixa=_desligamento(epsilons, utilizacao_faixa),
        minimo_vizinhanca_intermediario=_minimo_intermediario(utilizacao_vizinhanca),
    )

    logger.info(
        f"Tendências de '{resultado.config.nome}' na faixa {tendencias.faixa}: pico de bloqueio "
        f"{tendencias.bloqueio_pico:.4f} em {tendencias.epsilon_pico} dB (razão {razao} sobre o valor sem ataque); "
        f"pico interior={tendencias.pico_interior}, desligamento={tendencias.desligamento_faixa}, "
        f"mínimo nas vizinhanças={tendencias.minimo_vizinhanca_intermediario}"
    )
    return tendencias


def comparar_multiplos_jammers(unico: TendenciasVarredura, multiplos: TendenciasVarredura) -> ComparacaoJammers:
    """Compara os picos de bloqueio de um cenário com um jammer e outro com vários."""
    comparacao = ComparacaoJammers(
        epsilon_pico_unico=unico.epsilon_pico,
        bloqueio_pico_unico=unico.bloqueio_pico,
        epsilon_pico_multiplos=multiplos.epsilon_pico,
        bloqueio_pico_multiplos=multiplos.bloqueio_pico,
    )
    logger.info(
        f"Pico com um jammer {unico.bloqueio_pico:.4f} em {unico.epsilon_pico} dB; "
        f"com vários {multiplos.bloqueio_pico:.4f} em {multiplos.epsilon_pico} dB"
    )
    return comparacao
