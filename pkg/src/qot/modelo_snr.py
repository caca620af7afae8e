"""
Módulo do modelo de SNR ciente de ataques de jamming.

A interferência não linear (NLI) de cada enlace é decomposta numa parcela
de rede segura, calculada com as PSDs legítimas, e numa parcela de jamming,
que só existe quando algum canal vizinho transmite com potência elevada.
Opcionalmente (spm_elevado) a parcela de jamming inclui também o aumento
da SPM do próprio canal atacado, cuja potência efetiva é G + ε.
Todas as funções são puras: mesmas entradas, mesmo resultado bit a bit.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from src.qot.parametros import (
    CoeficientesDerivados,
    ErroModeloQot,
    ParametrosFisicos,
    db_para_linear,
    linear_para_db,
)

# Configuração de logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanalEspectral:
    """
    Ocupação espectral de um circuito vista como canal no domínio da frequência.

    O centro é medido em unidades de slot (início + largura/2); a frequência
    central só entra no modelo como espaçamento entre canais.
    """

    centro_slot: float
    largura_slots: int
    psd_lancamento: float       # W/Hz
    incremento_jamming: float = 0.0   # W²/Hz²
    id_circuito: int = -1

    def __post_init__(self) -> None:
        if self.largura_slots < 1:
            raise ErroModeloQot(f"Largura do canal deve ser >= 1 slot: {self.largura_slots}")
        if not self.psd_lancamento > 0:
            raise ErroModeloQot(f"PSD de lançamento deve ser positiva: {self.psd_lancamento}")
        if self.incremento_jamming < 0:
            raise ErroModeloQot(f"Incremento de jamming negativo: {self.incremento_jamming}")

    @property
    def jammed(self) -> bool:
        return self.incremento_jamming > 0

    @classmethod
    def de_intervalo(
        cls,
        inicio: int,
        largura: int,
        parametros: ParametrosFisicos,
        epsilon_db: float = 0.0,
        id_circuito: int = -1
    ) -> "CanalEspectral":
        """
        Constrói o canal de um circuito que ocupa os slots [inicio, inicio + largura).

        Args:
            inicio: Primeiro slot ocupado
            largura: Número de slots do circuito
            parametros: Parâmetros físicos (potência e largura do slot)
            epsilon_db: Potência adicional do jammer em dB (0 se não atacado)
            id_circuito: Identificador do circuito dono do canal

        Returns:
            Canal espectral com PSD e incremento de jamming calculados
        """
        banda = largura * parametros.largura_slot
        return cls(
            centro_slot=inicio + largura / 2.0,
            largura_slots=largura,
            psd_lancamento=parametros.potencia_tx / banda,
            incremento_jamming=incremento_jamming(parametros.potencia_tx, epsilon_db, banda),
            id_circuito=id_circuito,
        )


@dataclass(frozen=True)
class EstadoEspectralEnlace:
    """Canais presentes num enlace e o número de vãos N_l do enlace."""

    num_vaos: int
    canais: Tuple[CanalEspectral, ...] = ()

    def __post_init__(self) -> None:
        if self.num_vaos < 1:
            raise ErroModeloQot(f"Enlace deve ter ao menos um vão: {self.num_vaos}")

        # Canais ordenados pelo centro, para somas determinísticas
        ordenados = tuple(sorted(self.canais, key=lambda canal: canal.centro_slot))
        object.__setattr__(self, 'canais', ordenados)

        for anterior, proximo in zip(ordenados, ordenados[1:]):
            folga = proximo.centro_slot - anterior.centro_slot
            if folga < (anterior.largura_slots + proximo.largura_slots) / 2.0:
                raise ErroModeloQot(
                    f"Canais sobrepostos no enlace: centros {anterior.centro_slot} e {proximo.centro_slot}"
                )


def incremento_jamming(potencia_tx: float, epsilon_db: float, banda: float) -> float:
    """
    Calcula o acréscimo na PSD ao quadrado de um canal atacado.

    P_J = P·10^(ε/10) e ε_lin = P_J − P; o retorno é (ε_lin² + 2·ε_lin·P)/Δ²,
    de forma que G² + incremento = (P_J/Δ)².

    Args:
        potencia_tx: Potência legítima do canal em W
        epsilon_db: Potência adicional do jammer em dB
        banda: Largura de banda do canal atacado em Hz

    Returns:
        Incremento em W²/Hz² (zero quando epsilon_db = 0)
    """
    if epsilon_db < 0:
        logger.error(f"Potência de jamming negativa: {epsilon_db} dB")
        raise ErroModeloQot(f"epsilon_db deve ser >= 0: {epsilon_db}")

    potencia_jammed = potencia_tx * db_para_linear(epsilon_db)
    epsilon_linear = potencia_jammed - potencia_tx
    return (epsilon_linear ** 2 + 2.0 * epsilon_linear * potencia_tx) / banda ** 2


def peso_xpm(vitima: CanalEspectral, interferente: CanalEspectral, largura_slot: float) -> float:
    """
    Fator logarítmico da modulação de fase cruzada (XPM) entre dois canais.

    Args:
        vitima: Canal cujo ruído está sendo avaliado
        interferente: Canal que gera a interferência
        largura_slot: Largura de um slot em Hz

    Returns:
        ln((f + Δf'/2)/(f − Δf'/2)), com f o espaçamento entre centros

    Raises:
        ErroModeloQot: Se os canais se sobrepõem ou coincidem
    """
    espacamento = abs(vitima.centro_slot - interferente.centro_slot) * largura_slot
    meia_banda = interferente.largura_slots * largura_slot / 2.0

    if espacamento <= meia_banda:
        raise ErroModeloQot(
            f"Canais sobrepostos: espaçamento {espacamento} Hz <= meia banda {meia_banda} Hz"
        )

    return math.log((espacamento + meia_banda) / (espacamento - meia_banda))


def psd_nli_enlace(
    vitima: CanalEspectral,
    enlace: EstadoEspectralEnlace,
    coeficientes: CoeficientesDerivados,
    parametros: ParametrosFisicos,
    spm_elevado: bool = False
) -> Tuple[float, float]:
    """
    PSD de NLI por vão sofrida pela vítima num enlace, separada em parcela
    segura e parcela de jamming.

    Args:
        vitima: Canal avaliado (deve estar presente no enlace)
        enlace: Estado espectral do enlace
        coeficientes: Coeficientes φ e ρ
        parametros: Parâmetros físicos
        spm_elevado: Soma à parcela de jamming o aumento da auto-modulação
            de fase (SPM) da própria vítima atacada

    Returns:
        Tupla (segura, jamming) em W/Hz, por vão
    """
    if vitima not in enlace.canais:
        raise ErroModeloQot("Canal vítima ausente do enlace")

    psd = vitima.psd_lancamento
    banda = vitima.largura_slots * parametros.largura_slot

    auto = math.asinh(coeficientes.rho * banda ** 2)
    soma_segura = psd ** 2 * auto
    soma_jamming = vitima.incremento_jamming * auto if spm_elevado else 0.0

    for canal in enlace.canais:
        if canal == vitima:
            continue
        peso = peso_xpm(vitima, canal, parametros.largura_slot)
        soma_segura += canal.psd_lancamento ** 2 * peso
        soma_jamming += canal.incremento_jamming * peso

    return coeficientes.phi * psd * soma_segura, coeficientes.phi * psd * soma_jamming


def psd_nli_canais(
    canais: Sequence[CanalEspectral],
    coeficientes: CoeficientesDerivados,
    parametros: ParametrosFisicos,
    spm_elevado: bool = False
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Versão vetorizada de psd_nli_enlace para todos os canais de um enlace.

    Args:
        canais: Canais do enlace, disjuntos dois a dois
        coeficientes: Coeficientes φ e ρ
        parametros: Parâmetros físicos
        spm_elevado: Como em psd_nli_enlace

    Returns:
        Tupla de arrays (segura, jamming) por canal, na ordem de entrada
    """
    quantidade = len(canais)
    if quantidade == 0:
        return np.zeros(0), np.zeros(0)

    centros = np.array([canal.centro_slot for canal in canais], dtype=float)
    larguras = np.array([canal.largura_slots for canal in canais], dtype=float)
    psd = np.array([canal.psd_lancamento for canal in canais], dtype=float)
    incrementos = np.array([canal.incremento_jamming for canal in canais], dtype=float)

    bandas = larguras * parametros.largura_slot
    espacamento = np.abs(centros[:, None] - centros[None, :]) * parametros.largura_slot
    meia_banda = np.broadcast_to(bandas / 2.0, (quantidade, quantidade))
    fora_diagonal = ~np.eye(quantidade, dtype=bool)

    if np.any(espacamento[fora_diagonal] <= meia_banda[fora_diagonal]):
        raise ErroModeloQot("Canais sobrepostos no enlace")

    razao = np.ones((quantidade, quantidade))
    razao[fora_diagonal] = (
        (espacamento[fora_diagonal] + meia_banda[fora_diagonal])
        / (espacamento[fora_diagonal] - meia_banda[fora_diagonal])
    )
    pesos = np.log(razao)

    auto = np.arcsinh(coeficientes.rho * bandas ** 2)
    segura = coeficientes.phi * psd * (psd ** 2 * auto + pesos @ psd ** 2)
    jamming = coeficientes.phi * psd * (pesos @ incrementos)
    if spm_elevado:
        jamming = jamming + coeficientes.phi * psd * incrementos * auto
    return segura, jamming


def snr_rota(
    vitima: CanalEspectral,
    enlaces: Sequence[EstadoEspectralEnlace],
    coeficientes: CoeficientesDerivados,
    parametros: ParametrosFisicos,
    spm_elevado: bool = False
) -> Tuple[float, float]:
    """
    SNR ciente de jamming de um circuito ao longo da sua rota.

    SNR = G / Σ_l N_l·(G_ASE + G_NLI,s + G_J) sobre os enlaces da rota.

    Args:
        vitima: Canal do circuito avaliado
        enlaces: Estados espectrais dos enlaces da rota, todos contendo a vítima
        coeficientes: Coeficientes derivados
        parametros: Parâmetros físicos
        spm_elevado: Como em psd_nli_enlace

    Returns:
        Tupla (snr_linear, snr_db)
    """
    if not enlaces:
        raise ErroModeloQot("Rota vazia")

    ruido = 0.0
    for enlace in enlaces:
        segura, jamming = psd_nli_enlace(vitima, enlace, coeficientes, parametros, spm_elevado)
        ruido += enlace.num_vaos * (coeficientes.psd_ase_por_vao + segura + jamming)

    snr = vitima.psd_lancamento / ruido
    return snr, linear_para_db(snr)
