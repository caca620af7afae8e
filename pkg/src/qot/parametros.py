"""
Módulo de parâmetros físicos da camada óptica.
Reúne as constantes de fibra e amplificador e os coeficientes derivados
usados pelo modelo de ruído gaussiano (GN).
"""

import logging
import math
from dataclasses import dataclass, fields

from scipy.constants import h as CONSTANTE_PLANCK

# Configuração de logging
logger = logging.getLogger(__name__)


class ErroModeloQot(ValueError):
    """Violação das premissas do modelo de QoT (entradas fora do domínio)."""


def db_para_linear(valor_db: float) -> float:
    """
    Converte um valor em dB para razão linear.

    Args:
        valor_db: Valor em decibéis

    Returns:
        Razão linear 10^(valor_db/10)
    """
    return 10.0 ** (valor_db / 10.0)


def linear_para_db(valor_linear: float) -> float:
    """
    Converte uma razão linear para dB.

    Args:
        valor_linear: Razão linear estritamente positiva

    Returns:
        Valor em decibéis
    """
    if valor_linear <= 0:
        raise ErroModeloQot(f"Razão linear deve ser positiva: {valor_linear}")
    return 10.0 * math.log10(valor_linear)


@dataclass(frozen=True)
class ParametrosFisicos:
    """
    Constantes físicas do enlace em unidades de trabalho.

    Os valores padrão correspondem à tabela de parâmetros de referência:
    0 dBm de potência de lançamento, slots de 12,5 GHz, 0,2 dB/km,
    vãos de 100 km, γ = 1,22 1/(W·km), |β₂| = 16 ps²/km,
    ν = 1,93e14 Hz e figura de ruído de 6 dB.
    """

    potencia_tx: float = 1e-3                # W
    largura_slot: float = 12.5e9             # Hz
    atenuacao_db_por_km: float = 0.2         # dB/km
    comprimento_vao_km: float = 100.0        # km
    gamma: float = 1.22                      # 1/(W·km)
    beta2_ps2_por_km: float = 16.0           # ps²/km
    frequencia_luz: float = 1.93e14          # Hz
    figura_ruido_db: float = 6.0             # dB
    planck: float = CONSTANTE_PLANCK         # J·s

    def __post_init__(self) -> None:
        for campo in fields(self):
            valor = getattr(self, campo.name)
            if not valor > 0:
                logger.error(f"Parâmetro físico não positivo: {campo.name}={valor}")
                raise ErroModeloQot(f"Parâmetro físico deve ser positivo: {campo.name}={valor}")

    @property
    def atenuacao_linear_por_km(self) -> float:
        """Atenuação de potência α em 1/km (conversão de dB/km)."""
        return self.atenuacao_db_por_km * math.log(10.0) / 10.0

    @property
    def beta2_s2_por_km(self) -> float:
        """|β₂| em s²/km, coerente com γ em 1/(W·km)."""
        return self.beta2_ps2_por_km * 1e-24

    @property
    def perda_vao(self) -> float:
        """Perda linear de um vão, e^(α·L)."""
        return math.exp(self.atenuacao_linear_por_km * self.comprimento_vao_km)


@dataclass(frozen=True)
class CoeficientesDerivados:
    """Coeficientes φ, ρ e PSD de ASE por vão derivados dos parâmetros físicos."""

    phi: float                # 1/(W²·s²)
    rho: float                # s²
    psd_ase_por_vao: float    # W/Hz


def derivar_coeficientes(parametros: ParametrosFisicos) -> CoeficientesDerivados:
    """
    Calcula os coeficientes do modelo GN a partir dos parâmetros físicos.

    φ = 3γ²/(2π·α·|β₂|) e ρ = π²|β₂|/(2α), com α em 1/km, |β₂| em s²/km e
    γ em 1/(W·km), de modo que os quilômetros se cancelam. A PSD de ASE por
    vão é (e^(αL) − 1)·F·h·ν.

    Args:
        parametros: Parâmetros físicos validados

    Returns:
        Coeficientes derivados
    """
    alfa = parametros.atenuacao_linear_por_km
    beta2 = parametros.beta2_s2_por_km

    phi = 3.0 * parametros.gamma ** 2 / (2.0 * math.pi * alfa * beta2)
    rho = math.pi ** 2 * beta2 / (2.0 * alfa)

    if parametros.perda_vao <= 1.0:
        raise ErroModeloQot(f"Perda do vão deve ser maior que 1: {parametros.perda_vao}")

    figura_ruido = db_para_linear(parametros.figura_ruido_db)
    psd_ase = (parametros.perda_vao - 1.0) * figura_ruido * parametros.planck * parametros.frequencia_luz

    return CoeficientesDerivados(phi=phi, rho=rho, psd_ase_por_vao=psd_ase)
