"""Pacote do modelo de qualidade de transmissão (QoT) ciente de jamming."""

from src.qot.parametros import (
    CoeficientesDerivados,
    ErroModeloQot,
    ParametrosFisicos,
    db_para_linear,
    derivar_coeficientes,
    linear_para_db,
)
from src.qot.modelo_snr import (
    CanalEspectral,
    EstadoEspectralEnlace,
    incremento_jamming,
    peso_xpm,
    psd_nli_canais,
    psd_nli_enlace,
    snr_rota,
)

__all__ = [
    "CanalEspectral",
    "CoeficientesDerivados",
    "ErroModeloQot",
    "EstadoEspectralEnlace",
    "ParametrosFisicos",
    "db_para_linear",
    "derivar_coeficientes",
    "incremento_jamming",
    "linear_para_db",
    "peso_xpm",
    "psd_nli_canais",
    "psd_nli_enlace",
    "snr_rota",
]
