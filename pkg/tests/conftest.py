"""
Fixtures compartilhadas pelos testes do simulador.
"""

import pytest

from src.config.cenario import ConfigCenario, ConfigTopologia, ConfigVarredura
from src.qot.parametros import ParametrosFisicos, derivar_coeficientes
from src.rede.topologia import Topologia
from src.simulador.estado_rede import EstadoRede
from src.simulador.modelos import Jammer


def _criar_estado(comprimento_km=100.0, jammers=(), num_slots=320, controle_snr=True, **opcoes):
    """Estado de uma rede A-B com um único enlace bidirecional."""
    parametros = ParametrosFisicos()
    topologia = Topologia(["A", "B"], [("A", "B", comprimento_km)], num_slots=num_slots)
    return EstadoRede(
        topologia=topologia,
        parametros=parametros,
        coeficientes=derivar_coeficientes(parametros),
        jammers=jammers,
        controle_snr=controle_snr,
        **opcoes,
    )


@pytest.fixture
def config_enlace_unico():
    """Cenário pequeno de enlace único com jammer nos slots 140-149."""
    return ConfigCenario(
        topologia=ConfigTopologia(nos=("A", "B"), enlaces=(("A", "B", 100.0),)),
        nome="teste",
        num_requisicoes=2000,
        jammers=(Jammer(enlace=("A", "B"), slot_inicial=140, slot_final=149),),
        varredura=ConfigVarredura(inicio_db=0.0, fim_db=1.0, passo_db=0.5),
        sementes=(1, 2),
    )


@pytest.fixture
def criar_estado():
    """Fábrica de estados de rede de enlace único."""
    return _criar_estado
