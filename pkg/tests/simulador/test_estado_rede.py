"""
Testes para o estado da rede e o cache de ruído por enlace.
"""

import pytest

from src.qot.modelo_snr import snr_rota
from src.qot.parametros import ParametrosFisicos, derivar_coeficientes
from src.rede.topologia import Topologia
from src.simulador.controle_admissao import Estabelecido, admitir
from src.simulador.estado_rede import EstadoRede
from src.simulador.modelos import Jammer
from src.simulador.trafego import gerar_trafego


def _estado_povoado(spm_elevado_jammed):
    """Linha A-B-C com jammer em A-B e 150 pedidos admitidos sem partidas."""
    parametros = ParametrosFisicos()
    topologia = Topologia(["A", "B", "C"], [("A", "B", 200.0), ("B", "C", 300.0)])
    estado = EstadoRede(
        topologia=topologia,
        parametros=parametros,
        coeficientes=derivar_coeficientes(parametros),
        jammers=(Jammer(enlace=("A", "B"), slot_inicial=20, slot_final=39, epsilon_db=2.0),),
        controle_snr=False,
        spm_elevado_jammed=spm_elevado_jammed,
    )
    requisicoes = gerar_trafego(150, 600, topologia.pares_nos(), (50, 100, 200), 150, semente=5)
    for requisicao in requisicoes:
        admitir(requisicao, estado)
    return estado


@pytest.mark.parametrize("spm_elevado_jammed", [False, True])
def test_cache_de_ruido_igual_a_snr_rota(spm_elevado_jammed):
    """A SNR via cache por enlace coincide com snr_rota sobre os estados espectrais."""
    estado = _estado_povoado(spm_elevado_jammed)

    assert len(estado.circuitos) > 20
    assert any(circuito.jammed for circuito in estado.circuitos.values())
    assert any(len(circuito.rota.enlaces) == 2 for circuito in estado.circuitos.values())

    for id_circuito, circuito in estado.circuitos.items():
        enlaces = [estado.estado_espectral(id_enlace) for id_enlace in circuito.rota.enlaces]
        esperado, _ = snr_rota(circuito.canal, enlaces, estado.coeficientes, estado.parametros, spm_elevado_jammed)
        assert estado.snr_circuito(id_circuito, circuito.rota, circuito.canal) == pytest.approx(esperado, rel=1e-12)


def test_estado_espectral_acompanha_partidas(criar_estado):
    estado = criar_estado()
    requisicoes = gerar_trafego(50, 600, [("A", "B")], (50, 100), 10, semente=1)
    circuitos = [admitir(requisicao, estado) for requisicao in requisicoes]
    assert all(isinstance(resultado, Estabelecido) for resultado in circuitos)

    removido = circuitos[3].circuito
    estado.encerrar(removido.id)

    canais = estado.estado_espectral(("A", "B")).canais
    assert removido.canal not in canais
    assert len(canais) == 9
    assert [canal.centro_slot for canal in canais] == sorted(canal.centro_slot for canal in canais)
    assert estado.estado_espectral(("B", "A")).canais == ()
