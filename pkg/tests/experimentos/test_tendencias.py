"""
Testes para a análise de tendências da varredura de ε.
"""

import json
import os
from dataclasses import replace

import numpy as np
import pytest

from src.config.carregador_config import CarregadorConfig
from src.config.cenario import ConfigVarredura
from src.experimentos.tendencias import analisar_tendencias, comparar_multiplos_jammers
from src.experimentos.varredura import ResultadoVarredura, executar_varredura
from src.simulador.modelos import MetricasAgregadas
from src.simulador.simulador import executar

DIRETORIO_CONFIG = os.path.join(os.path.dirname(__file__), "..", "..", "config")
EPSILONS = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0]

# Curvas com o formato esperado sob ataque
BLOQUEIO_COM_PICO = [0.05, 0.08, 0.12, 0.18, 0.20, 0.15, 0.10, 0.08, 0.07, 0.06, 0.06]
FAIXA_DESLIGADA = [0.9, 0.9, 0.85, 0.8, 0.6, 0.4, 0.2, 0.1, 0.05, 0.02, 0.01]
VIZINHANCA_EM_VALE = [0.8, 0.7, 0.6, 0.5, 0.45, 0.5, 0.6, 0.7, 0.75, 0.78, 0.8]

# Curvas planas, como as do enlace de 100 km sem as opções do modelo
BLOQUEIO_PLANO = [0.0302] * 8 + [0.0307, 0.035, 0.0394]
FAIXA_PLANA = [0.937] * 11


def _resultado_sintetico(config, bloqueio, faixa, vizinhanca):
    agregados = {}
    for epsilon, b, u_faixa, u_vizinhanca in zip(EPSILONS, bloqueio, faixa, vizinhanca):
        curva = np.zeros(config.num_slots)
        curva[130:160] = u_vizinhanca
        curva[140:150] = u_faixa
        por_enlace = {("A", "B"): curva, ("B", "A"): curva}
        agregados[epsilon] = MetricasAgregadas(
            sementes=(1,),
            media_bloqueio=b,
            desvio_bloqueio=0.0,
            media_utilizacao_rede=curva,
            desvio_utilizacao_rede=np.zeros_like(curva),
            media_utilizacao_por_enlace=por_enlace,
            desvio_utilizacao_por_enlace={chave: np.zeros_like(curva) for chave in por_enlace},
            media_geradas=1000.0,
            media_bloqueadas=1000.0 * b,
            desvio_bloqueadas=0.0,
        )
    return ResultadoVarredura(config=config, registros=[], agregados=agregados)


class TestAnalisarTendencias:
    def test_formato_esperado_sob_ataque(self, config_enlace_unico):
        resultado = _resultado_sintetico(config_enlace_unico, BLOQUEIO_COM_PICO, FAIXA_DESLIGADA, VIZINHANCA_EM_VALE)
        tendencias = analisar_tendencias(resultado)

        assert tendencias.faixa == (140, 149)
        assert tendencias.epsilon_pico == 2.0
        assert tendencias.razao_pico_base == pytest.approx(4.0)
        assert tendencias.utilizacao_faixa == pytest.approx(tuple(FAIXA_DESLIGADA))
        assert tendencias.utilizacao_vizinhanca == pytest.approx(tuple(VIZINHANCA_EM_VALE))
        assert tendencias.pico_interior
        assert tendencias.desligamento_faixa
        assert tendencias.minimo_vizinhanca_intermediario

    def test_curvas_planas(self, config_enlace_unico):
        resultado = _resultado_sintetico(config_enlace_unico, BLOQUEIO_PLANO, FAIXA_PLANA, FAIXA_PLANA)
        tendencias = analisar_tendencias(resultado)

        assert tendencias.epsilon_pico == 5.0
        assert not tendencias.pico_interior
        assert not tendencias.desligamento_faixa
        assert not tendencias.minimo_vizinhanca_intermediario

    def test_pico_sem_queda_posterior(self, config_enlace_unico):
        bloqueio = [0.05, 0.08, 0.12, 0.18, 0.20, 0.19, 0.19, 0.18, 0.18, 0.18, 0.18]
        resultado = _resultado_sintetico(config_enlace_unico, bloqueio, FAIXA_DESLIGADA, VIZINHANCA_EM_VALE)
        assert not analisar_tendencias(resultado).pico_interior

    def test_queda_da_faixa_nao_estrita(self, config_enlace_unico):
        faixa = FAIXA_DESLIGADA[:6] + [0.2, 0.2] + FAIXA_DESLIGADA[8:]
        resultado = _resultado_sintetico(config_enlace_unico, BLOQUEIO_COM_PICO, faixa, VIZINHANCA_EM_VALE)
        assert not analisar_tendencias(resultado).desligamento_faixa

    def test_sem_jammers(self, config_enlace_unico):
        config = replace(config_enlace_unico, jammers=())
        resultado = _resultado_sintetico(config, BLOQUEIO_PLANO, FAIXA_PLANA, FAIXA_PLANA)
        assert analisar_tendencias(resultado) is None

    def test_sem_bloqueio_base(self, config_enlace_unico):
        bloqueio = [0.0] + BLOQUEIO_COM_PICO[1:]
        resultado = _resultado_sintetico(config_enlace_unico, bloqueio, FAIXA_DESLIGADA, VIZINHANCA_EM_VALE)
        tendencias = analisar_tendencias(resultado)

        assert tendencias.razao_pico_base is None
        assert json.loads(json.dumps(tendencias.para_dict()))["faixa"] == [140, 149]


def test_comparar_multiplos_jammers(config_enlace_unico):
    unico = analisar_tendencias(
        _resultado_sintetico(config_enlace_unico, BLOQUEIO_COM_PICO, FAIXA_DESLIGADA, VIZINHANCA_EM_VALE)
    )
    mais_alto = [b * 1.5 for b in BLOQUEIO_COM_PICO[:3]] + [0.32] + [b * 1.5 for b in BLOQUEIO_COM_PICO[4:]]
    multiplos = analisar_tendencias(
        _resultado_sintetico(config_enlace_unico, mais_alto, FAIXA_DESLIGADA, VIZINHANCA_EM_VALE)
    )

    comparacao = comparar_multiplos_jammers(unico, multiplos)
    assert comparacao.pico_maior
    assert comparacao.pico_deslocado
    assert comparacao.epsilon_pico_multiplos == 1.5


def _cenario(nome, **alteracoes):
    config = CarregadorConfig(os.path.join(DIRETORIO_CONFIG, nome)).obter_config()
    return replace(config, num_requisicoes=10000, utilizacao_por_enlace=False, **alteracoes)


def _uso_da_faixa(metricas):
    return metricas.utilizacao_por_enlace[("A", "B")][140:150].mean()


def test_enlace_de_referencia_sem_pico():
    """
    No enlace de 100 km sem as opções do modelo, o ataque até 3 dB não muda o
    bloqueio e a faixa atacada continua ocupada a 4 dB.
    """
    config = _cenario("config.yaml", sementes=(1, 2, 3), varredura=ConfigVarredura(0.0, 5.0, 1.0))
    tendencias = analisar_tendencias(executar_varredura(config))

    base = tendencias.bloqueio[0]
    assert 0.02 < base < 0.05
    for epsilon, bloqueio in zip(tendencias.valores_epsilon, tendencias.bloqueio):
        if epsilon <= 3.0:
            assert bloqueio == pytest.approx(base, abs=0.005)
    assert tendencias.utilizacao_faixa[4] > 0.5
    assert not tendencias.pico_interior
    assert not tendencias.desligamento_faixa


def test_enlace_calibrado_evita_faixa_atacada():
    """
    Em 3 vãos com SPM elevada, um circuito atacado a 5 dB fica abaixo do
    limiar mesmo com o enlace vazio: a alocação ciente de SNR nunca o
    estabelece e na faixa sobram apenas guardas de vizinhos (no máximo 4 de 10).
    """
    config = _cenario("enlace_unico_calibrado.yaml")

    sem_ataque = executar(config.com_epsilon(0.0), 1)
    ataque_leve = executar(config.com_epsilon(0.5), 1)
    ataque_forte = executar(config.com_epsilon(5.0), 1)

    assert sem_ataque.circuitos_jammed == 0
    assert ataque_leve.circuitos_jammed > 0
    assert ataque_forte.circuitos_jammed == 0
    assert _uso_da_faixa(ataque_forte) <= 0.4
    assert _uso_da_faixa(ataque_forte) < _uso_da_faixa(sem_ataque)
