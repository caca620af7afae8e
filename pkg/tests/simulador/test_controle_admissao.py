"""
Testes para o controle de admissão ciente de jamming.
"""

import pytest

from src.rede.espectro import ErroEstadoEspectro
from src.simulador.controle_admissao import Bloqueado, Estabelecido, MotivoBloqueio, admitir
from src.simulador.modelos import Jammer
from src.simulador.trafego import Requisicao, gerar_trafego


def _requisicao(id_requisicao, taxa=200, origem="A", destino="B"):
    return Requisicao(id_requisicao, origem, destino, taxa, float(id_requisicao), 600.0)


def _jammer_inicio_da_grade(epsilon):
    return (Jammer(enlace=("A", "B"), slot_inicial=0, slot_final=9, epsilon_db=epsilon),)


def test_primeira_requisicao_em_rede_vazia(criar_estado):
    estado = criar_estado()
    resultado = admitir(_requisicao(0), estado)

    assert isinstance(resultado, Estabelecido)
    assert resultado.circuito.intervalo == (0, 4)
    assert not resultado.circuito.jammed
    assert resultado.circuito.snr_admissao_db > 15.0
    assert 0 in estado.circuitos


def test_grade_saturada_bloqueia_por_espectro(criar_estado):
    """Em 10 slots com guarda 2 cabem quatro circuitos de um slot."""
    estado = criar_estado(num_slots=10)
    resultados = [admitir(_requisicao(i, taxa=50), estado) for i in range(5)]

    assert [r.circuito.intervalo for r in resultados[:4]] == [(0, 1), (3, 4), (6, 7), (9, 10)]
    assert resultados[4] == Bloqueado(MotivoBloqueio.SEM_ESPECTRO)


def test_no_desconhecido_bloqueia_por_rota(criar_estado):
    estado = criar_estado()
    assert admitir(_requisicao(0, destino="Z"), estado) == Bloqueado(MotivoBloqueio.SEM_ROTA)


def test_circuitos_atacados_adjacentes_bloqueados(criar_estado):
    """Dois circuitos de 200 Gb/s atacados a 5 dB lado a lado num enlace de 600 km."""
    estado = criar_estado(comprimento_km=600.0, jammers=_jammer_inicio_da_grade(5.0))

    primeiro = admitir(_requisicao(0), estado)
    assert isinstance(primeiro, Estabelecido)
    assert primeiro.circuito.jammed and primeiro.circuito.epsilon_db == 5.0

    segundo = admitir(_requisicao(1), estado)
    assert isinstance(segundo, Bloqueado)
    assert segundo.motivo in (MotivoBloqueio.SNR_CANDIDATO, MotivoBloqueio.SNR_VIZINHO)


def test_mesmos_circuitos_sem_jamming_estabelecidos(criar_estado):
    estado = criar_estado(comprimento_km=600.0, jammers=_jammer_inicio_da_grade(0.0))
    assert isinstance(admitir(_requisicao(0), estado), Estabelecido)
    segundo = admitir(_requisicao(1), estado)
    assert isinstance(segundo, Estabelecido)
    assert segundo.circuito.intervalo == (6, 10)


def test_bloqueio_preserva_estado(criar_estado):
    """Um bloqueio por SNR deixa o estado idêntico ao anterior."""
    estado = criar_estado(comprimento_km=600.0, jammers=_jammer_inicio_da_grade(5.0))
    admitir(_requisicao(0), estado)
    antes = estado.assinatura()

    assert isinstance(admitir(_requisicao(1), estado), Bloqueado)
    assert estado.assinatura() == antes
    estado.validar()


def test_admissao_mantem_todos_acima_do_limiar(criar_estado):
    """Após cada estabelecimento todos os circuitos vizinhos continuam acima do limiar."""
    jammers = (Jammer(enlace=("A", "B"), slot_inicial=40, slot_final=59, epsilon_db=3.0),)
    estado = criar_estado(comprimento_km=400.0, jammers=jammers)
    requisicoes = gerar_trafego(120, 600, [("A", "B")], (50, 100, 200), 150, semente=8)

    estabelecidos = 0
    for requisicao in requisicoes:
        resultado = admitir(requisicao, estado)
        if isinstance(resultado, Estabelecido):
            estabelecidos += 1
            for id_circuito, circuito in estado.circuitos.items():
                assert estado.snr_circuito(id_circuito, circuito.rota, circuito.canal) >= estado.limiar_snr

    assert estabelecidos > 0
    estado.validar()


def test_sem_controle_de_snr_admite_por_espectro(criar_estado):
    estado = criar_estado(comprimento_km=600.0, jammers=_jammer_inicio_da_grade(5.0), controle_snr=False)
    assert isinstance(admitir(_requisicao(0), estado), Estabelecido)
    segundo = admitir(_requisicao(1), estado)
    assert isinstance(segundo, Estabelecido)
    assert segundo.circuito.snr_admissao_db is None


def test_encerrar_devolve_grade_livre(criar_estado):
    estado = criar_estado()
    circuito = admitir(_requisicao(0), estado).circuito
    estado.encerrar(circuito.id)

    assert estado.topologia.grades_livres()
    assert estado.circuitos == {}
    with pytest.raises(ErroEstadoEspectro):
        estado.encerrar(circuito.id)


class TestAlocacaoCienteSnr:
    """Enlace de 300 km (3 vãos) com jammer de 5 dB nos slots 0-9."""

    @pytest.fixture
    def estado_calibrado(self, criar_estado):
        def fabricar(**opcoes):
            return criar_estado(comprimento_km=300.0, jammers=_jammer_inicio_da_grade(5.0), **opcoes)
        return fabricar

    def test_spm_elevada_reprova_circuito_atacado_em_enlace_vazio(self, estado_calibrado):
        estado = estado_calibrado(spm_elevado_jammed=True)
        assert admitir(_requisicao(0), estado) == Bloqueado(MotivoBloqueio.SNR_CANDIDATO)
        assert estado.topologia.grades_livres()

    def test_sem_spm_elevada_circuito_atacado_isolado_admitido(self, estado_calibrado):
        resultado = admitir(_requisicao(0), estado_calibrado(alocacao_ciente_snr=True))
        assert resultado.circuito.intervalo == (0, 4)
        assert resultado.circuito.jammed

    def test_pula_para_o_primeiro_inicio_fora_da_faixa(self, estado_calibrado):
        estado = estado_calibrado(spm_elevado_jammed=True, alocacao_ciente_snr=True)
        resultado = admitir(_requisicao(0), estado)

        assert isinstance(resultado, Estabelecido)
        assert resultado.circuito.intervalo == (10, 14)
        assert not resultado.circuito.jammed
        assert resultado.circuito.snr_admissao_db > 15.0
        estado.validar()

    def test_todos_os_candidatos_reprovados(self, criar_estado):
        estado = criar_estado(
            comprimento_km=300.0,
            num_slots=10,
            jammers=_jammer_inicio_da_grade(5.0),
            spm_elevado_jammed=True,
            alocacao_ciente_snr=True,
        )
        antes = estado.assinatura()

        assert admitir(_requisicao(0), estado) == Bloqueado(MotivoBloqueio.SNR_CANDIDATO)
        assert estado.assinatura() == antes
        estado.validar()

    def test_igual_ao_first_fit_quando_o_primeiro_passa(self, criar_estado):
        requisicoes = gerar_trafego(60, 600, [("A", "B"), ("B", "A")], (50, 100, 200), 80, semente=4)
        simples, ciente = criar_estado(), criar_estado(alocacao_ciente_snr=True)

        for requisicao in requisicoes:
            a, b = admitir(requisicao, simples), admitir(requisicao, ciente)
            assert type(a) is type(b)
            if isinstance(a, Estabelecido):
                assert a.circuito.intervalo == b.circuito.intervalo
