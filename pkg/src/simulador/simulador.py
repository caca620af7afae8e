"""
Módulo do laço de eventos discretos.

Processa chegadas e partidas em ordem de tempo (partidas antes de chegadas
no mesmo instante, depois pelo id do evento), mede a ocupação de slots
a cada chegada e aplica o controle de admissão.
"""

import heapq
import logging
from collections import Counter
from typing import List, Optional, Tuple

import numpy as np

from src.config.cenario import ConfigCenario
from src.qot.parametros import derivar_coeficientes
from src.rede.espectro import slots_necessarios
from src.rede.topologia import carregar_topologia
from src.simulador.controle_admissao import Estabelecido, admitir
from src.simulador.estado_rede import EstadoRede
from src.simulador.modelos import Metricas
from src.simulador.trafego import gerar_trafego

# Configuração de logging
logger = logging.getLogger(__name__)

PARTIDA = 0
CHEGADA = 1


class FilaEventos:
    """Fila de prioridade de eventos ordenada por (tempo, tipo, id)."""

    def __init__(self):
        self._heap: List[Tuple[float, int, int]] = []

    def __len__(self) -> int:
        return len(self._heap)

    def agendar(self, tempo: float, tipo: int, id_evento: int) -> None:
        heapq.heappush(self._heap, (tempo, tipo, id_evento))

    def proximo(self) -> Tuple[float, int, int]:
        return heapq.heappop(self._heap)


class Simulador:
    """
    Executa um cenário para uma semente.

    A configuração é validada na construção, antes de qualquer evento. Após
    executar(), `estado` guarda o estado final da rede.
    """

    def __init__(self, config: ConfigCenario):
        """
        Inicializa o simulador com o cenário.

        Args:
            config: Cenário validado
        """
        self.config = config
        self.estado: Optional[EstadoRede] = None
        self._validar_config()

    def _validar_config(self) -> None:
        """Verificações que dependem de mais de uma seção do cenário."""
        config = self.config
        for taxa in config.taxas_gbps:
            largura = slots_necessarios(taxa)
            if largura > config.num_slots:
                raise ValueError(f"Taxa {taxa} Gb/s exige {largura} slots, grade tem {config.num_slots}")

        pares = {frozenset((origem, destino)) for origem, destino, _ in config.topologia.enlaces}
        for jammer in config.jammers:
            if frozenset(jammer.enlace) not in pares:
                raise ValueError(f"Jammer em enlace inexistente: {jammer.enlace}")
            if jammer.slot_final >= config.num_slots:
                raise ValueError(f"Faixa do jammer fora da grade: {jammer.slot_inicial}-{jammer.slot_final}")

    def _criar_estado(self) -> EstadoRede:
        config = self.config
        parametros = config.fisica.para_parametros()
        topologia = carregar_topologia(
            config.topologia.nos,
            config.topologia.enlaces,
            parametros.comprimento_vao_km,
            config.num_slots,
        )
        return EstadoRede(
            topologia=topologia,
            parametros=parametros,
            coeficientes=derivar_coeficientes(parametros),
            jammers=config.jammers,
            slots_guarda=config.slots_guarda,
            limiar_snr_db=config.limiar_snr_db,
            controle_snr=config.controle_snr,
            spm_elevado_jammed=config.spm_elevado_jammed,
            alocacao_ciente_snr=config.alocacao_ciente_snr,
        )

    def executar(self, semente: int) -> Metricas:
        """
        Executa a simulação completa para uma semente.

        Args:
            semente: Semente do gerador de tráfego

        Returns:
            Métricas da execução
        """
        config = self.config
        estado = self.estado = self._criar_estado()
        requisicoes = gerar_trafego(
            config.carga_erlang,
            config.tempo_medio_permanencia_s,
            estado.topologia.pares_nos(),
            config.taxas_gbps,
            config.num_requisicoes,
            semente,
        )

        fila = FilaEventos()
        for requisicao in requisicoes:
            fila.agendar(requisicao.tempo_chegada, CHEGADA, requisicao.id)

        ids_enlaces = list(estado.topologia.enlaces)
        contagem_ocupacao = np.zeros((len(ids_enlaces), config.num_slots), dtype=np.int64)
        bloqueios: Counter = Counter()
        estabelecidos = finalizados = jammed = 0
        soma_ativos = 0

        while fila:
            _, tipo, id_evento = fila.proximo()

            if tipo == PARTIDA:
                estado.encerrar(id_evento)
                finalizados += 1
                continue

            contagem_ocupacao += estado.ocupacao_enlaces()
            soma_ativos += len(estado.circuitos)

            resultado = admitir(requisicoes[id_evento], estado)
            if isinstance(resultado, Estabelecido):
                circuito = resultado.circuito
                estabelecidos += 1
                jammed += int(circuito.jammed)
                fila.agendar(circuito.tempo_partida, PARTIDA, circuito.id)
            else:
                bloqueios[resultado.motivo.value] += 1

        geradas = len(requisicoes)
        utilizacao = contagem_ocupacao / geradas
        metricas = Metricas(
            geradas=geradas,
            bloqueadas=sum(bloqueios.values()),
            utilizacao_por_enlace={id_enlace: utilizacao[i] for i, id_enlace in enumerate(ids_enlaces)},
            utilizacao_rede=utilizacao.mean(axis=0),
            bloqueios_por_motivo=dict(sorted(bloqueios.items())),
            estabelecidos=estabelecidos,
            finalizados=finalizados,
            ativos_ao_final=len(estado.circuitos),
            circuitos_jammed=jammed,
            media_circuitos_ativos=soma_ativos / geradas,
        )

        logger.info(
            f"Cenário '{config.nome}' semente {semente}: bloqueio {metricas.probabilidade_bloqueio:.4f} "
            f"({metricas.bloqueadas}/{geradas}), circuitos atacados {jammed}"
        )
        return metricas


def executar(config: ConfigCenario, semente: int) -> Metricas:
    """
    Executa uma simulação.

    Args:
        config: Cenário validado
        semente: Semente do gerador de tráfego

    Returns:
        Métricas da execução; (config, semente) iguais dão métricas idênticas
    """
    return Simulador(config).executar(semente)
