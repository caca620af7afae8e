"""
Módulo de controle de admissão ciente de jamming.

Um pedido só é atendido se o novo circuito e todos os circuitos que
compartilham enlaces com ele ficarem com SNR acima do limiar.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

from src.qot.modelo_snr import CanalEspectral
from src.qot.parametros import linear_para_db
from src.rede.espectro import Intervalo, first_fit, intervalos_viaveis, slots_necessarios
from src.rede.topologia import ErroRoteamento, Rota
from src.simulador.estado_rede import EstadoRede
from src.simulador.jamming import classificar_jamming
from src.simulador.modelos import Circuito
from src.simulador.trafego import Requisicao

# Configuração de logging
logger = logging.getLogger(__name__)


class MotivoBloqueio(Enum):
    SEM_ROTA = "sem-rota"
    SEM_ESPECTRO = "sem-espectro"
    SNR_CANDIDATO = "snr-candidato"
    SNR_VIZINHO = "snr-vizinho"


@dataclass(frozen=True)
class Estabelecido:
    circuito: Circuito


@dataclass(frozen=True)
class Bloqueado:
    motivo: MotivoBloqueio


ResultadoAdmissao = Union[Estabelecido, Bloqueado]


def admitir(requisicao: Requisicao, estado: EstadoRede) -> ResultadoAdmissao:
    """
    Tenta estabelecer o circuito pedido.

    Etapas: rota por Dijkstra, número de slots, First Fit, classificação de
    jamming, inserção provisória do canal, cálculo da SNR do candidato e dos
    vizinhos e, por fim, estabelecimento ou reversão completa.

    Com estado.alocacao_ciente_snr, um candidato reprovado por SNR não
    bloqueia de imediato: os demais inícios viáveis são tentados em ordem
    crescente e o pedido só é bloqueado se todos falharem, com o motivo do
    primeiro candidato.

    Args:
        requisicao: Pedido de circuito
        estado: Estado da rede (alterado apenas quando o circuito é estabelecido)

    Returns:
        Estabelecido com o circuito criado ou Bloqueado com o motivo
    """
    try:
        rota = estado.topologia.rota(requisicao.origem, requisicao.destino)
    except ErroRoteamento:
        return Bloqueado(MotivoBloqueio.SEM_ROTA)

    largura = slots_necessarios(requisicao.taxa_gbps)
    if estado.alocacao_ciente_snr:
        intervalos = intervalos_viaveis(rota, largura, estado.slots_guarda, estado.topologia)
    else:
        intervalo = first_fit(rota, largura, estado.slots_guarda, estado.topologia)
        intervalos = [] if intervalo is None else [intervalo]
    if not intervalos:
        return Bloqueado(MotivoBloqueio.SEM_ESPECTRO)

    primeiro = _tentar_intervalo(requisicao, rota, intervalos[0], estado)
    if isinstance(primeiro, Estabelecido):
        return primeiro
    for intervalo in intervalos[1:]:
        resultado = _tentar_intervalo(requisicao, rota, intervalo, estado)
        if isinstance(resultado, Estabelecido):
            return resultado
    return primeiro


def _tentar_intervalo(
    requisicao: Requisicao, rota: Rota, intervalo: Intervalo, estado: EstadoRede
) -> ResultadoAdmissao:
    largura = intervalo[1] - intervalo[0]
    jammed, epsilon_db = classificar_jamming(rota, intervalo, estado.jammers)
    canal = CanalEspectral.de_intervalo(
        intervalo[0], largura, estado.parametros, epsilon_db, id_circuito=requisicao.id
    )

    estado.inserir_canal(requisicao.id, canal, rota)

    snr_db = None
    if estado.controle_snr:
        snr = estado.snr_circuito(requisicao.id, rota, canal)
        if snr < estado.limiar_snr:
            estado.remover_canal(requisicao.id, rota)
            _registrar_bloqueio(requisicao, intervalo, MotivoBloqueio.SNR_CANDIDATO, snr)
            return Bloqueado(MotivoBloqueio.SNR_CANDIDATO)

        for id_vizinho in estado.circuitos_vizinhos(rota, excluir=requisicao.id):
            vizinho = estado.circuitos[id_vizinho]
            snr_vizinho = estado.snr_circuito(id_vizinho, vizinho.rota, vizinho.canal)
            if snr_vizinho < estado.limiar_snr:
                estado.remover_canal(requisicao.id, rota)
                _registrar_bloqueio(requisicao, intervalo, MotivoBloqueio.SNR_VIZINHO, snr_vizinho)
                return Bloqueado(MotivoBloqueio.SNR_VIZINHO)

        snr_db = linear_para_db(snr)

    circuito = Circuito(
        id=requisicao.id,
        rota=rota,
        intervalo=intervalo,
        taxa_gbps=requisicao.taxa_gbps,
        jammed=jammed,
        epsilon_db=epsilon_db,
        tempo_partida=requisicao.tempo_chegada + requisicao.tempo_permanencia,
        canal=canal,
        snr_admissao_db=snr_db,
    )
    estado.estabelecer(circuito)
    return Estabelecido(circuito)


def _registrar_bloqueio(requisicao: Requisicao, intervalo: Intervalo, motivo: MotivoBloqueio, snr: float) -> None:
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            f"Requisição {requisicao.id} rejeitada em {intervalo} ({motivo.value}): "
            f"SNR {linear_para_db(snr):.2f} dB"
        )
