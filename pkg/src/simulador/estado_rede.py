"""
Módulo do estado da rede durante a simulação.
Junta as grades de slots, os circuitos estabelecidos e o estado espectral
de cada enlace usado pelo modelo de SNR.
"""

import logging
from typing import Dict, List, Sequence, Set, Tuple

import numpy as np

from src.qot.modelo_snr import CanalEspectral, EstadoEspectralEnlace, psd_nli_canais
from src.qot.parametros import CoeficientesDerivados, ParametrosFisicos, db_para_linear
from src.rede import espectro
from src.rede.espectro import ErroEstadoEspectro
from src.rede.topologia import IdEnlace, Rota, Topologia
from src.simulador.modelos import Circuito, Jammer

# Configuração de logging
logger = logging.getLogger(__name__)


class EstadoRede:
    """
    Estado mutável da rede: grades, circuitos ativos e canais por enlace.

    O ruído de cada enlace (ASE + NLI segura + NLI de jamming, multiplicado
    pelo número de vãos) é mantido em cache e invalidado sempre que o
    conjunto de canais do enlace muda.
    """

    def __init__(
        self,
        topologia: Topologia,
        parametros: ParametrosFisicos,
        coeficientes: CoeficientesDerivados,
        jammers: Sequence[Jammer] = (),
        slots_guarda: int = 2,
        limiar_snr_db: float = 15.0,
        controle_snr: bool = True,
        spm_elevado_jammed: bool = False,
        alocacao_ciente_snr: bool = False
    ):
        self.topologia = topologia
        self.parametros = parametros
        self.coeficientes = coeficientes
        self.jammers = tuple(jammers)
        self.slots_guarda = slots_guarda
        self.limiar_snr_db = limiar_snr_db
        self.limiar_snr = db_para_linear(limiar_snr_db)
        self.controle_snr = controle_snr
        self.spm_elevado_jammed = spm_elevado_jammed
        self.alocacao_ciente_snr = alocacao_ciente_snr

        self.circuitos: Dict[int, Circuito] = {}
        self._canais: Dict[IdEnlace, Dict[int, CanalEspectral]] = {
            id_enlace: {} for id_enlace in topologia.enlaces
        }
        self._ruido: Dict[IdEnlace, Dict[int, float]] = {}

    def inserir_canal(self, id_circuito: int, canal: CanalEspectral, rota: Rota) -> None:
        """Insere o canal no estado espectral de todos os enlaces da rota."""
        for id_enlace in rota.enlaces:
            if id_circuito in self._canais[id_enlace]:
                logger.error(f"Colisão ao inserir canal do circuito {id_circuito} em {id_enlace}")
                raise ErroEstadoEspectro(f"Canal do circuito {id_circuito} já presente em {id_enlace}")
        for id_enlace in rota.enlaces:
            self._canais[id_enlace][id_circuito] = canal
            self._ruido.pop(id_enlace, None)

    def remover_canal(self, id_circuito: int, rota: Rota) -> None:
        """Remove o canal do estado espectral de todos os enlaces da rota."""
        for id_enlace in rota.enlaces:
            if self._canais[id_enlace].pop(id_circuito, None) is None:
                raise ErroEstadoEspectro(f"Canal do circuito {id_circuito} ausente de {id_enlace}")
            self._ruido.pop(id_enlace, None)

    def estado_espectral(self, id_enlace: IdEnlace) -> EstadoEspectralEnlace:
        """Instantâneo imutável dos canais do enlace, na forma aceita por snr_rota."""
        enlace = self.topologia.enlaces[id_enlace]
        return EstadoEspectralEnlace(enlace.num_vaos, tuple(self._canais[id_enlace].values()))

    def ruido_enlace(self, id_enlace: IdEnlace) -> Dict[int, float]:
        """
        Ruído total por circuito no enlace: N_l·(G_ASE + G_NLI,s + G_J).

        Args:
            id_enlace: Enlace dirigido

        Returns:
            Dicionário id do circuito -> PSD de ruído em W/Hz
        """
        if id_enlace not in self._ruido:
            canais = sorted(self._canais[id_enlace].items(), key=lambda item: item[1].centro_slot)
            segura, jamming = psd_nli_canais(
                [canal for _, canal in canais], self.coeficientes, self.parametros, self.spm_elevado_jammed
            )
            vaos = self.topologia.enlaces[id_enlace].num_vaos
            total = vaos * (self.coeficientes.psd_ase_por_vao + segura + jamming)
            self._ruido[id_enlace] = {
                id_circuito: float(valor) for (id_circuito, _), valor in zip(canais, total)
            }
        return self._ruido[id_enlace]

    def snr_circuito(self, id_circuito: int, rota: Rota, canal: CanalEspectral) -> float:
        """SNR linear do circuito somando o ruído de cada enlace da rota."""
        ruido = 0.0
        for id_enlace in rota.enlaces:
            ruido += self.ruido_enlace(id_enlace)[id_circuito]
        return canal.psd_lancamento / ruido

    def circuitos_vizinhos(self, rota: Rota, excluir: int) -> List[int]:
        """Circuitos estabelecidos que compartilham ao menos um enlace com a rota."""
        vizinhos: Set[int] = set()
        for id_enlace in rota.enlaces:
            vizinhos.update(self._canais[id_enlace])
        vizinhos.discard(excluir)
        return sorted(id_circuito for id_circuito in vizinhos if id_circuito in self.circuitos)

    def estabelecer(self, circuito: Circuito) -> None:
        """Aloca as grades de um circuito cujo canal já foi inserido."""
        espectro.alocar(circuito.rota, circuito.intervalo, circuito.id, self.topologia, self.slots_guarda)
        self.circuitos[circuito.id] = circuito

    def encerrar(self, id_circuito: int) -> Circuito:
        """Libera grades e canais de um circuito que parte."""
        circuito = self.circuitos.pop(id_circuito, None)
        if circuito is None:
            logger.error(f"Partida de circuito desconhecido: {id_circuito}")
            raise ErroEstadoEspectro(f"Circuito desconhecido: {id_circuito}")
        espectro.liberar(circuito.rota, id_circuito, self.topologia)
        self.remover_canal(id_circuito, circuito.rota)
        return circuito

    def ocupacao_enlaces(self) -> np.ndarray:
        """Matriz (enlaces x slots) de células ocupadas, na ordem de topologia.enlaces."""
        return np.stack([enlace.grade.ocupacao() for enlace in self.topologia.enlaces.values()])

    def assinatura(self) -> Tuple:
        """Cópia completa do estado, usada para verificar reversões."""
        grades = tuple(
            (
                id_enlace,
                enlace.grade.circuito.tobytes(),
                enlace.grade.guarda.tobytes(),
                tuple(sorted(enlace.grade.circuitos().items())),
            )
            for id_enlace, enlace in self.topologia.enlaces.items()
        )
        canais = tuple((id_enlace, tuple(sorted(canais.items()))) for id_enlace, canais in self._canais.items())
        return grades, canais, tuple(sorted(self.circuitos))

    def validar(self) -> None:
        """Valida as grades e a correspondência entre canais e circuitos."""
        espectro.validar_grades(enlace.grade for enlace in self.topologia.enlaces.values())
        for id_enlace, canais in self._canais.items():
            if set(canais) != set(self.topologia.enlaces[id_enlace].grade.circuitos()):
                raise ErroEstadoEspectro(f"Canais e grade divergem no enlace {id_enlace}")
