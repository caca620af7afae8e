"""
Módulo de gerenciamento de espectro.
Mantém a grade de slots de cada sentido de enlace e implementa a alocação
First Fit com banda de guarda, continuidade e contiguidade.
"""

import logging
import math
from enum import Enum
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

import numpy as np

if TYPE_CHECKING:
    from src.rede.topologia import Rota, Topologia

# Configuração de logging
logger = logging.getLogger(__name__)

LIVRE = -1
TAXAS_SUPORTADAS = (50, 100, 200)
CAPACIDADE_SLOT_GBPS = 50

Intervalo = Tuple[int, int]


class ErroEstadoEspectro(RuntimeError):
    """Estado de espectro inconsistente; indica defeito no simulador."""


class EstadoSlot(Enum):
    """Estado de uma célula da grade."""

    LIVRE = "livre"
    CIRCUITO = "circuito"
    GUARDA = "guarda"


def slots_necessarios(taxa_gbps: int) -> int:
    """
    Número de slots de um circuito 16QAM: um slot de 12,5 GHz carrega 50 Gb/s.

    Args:
        taxa_gbps: Taxa de bits pedida (50, 100 ou 200)

    Returns:
        ceil(taxa / 50)
    """
    if taxa_gbps not in TAXAS_SUPORTADAS:
        logger.error(f"Taxa de bits não suportada: {taxa_gbps}")
        raise ValueError(f"Taxa de bits não suportada: {taxa_gbps} (aceitas: {TAXAS_SUPORTADAS})")
    return math.ceil(taxa_gbps / CAPACIDADE_SLOT_GBPS)


class GradeSlots:
    """
    Grade de M slots de um sentido de enlace.

    Cada célula é livre, pertence a um circuito ou é guarda. As guardas de
    dois circuitos vizinhos podem coincidir, por isso cada célula de guarda
    guarda o conjunto de circuitos donos (contagem em `guarda`).
    """

    def __init__(self, num_slots: int = 320):
        self.num_slots = num_slots
        self.circuito = np.full(num_slots, LIVRE, dtype=np.int64)
        self.guarda = np.zeros(num_slots, dtype=np.int32)
        self._intervalos: Dict[int, Intervalo] = {}
        self._guardas: Dict[int, Tuple[int, ...]] = {}

    def estado(self, indice: int) -> EstadoSlot:
        if self.circuito[indice] != LIVRE:
            return EstadoSlot.CIRCUITO
        if self.guarda[indice] > 0:
            return EstadoSlot.GUARDA
        return EstadoSlot.LIVRE

    def ocupacao(self) -> np.ndarray:
        """Máscara de células ocupadas por circuito ou por guarda."""
        return (self.circuito != LIVRE) | (self.guarda > 0)

    def mascara_circuitos(self) -> np.ndarray:
        return self.circuito != LIVRE

    def circuitos(self) -> Dict[int, Intervalo]:
        return dict(self._intervalos)

    def alocar(self, id_circuito: int, intervalo: Intervalo, guarda: int) -> None:
        """
        Marca o intervalo como circuito e até `guarda` células de cada lado como guarda.

        Raises:
            ErroEstadoEspectro: Se o circuito já existe ou o intervalo não está livre
        """
        inicio, fim = intervalo
        if id_circuito in self._intervalos:
            raise ErroEstadoEspectro(f"Circuito {id_circuito} já alocado")
        if not 0 <= inicio < fim <= self.num_slots:
            raise ErroEstadoEspectro(f"Intervalo fora da grade: {intervalo}")
        if self.ocupacao()[inicio:fim].any():
            raise ErroEstadoEspectro(f"Intervalo {intervalo} não está livre para o circuito {id_circuito}")

        celulas_guarda = tuple(
            list(range(max(0, inicio - guarda), inicio))
            + list(range(fim, min(self.num_slots, fim + guarda)))
        )
        if celulas_guarda and self.mascara_circuitos()[list(celulas_guarda)].any():
            raise ErroEstadoEspectro(f"Guarda do circuito {id_circuito} invade outro circuito")

        self.circuito[inicio:fim] = id_circuito
        if celulas_guarda:
            self.guarda[list(celulas_guarda)] += 1
        self._intervalos[id_circuito] = intervalo
        self._guardas[id_circuito] = celulas_guarda

    def liberar(self, id_circuito: int) -> None:
        """
        Devolve ao estado livre exatamente as células do circuito e suas guardas.

        Raises:
            ErroEstadoEspectro: Se o circuito não está alocado nesta grade
        """
        if id_circuito not in self._intervalos:
            raise ErroEstadoEspectro(f"Liberação de circuito desconhecido: {id_circuito}")

        inicio, fim = self._intervalos.pop(id_circuito)
        celulas_guarda = self._guardas.pop(id_circuito)
        self.circuito[inicio:fim] = LIVRE
        if celulas_guarda:
            self.guarda[list(celulas_guarda)] -= 1

    def validar(self) -> None:
        """
        Varredura completa dos invariantes da grade.

        Raises:
            ErroEstadoEspectro: Se alguma célula está inconsistente
        """
        esperado_circuito = np.full(self.num_slots, LIVRE, dtype=np.int64)
        esperado_guarda = np.zeros(self.num_slots, dtype=np.int32)

        for id_circuito, (inicio, fim) in self._intervalos.items():
            esperado_circuito[inicio:fim] = id_circuito
            for celula in self._guardas[id_circuito]:
                esperado_guarda[celula] += 1

        if not np.array_equal(esperado_circuito, self.circuito):
            raise ErroEstadoEspectro("Células de circuito não correspondem aos intervalos registrados")
        if not np.array_equal(esperado_guarda, self.guarda):
            raise ErroEstadoEspectro("Contagem de guardas inconsistente")
        if ((self.circuito != LIVRE) & (self.guarda > 0)).any():
            raise ErroEstadoEspectro("Célula simultaneamente circuito e guarda")

        for id_circuito, (inicio, fim) in self._intervalos.items():
            if np.count_nonzero(self.circuito == id_circuito) != fim - inicio:
                raise ErroEstadoEspectro(f"Circuito {id_circuito} não é contíguo")


def inicios_viaveis(ocupado: np.ndarray, circuitos: np.ndarray, largura: int, guarda: int) -> np.ndarray:
    """
    Todos os inícios s, em ordem crescente, com [s, s+largura) livre e sem
    células de circuito em [s-guarda, s+largura+guarda), recortado aos
    limites da grade.

    Args:
        ocupado: Máscara de células não livres (circuito ou guarda)
        circuitos: Máscara de células de circuito
        largura: Número de slots pedidos
        guarda: Células de guarda de cada lado

    Returns:
        Array de índices iniciais (vazio se não houver)
    """
    num_slots = ocupado.size
    if largura < 1 or largura > num_slots:
        return np.zeros(0, dtype=np.int64)

    acumulado_ocupado = np.concatenate(([0], np.cumsum(ocupado, dtype=np.int64)))
    acumulado_circuitos = np.concatenate(([0], np.cumsum(circuitos, dtype=np.int64)))

    inicios = np.arange(num_slots - largura + 1)
    livres = acumulado_ocupado[inicios + largura] - acumulado_ocupado[inicios] == 0

    esquerda = np.maximum(inicios - guarda, 0)
    direita = np.minimum(inicios + largura + guarda, num_slots)
    sem_vizinho = acumulado_circuitos[direita] - acumulado_circuitos[esquerda] == 0

    return np.flatnonzero(livres & sem_vizinho)


def primeiro_inicio_viavel(ocupado: np.ndarray, circuitos: np.ndarray, largura: int, guarda: int) -> Optional[int]:
    """Menor início de inicios_viaveis, ou None."""
    candidatos = inicios_viaveis(ocupado, circuitos, largura, guarda)
    if candidatos.size == 0:
        return None
    return int(candidatos[0])


def _mascaras_rota(rota: "Rota", topologia: "Topologia") -> Tuple[np.ndarray, np.ndarray]:
    # União das ocupações de todos os enlaces da rota (continuidade)
    ocupado = np.zeros(topologia.num_slots, dtype=bool)
    circuitos = np.zeros(topologia.num_slots, dtype=bool)

    for id_enlace in rota.enlaces:
        grade = topologia.enlaces[id_enlace].grade
        ocupado |= grade.ocupacao()
        circuitos |= grade.mascara_circuitos()
    return ocupado, circuitos


def first_fit(rota: "Rota", largura: int, guarda: int, topologia: "Topologia") -> Optional[Intervalo]:
    """
    Política First Fit com continuidade e contiguidade de espectro.

    Args:
        rota: Rota do circuito
        largura: Slots necessários
        guarda: Slots de guarda entre circuitos adjacentes
        topologia: Topologia com as grades dos enlaces

    Returns:
        Intervalo [inicio, fim) de menor índice viável em todos os enlaces, ou None
    """
    inicio = primeiro_inicio_viavel(*_mascaras_rota(rota, topologia), largura, guarda)
    if inicio is None:
        return None
    return (inicio, inicio + largura)


def intervalos_viaveis(rota: "Rota", largura: int, guarda: int, topologia: "Topologia") -> List[Intervalo]:
    """
    Todos os intervalos viáveis da rota na ordem do First Fit; o primeiro
    é o mesmo devolvido por first_fit.
    """
    inicios = inicios_viaveis(*_mascaras_rota(rota, topologia), largura, guarda)
    return [(int(inicio), int(inicio) + largura) for inicio in inicios]


def alocar(rota: "Rota", intervalo: Intervalo, id_circuito: int, topologia: "Topologia", guarda: int = 2) -> None:
    """
    Aloca o intervalo em todos os enlaces da rota.

    Em caso de falha num enlace, os enlaces já alocados são desfeitos antes
    de propagar o erro.
    """
    alocados = []
    try:
        for id_enlace in rota.enlaces:
            topologia.enlaces[id_enlace].grade.alocar(id_circuito, intervalo, guarda)
            alocados.append(id_enlace)
    except ErroEstadoEspectro:
        for id_enlace in alocados:
            topologia.enlaces[id_enlace].grade.liberar(id_circuito)
        logger.error(f"Falha ao alocar circuito {id_circuito} em {intervalo}")
        raise


def liberar(rota: "Rota", id_circuito: int, topologia: "Topologia") -> None:
    """Libera o circuito em todos os enlaces da rota."""
    for id_enlace in rota.enlaces:
        topologia.enlaces[id_enlace].grade.liberar(id_circuito)


def validar_grades(grades: Iterable[GradeSlots]) -> None:
    """Valida todas as grades informadas."""
    for grade in grades:
        grade.validar()
