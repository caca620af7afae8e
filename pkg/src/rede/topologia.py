"""
Módulo de topologia da rede óptica.
Representa o grafo dirigido de enlaces anotados com distância e número de
vãos e calcula rotas pelo algoritmo de Dijkstra.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from src.rede.espectro import GradeSlots

# Configuração de logging
logger = logging.getLogger(__name__)

IdEnlace = Tuple[str, str]


class ErroRoteamento(ValueError):
    """Não existe rota entre os nós pedidos."""


@dataclass
class Enlace:
    """Enlace dirigido origem -> destino com sua grade de slots."""

    origem: str
    destino: str
    comprimento_km: float
    num_vaos: int
    grade: GradeSlots = field(repr=False)

    @property
    def id(self) -> IdEnlace:
        return (self.origem, self.destino)

    @staticmethod
    def calcular_vaos(comprimento_km: float, comprimento_vao_km: float) -> int:
        """Número de vãos: ceil(comprimento / vão), no mínimo 1."""
        return max(1, math.ceil(comprimento_km / comprimento_vao_km))


@dataclass(frozen=True)
class Rota:
    """Sequência ordenada de enlaces entre origem e destino."""

    origem: str
    destino: str
    enlaces: Tuple[IdEnlace, ...]

    @property
    def nos(self) -> Tuple[str, ...]:
        return (self.origem,) + tuple(destino for _, destino in self.enlaces)


class Topologia:
    """
    Grafo G = (V, E) com enlaces bidirecionais armazenados por sentido.

    Cada sentido tem sua própria grade de slots.
    """

    def __init__(
        self,
        nos: Iterable[str],
        enlaces: Iterable[Tuple[str, str, float]],
        comprimento_vao_km: float = 100.0,
        num_slots: int = 320
    ):
        """
        Inicializa a topologia.

        Args:
            nos: Identificadores dos nós
            enlaces: Registros (origem, destino, comprimento_km), um por enlace bidirecional
            comprimento_vao_km: Comprimento de cada vão de fibra
            num_slots: Slots por sentido de enlace
        """
        self.nos = sorted(str(no) for no in nos)
        self.num_slots = num_slots
        self.grafo = nx.DiGraph()
        self.grafo.add_nodes_from(self.nos)
        self.enlaces: Dict[IdEnlace, Enlace] = {}
        self._rotas: Dict[Tuple[str, str], Rota] = {}

        for origem, destino, comprimento in enlaces:
            origem, destino = str(origem), str(destino)
            for no in (origem, destino):
                if no not in self.grafo:
                    logger.error(f"Enlace referencia nó inexistente: {no}")
                    raise ValueError(f"Nó inexistente na topologia: {no}")
            if origem == destino:
                raise ValueError(f"Enlace com origem igual ao destino: {origem}")
            if not comprimento > 0:
                raise ValueError(f"Comprimento do enlace {origem}-{destino} deve ser positivo: {comprimento}")

            vaos = Enlace.calcular_vaos(comprimento, comprimento_vao_km)
            for a, b in ((origem, destino), (destino, origem)):
                if (a, b) in self.enlaces:
                    raise ValueError(f"Enlace duplicado: {a}-{b}")
                self.enlaces[(a, b)] = Enlace(a, b, float(comprimento), vaos, GradeSlots(num_slots))
                self.grafo.add_edge(a, b, comprimento_km=float(comprimento))

        logger.debug(f"Topologia com {len(self.nos)} nós e {len(self.enlaces)} enlaces dirigidos")

    def pares_nos(self) -> List[Tuple[str, str]]:
        """Pares ordenados (origem, destino) distintos, em ordem estável."""
        return [(a, b) for a in self.nos for b in self.nos if a != b]

    def rota(self, origem: str, destino: str) -> Rota:
        """Rota fixa (k = 1) entre dois nós, calculada uma única vez."""
        chave = (origem, destino)
        if chave not in self._rotas:
            self._rotas[chave] = caminho_mais_curto(self, origem, destino)
        return self._rotas[chave]

    def grades_livres(self) -> bool:
        """Indica se todas as grades estão totalmente livres."""
        return all(not enlace.grade.ocupacao().any() for enlace in self.enlaces.values())


def caminho_mais_curto(topologia: Topologia, origem: str, destino: str) -> Rota:
    """
    Caminho de menor comprimento total (Dijkstra).

    Empates são desfeitos pela menor sequência lexicográfica de nós.

    Args:
        topologia: Topologia da rede
        origem: Nó de origem
        destino: Nó de destino

    Returns:
        Rota escolhida

    Raises:
        ErroRoteamento: Se os nós não existem, coincidem ou não há caminho
    """
    if origem == destino:
        raise ErroRoteamento(f"Origem e destino coincidem: {origem}")

    try:
        caminhos = list(nx.all_shortest_paths(topologia.grafo, origem, destino, weight='comprimento_km'))
    except (nx.NetworkXNoPath, nx.NodeNotFound) as e:
        logger.debug(f"Sem rota entre {origem} e {destino}: {str(e)}")
        raise ErroRoteamento(f"Sem rota entre {origem} e {destino}") from e

    nos = min(caminhos)
    return Rota(origem=origem, destino=destino, enlaces=tuple(zip(nos, nos[1:])))


def carregar_topologia(
    nos: Iterable[str],
    enlaces: Iterable[Tuple[str, str, float]],
    comprimento_vao_km: float,
    num_slots: int
) -> Topologia:
    """Cria a topologia e registra no log o número de vãos de cada enlace."""
    topologia = Topologia(nos, enlaces, comprimento_vao_km, num_slots)
    vaos = {f"{a}-{b}": enlace.num_vaos for (a, b), enlace in topologia.enlaces.items()}
    logger.debug(f"Topologia carregada, vãos por enlace: {vaos}")
    return topologia
