"""
Módulo com a classe base para exportadores de resultados de simulação.
Define a interface comum para diferentes formatos de exportação.
"""

import os
import logging
from abc import ABC, abstractmethod
from typing import List

import numpy as np

from src.experimentos.varredura import ResultadoVarredura

# Configuração de logging
logger = logging.getLogger(__name__)

ALGARISMOS_SIGNIFICATIVOS = 6


def formatar_numero(valor: float) -> str:
    """
    Formata um número em notação decimal fixa com 6 algarismos significativos.

    Args:
        valor: Número a formatar

    Returns:
        Texto estável entre execuções (zeros à direita removidos)
    """
    return np.format_float_positional(
        float(valor), precision=ALGARISMOS_SIGNIFICATIVOS, unique=False, fractional=False, trim='-'
    )


class BaseExportador(ABC):
    """
    Classe base abstrata para exportadores de resultados.
    Define a interface comum para diferentes formatos de exportação.
    """

    def __init__(self, diretorio_saida: str):
        """
        Inicializa o exportador.

        Args:
            diretorio_saida: Diretório onde os arquivos serão gravados
        """
        self.diretorio_saida = diretorio_saida
        self._criar_diretorio_saida()

    def _criar_diretorio_saida(self) -> None:
        """
        Cria o diretório de saída se não existir.
        """
        if not os.path.exists(self.diretorio_saida):
            try:
                os.makedirs(self.diretorio_saida)
            except OSError as e:
                logger.error(f"Não foi possível criar o diretório {self.diretorio_saida}: {e}")
                raise
            logger.info(f"Diretório de saída criado: {self.diretorio_saida}")

    def _gerar_nome_arquivo(self, nome: str) -> str:
        return os.path.join(self.diretorio_saida, nome)

    @abstractmethod
    def exportar(self, resultado: ResultadoVarredura) -> List[str]:
        """
        Exporta o resultado da varredura para o formato específico.

        Args:
            resultado: Resultado da varredura

        Returns:
            Lista de caminhos dos arquivos gerados
        """
        pass
