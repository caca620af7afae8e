"""
Módulo do gerenciador de exportação dos resultados de varredura.
"""

import logging
from typing import List, Sequence

from src.experimentos.calibracao import PontoCalibracao
from src.experimentos.varredura import ResultadoVarredura
from src.exportadores.base_exportador import BaseExportador
from src.exportadores.exportador_csv import ExportadorCSV
from src.exportadores.exportador_json import ExportadorJSON

# Configuração de logging
logger = logging.getLogger(__name__)


class GerenciadorExportacao:
    """
    Gerencia a exportação dos resultados.

    Os exportadores rodam sempre na mesma ordem (CSV e depois manifesto),
    depois que todas as execuções terminaram.
    """

    def __init__(self, diretorio_saida: str):
        """
        Inicializa o gerenciador.

        Args:
            diretorio_saida: Diretório de saída
        """
        self.diretorio_saida = diretorio_saida
        self.exportadores: List[BaseExportador] = [
            ExportadorCSV(diretorio_saida),
            ExportadorJSON(diretorio_saida),
        ]

    def exportar(self, resultado: ResultadoVarredura) -> List[str]:
        """
        Exporta o resultado em todos os formatos.

        Args:
            resultado: Resultado da varredura

        Returns:
            Lista de caminhos dos arquivos gerados
        """
        arquivos = []
        for exportador in self.exportadores:
            arquivos.extend(exportador.exportar(resultado))
        logger.info(f"{len(arquivos)} arquivos gerados em {self.diretorio_saida}")
        return arquivos

    def exportar_calibracao(self, pontos: Sequence[PontoCalibracao]) -> List[str]:
        """Exporta a varredura de comprimentos (apenas CSV)."""
        arquivo = ExportadorCSV(self.diretorio_saida).exportar_calibracao(pontos)
        logger.info(f"Calibração exportada em {arquivo}")
        return [arquivo]
