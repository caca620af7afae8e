"""
Módulo do exportador do manifesto JSON de reprodutibilidade.
"""

import json
import logging
from typing import List

from src import __version__
from src.config.carregador_config import config_para_dict
from src.experimentos.tendencias import analisar_tendencias
from src.experimentos.varredura import ResultadoVarredura
from src.exportadores.base_exportador import BaseExportador

# Configuração de logging
logger = logging.getLogger(__name__)


class ExportadorJSON(BaseExportador):
    """
    Grava manifest.json com o cenário resolvido, as sementes, a versão do
    artefato, uma entrada por execução do simulador e o resumo das
    tendências em torno da faixa do primeiro jammer.
    """

    NOME_ARQUIVO = "manifest.json"

    def exportar(self, resultado: ResultadoVarredura) -> List[str]:
        """
        Exporta o manifesto da varredura.

        Args:
            resultado: Resultado da varredura

        Returns:
            Lista com o caminho do manifesto
        """
        tendencias = analisar_tendencias(resultado)
        manifesto = {
            "versao": __version__,
            "config": config_para_dict(resultado.config),
            "sementes": list(resultado.config.sementes),
            "valores_epsilon": resultado.valores_epsilon,
            "execucoes": [
                {
                    "epsilon_db": registro.epsilon_db,
                    "semente": registro.semente,
                    "geradas": registro.metricas.geradas,
                    "bloqueadas": registro.metricas.bloqueadas,
                    "probabilidade_bloqueio": registro.metricas.probabilidade_bloqueio,
                    "bloqueios_por_motivo": registro.metricas.bloqueios_por_motivo,
                    "circuitos_jammed": registro.metricas.circuitos_jammed,
                }
                for registro in resultado.registros
            ],
            "tendencias": tendencias.para_dict() if tendencias else None,
        }

        nome_arquivo = self._gerar_nome_arquivo(self.NOME_ARQUIVO)
        try:
            with open(nome_arquivo, 'w', encoding='utf-8') as arquivo:
                json.dump(manifesto, arquivo, ensure_ascii=False, indent=2)
                arquivo.write('\n')
        except OSError as e:
            logger.error(f"Erro ao exportar manifesto {nome_arquivo}: {str(e)}")
            raise

        logger.info(f"Manifesto exportado para JSON: {nome_arquivo}")
        return [nome_arquivo]
