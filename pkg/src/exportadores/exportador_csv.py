"""
Módulo do exportador de curvas de bloqueio e utilização para CSV.
"""

import logging
from typing import List, Sequence

import numpy as np
import pandas as pd

from src.experimentos.calibracao import PontoCalibracao
from src.experimentos.varredura import ResultadoVarredura
from src.exportadores.base_exportador import BaseExportador, formatar_numero

# Configuração de logging
logger = logging.getLogger(__name__)


class ExportadorCSV(BaseExportador):
    """
    Exportador de resultados para arquivos CSV.

    Gera blocking.csv (uma linha por execução e linhas 'mean'/'std' por ε),
    utilization.csv (média da rede) e, se configurado, um arquivo de
    utilização por enlace dirigido.
    """

    def exportar(self, resultado: ResultadoVarredura) -> List[str]:
        """
        Exporta os CSVs da varredura.

        Args:
            resultado: Resultado da varredura

        Returns:
            Lista de caminhos dos arquivos gerados
        """
        arquivos = [self._exportar_bloqueio(resultado)]
        arquivos.append(self._exportar_utilizacao(
            resultado,
            "utilization.csv",
            {epsilon: agregado.media_utilizacao_rede for epsilon, agregado in resultado.agregados.items()},
        ))

        if resultado.config.utilizacao_por_enlace:
            enlaces = next(iter(resultado.agregados.values())).media_utilizacao_por_enlace
            for origem, destino in enlaces:
                curvas = {
                    epsilon: agregado.media_utilizacao_por_enlace[(origem, destino)]
                    for epsilon, agregado in resultado.agregados.items()
                }
                arquivos.append(self._exportar_utilizacao(resultado, f"utilization_{origem}-{destino}.csv", curvas))

        return arquivos

    def exportar_calibracao(self, pontos: Sequence[PontoCalibracao]) -> str:
        """
        Exporta calibration.csv: uma linha por (comprimento, ε) com o bloqueio
        médio e a utilização média da faixa atacada e das vizinhanças.

        Args:
            pontos: Resultado de varrer_comprimentos

        Returns:
            Caminho do arquivo gerado
        """
        linhas = []
        for ponto in pontos:
            tendencias = ponto.tendencias
            for indice, epsilon in enumerate(ponto.resultado.valores_epsilon):
                agregado = ponto.resultado.agregados[epsilon]
                linhas.append((
                    formatar_numero(ponto.comprimento_km),
                    formatar_numero(epsilon),
                    formatar_numero(agregado.media_bloqueio),
                    formatar_numero(tendencias.utilizacao_faixa[indice]) if tendencias else "",
                    formatar_numero(tendencias.utilizacao_vizinhanca[indice]) if tendencias else "",
                ))

        df = pd.DataFrame(linhas, columns=[
            "length_km", "epsilon_db", "blocking_probability", "jammed_band_utilization", "neighbor_utilization",
        ])
        return self._salvar(df, "calibration.csv")

    def _exportar_bloqueio(self, resultado: ResultadoVarredura) -> str:
        linhas = []
        for epsilon in resultado.valores_epsilon:
            for registro in resultado.registros:
                if registro.epsilon_db == epsilon:
                    linhas.append((
                        formatar_numero(epsilon),
                        str(registro.semente),
                        formatar_numero(registro.metricas.probabilidade_bloqueio),
                    ))
            agregado = resultado.agregados[epsilon]
            linhas.append((formatar_numero(epsilon), "mean", formatar_numero(agregado.media_bloqueio)))
            linhas.append((formatar_numero(epsilon), "std", formatar_numero(agregado.desvio_bloqueio)))

        df = pd.DataFrame(linhas, columns=["epsilon_db", "seed", "blocking_probability"])
        return self._salvar(df, "blocking.csv")

    def _exportar_utilizacao(self, resultado: ResultadoVarredura, nome: str, curvas: dict) -> str:
        partes = []
        for epsilon in resultado.valores_epsilon:
            curva = np.asarray(curvas[epsilon])
            partes.append(pd.DataFrame({
                "epsilon_db": formatar_numero(epsilon),
                "slot_index": np.arange(curva.size),
                "utilization": [formatar_numero(valor) for valor in curva],
            }))
        return self._salvar(pd.concat(partes, ignore_index=True), nome)

    def _salvar(self, df: pd.DataFrame, nome: str) -> str:
        nome_arquivo = self._gerar_nome_arquivo(nome)
        try:
            df.to_csv(nome_arquivo, index=False, encoding='utf-8', lineterminator='\n')
        except OSError as e:
            logger.error(f"Erro ao exportar para CSV {nome_arquivo}: {str(e)}")
            raise
        logger.info(f"Dados exportados para CSV: {nome_arquivo}")
        return nome_arquivo
