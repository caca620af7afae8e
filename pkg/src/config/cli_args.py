"""
Módulo para processamento de argumentos de linha de comando.
Permite sobrescrever valores do cenário YAML através da CLI.
"""

import argparse
from typing import Any, Dict, List, Optional


def _inteiro_positivo(texto: str) -> int:
    valor = int(texto)
    if valor < 1:
        raise argparse.ArgumentTypeError(f"esperado inteiro >= 1, recebido {texto}")
    return valor


def _real_positivo(texto: str) -> float:
    valor = float(texto)
    if not valor > 0:
        raise argparse.ArgumentTypeError(f"esperado número > 0, recebido {texto}")
    return valor


def criar_parser_argumentos() -> argparse.ArgumentParser:
    """
    Cria o parser de argumentos da linha de comando.

    Returns:
        Parser de argumentos configurado
    """
    parser = argparse.ArgumentParser(
        description="Simulador EON - bloqueio e utilização espectral sob ataques de jamming",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )

    parser.add_argument(
        "caminho_config",
        nargs="?",
        default="config/config.yaml",
        help="Caminho para o arquivo de cenário YAML"
    )

    parser.add_argument(
        "--out",
        dest="diretorio_saida",
        default="resultados",
        help="Diretório onde blocking.csv, utilization.csv e manifest.json são gravados"
    )

    # Argumentos para sobrescrever o cenário
    grupo_cenario = parser.add_argument_group("Sobrescrita do cenário")

    grupo_cenario.add_argument(
        "--seeds",
        dest="sementes",
        type=_inteiro_positivo,
        help="Usa as sementes 1..N no lugar das configuradas"
    )

    grupo_cenario.add_argument(
        "--requisicoes",
        type=_inteiro_positivo,
        help="Número de requisições por execução"
    )

    grupo_cenario.add_argument(
        "--carga",
        type=_real_positivo,
        help="Carga oferecida em Erlang"
    )

    # Configurações da execução
    grupo_execucao = parser.add_argument_group("Controle de execução")

    grupo_execucao.add_argument(
        "--parallel",
        dest="paralelo",
        type=_inteiro_positivo,
        default=1,
        help="Número de processos para as execuções (ε, semente)"
    )

    grupo_execucao.add_argument(
        "--comprimentos",
        type=_real_positivo,
        nargs="+",
        metavar="KM",
        help="Calibração: repete a varredura com todos os enlaces em cada comprimento e grava calibration.csv"
    )

    grupo_execucao.add_argument(
        "--verbose", "-v",
        action="count",
        default=0,
        help="Aumenta o nível de detalhamento do log (use -vv para ainda mais detalhes)"
    )

    grupo_execucao.add_argument(
        "--gerar-config",
        action="store_true",
        help="Gera um arquivo de cenário padrão no caminho informado e sai"
    )

    return parser


def processar_argumentos(argv: Optional[List[str]] = None) -> Dict[str, Any]:
    """
    Processa os argumentos da linha de comando.

    Args:
        argv: Argumentos a interpretar (padrão: sys.argv)

    Returns:
        Dicionário com os argumentos processados
    """
    parser = criar_parser_argumentos()
    args = parser.parse_args(argv)

    # Converte Namespace para dicionário
    return vars(args)
