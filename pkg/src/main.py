"""
Módulo principal do Simulador EON.
Ponto de entrada para execução das varreduras de jamming.
"""

import os
import sys
import logging
from typing import List, Optional

# Configura o módulo para estar no path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.config.carregador_config import CarregadorConfig
from src.config.cli_args import processar_argumentos
from src.experimentos.calibracao import varrer_comprimentos
from src.experimentos.varredura import executar_varredura
from src.exportadores.gerenciador_exportacao import GerenciadorExportacao


# Configuração inicial de logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def configurar_nivel_log(verbose: int) -> None:
    """
    Configura o nível de log com base no parâmetro de verbosidade.

    Args:
        verbose: Nível de verbosidade (0=INFO, 1=DEBUG)
    """
    if verbose >= 1:
        logging.getLogger().setLevel(logging.DEBUG)
        logger.debug("Modo de log detalhado ativado")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Função principal: carrega o cenário, executa a varredura e grava os resultados.

    Args:
        argv: Argumentos da linha de comando (padrão: sys.argv)

    Returns:
        Código de saída (0 em sucesso, 1 em erro)
    """
    try:
        args = processar_argumentos(argv)
        configurar_nivel_log(args.get('verbose', 0))

        caminho_config = args.get('caminho_config', 'config/config.yaml')

        if args.get('gerar_config'):
            CarregadorConfig.criar_config_padrao(caminho_config)
            return 0

        carregador = CarregadorConfig(caminho_config)
        carregador.atualizar_config_cli(args)
        config = carregador.obter_config()

        logger.info(
            f"Cenário '{config.nome}': ε em {carregador.obter_valores_epsilon()} dB, "
            f"sementes {carregador.obter_sementes()}"
        )

        diretorio_saida = args.get('diretorio_saida', 'resultados')
        if args.get('comprimentos'):
            pontos = varrer_comprimentos(config, args['comprimentos'], paralelo=args.get('paralelo', 1))
            arquivos = GerenciadorExportacao(diretorio_saida).exportar_calibracao(pontos)
        else:
            resultado = executar_varredura(config, paralelo=args.get('paralelo', 1))
            arquivos = GerenciadorExportacao(diretorio_saida).exportar(resultado)
        for arquivo in arquivos:
            logger.info(f"Arquivo gerado: {arquivo}")

        logger.info("Simulação concluída com sucesso")
        return 0

    except Exception as e:
        logger.error(f"Erro na execução principal: {str(e)}", exc_info=True)
        return 1


if __name__ == '__main__':
    sys.exit(main())
