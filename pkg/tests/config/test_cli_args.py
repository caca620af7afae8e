"""
Testes para o processamento de argumentos de linha de comando.
"""

import pytest

from src.config.cli_args import processar_argumentos


def test_valores_padrao():
    args = processar_argumentos([])
    assert args["caminho_config"] == "config/config.yaml"
    assert args["diretorio_saida"] == "resultados"
    assert args["paralelo"] == 1
    assert args["sementes"] is None
    assert args["verbose"] == 0
    assert args["gerar_config"] is False
    assert args["comprimentos"] is None


def test_argumentos_completos():
    args = processar_argumentos([
        "config/multiplos_jammers.yaml", "--out", "saida", "--seeds", "3",
        "--parallel", "4", "--requisicoes", "1000", "--carga", "80", "-v",
    ])
    assert args["caminho_config"] == "config/multiplos_jammers.yaml"
    assert args["diretorio_saida"] == "saida"
    assert args["sementes"] == 3
    assert args["paralelo"] == 4
    assert args["requisicoes"] == 1000
    assert args["carga"] == 80.0
    assert args["verbose"] == 1


@pytest.mark.parametrize("argumentos", [
    ["--seeds", "0"], ["--parallel", "-1"], ["--carga", "0"], ["--comprimentos", "-100"],
])
def test_valores_invalidos(argumentos):
    with pytest.raises(SystemExit):
        processar_argumentos(argumentos)


def test_comprimentos_de_calibracao():
    args = processar_argumentos(["config/enlace_unico_calibrado.yaml", "--comprimentos", "200", "300", "400"])
    assert args["comprimentos"] == [200.0, 300.0, 400.0]
