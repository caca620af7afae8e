"""
Testes do ponto de entrada da linha de comando.
"""

import os

import yaml

from src.main import main

CENARIO = {
    "cenario": {"nome": "cli", "num_requisicoes": 200, "sementes": [1]},
    "topologia": {
        "nos": ["A", "B"],
        "enlaces": [{"origem": "A", "destino": "B", "comprimento_km": 100}],
    },
    "jammers": [{"origem": "A", "destino": "B", "slot_inicial": 140, "slot_final": 149}],
    "varredura_epsilon": {"inicio_db": 0, "fim_db": 0.5, "passo_db": 0.5},
}


def _gravar(caminho, dados):
    with open(caminho, "w", encoding="utf-8") as arquivo:
        yaml.safe_dump(dados, arquivo)


def test_execucao_completa(tmp_path):
    caminho = tmp_path / "cenario.yaml"
    _gravar(caminho, CENARIO)
    saida = tmp_path / "saida"

    assert main([str(caminho), "--out", str(saida), "--seeds", "2"]) == 0
    assert sorted(os.listdir(saida)) == ["blocking.csv", "manifest.json", "utilization.csv"]


def test_config_invalida_retorna_erro(tmp_path):
    caminho = tmp_path / "cenario.yaml"
    _gravar(caminho, {**CENARIO, "desconhecida": 1})

    assert main([str(caminho), "--out", str(tmp_path / "saida")]) == 1
    assert not (tmp_path / "saida").exists()


def test_gerar_config(tmp_path):
    caminho = tmp_path / "novo.yaml"
    assert main([str(caminho), "--gerar-config"]) == 0
    assert caminho.exists()


def test_calibracao_de_comprimentos(tmp_path):
    caminho = tmp_path / "cenario.yaml"
    _gravar(caminho, CENARIO)
    saida = tmp_path / "saida"

    assert main([str(caminho), "--out", str(saida), "--comprimentos", "100", "300"]) == 0
    assert os.listdir(saida) == ["calibration.csv"]
