"""
Testes para a topologia e o roteamento por menor caminho.
"""

import itertools

import numpy as np
import pytest

from src.rede.topologia import Enlace, ErroRoteamento, Topologia, caminho_mais_curto


@pytest.fixture
def triangulo():
    """Triângulo A-B 100, B-C 100, A-C 250."""
    return Topologia(["A", "B", "C"], [("A", "B", 100), ("B", "C", 100), ("A", "C", 250)])


def _custo(topologia, nos):
    return sum(topologia.enlaces[(a, b)].comprimento_km for a, b in zip(nos, nos[1:]))


def _menor_caminho_exaustivo(topologia, origem, destino):
    """Enumera todos os caminhos simples e escolhe o menor custo, depois a menor sequência."""
    intermediarios = [no for no in topologia.nos if no not in (origem, destino)]
    melhor = None
    for tamanho in range(len(intermediarios) + 1):
        for meio in itertools.permutations(intermediarios, tamanho):
            nos = (origem,) + meio + (destino,)
            if all((a, b) in topologia.enlaces for a, b in zip(nos, nos[1:])):
                chave = (_custo(topologia, nos), list(nos))
                if melhor is None or chave < melhor:
                    melhor = chave
    return melhor


def test_enlace_unico():
    """Dois nós e um enlace: a rota é o próprio enlace."""
    topologia = Topologia(["A", "B"], [("A", "B", 100)])
    rota = caminho_mais_curto(topologia, "A", "B")
    assert rota.enlaces == (("A", "B"),)
    assert caminho_mais_curto(topologia, "B", "A").enlaces == (("B", "A"),)


def test_triangulo_prefere_dois_saltos(triangulo):
    """200 km por B vencem 250 km diretos."""
    rota = caminho_mais_curto(triangulo, "A", "C")
    assert rota.nos == ("A", "B", "C")
    assert rota.enlaces == (("A", "B"), ("B", "C"))


def test_empate_resolvido_pela_menor_sequencia():
    """Caminhos A-B-D e A-C-D empatados: vence A-B-D, sempre."""
    topologia = Topologia(
        ["A", "B", "C", "D"],
        [("A", "C", 50), ("C", "D", 50), ("A", "B", 50), ("B", "D", 50)],
    )
    for _ in range(3):
        assert caminho_mais_curto(topologia, "A", "D").nos == ("A", "B", "D")


def test_menor_caminho_contra_enumeracao_exaustiva():
    """Compara com a enumeração de caminhos em grafos aleatórios de até 8 nós."""
    gerador = np.random.default_rng(5)
    for _ in range(60):
        quantidade = int(gerador.integers(3, 9))
        nos = [chr(ord("A") + i) for i in range(quantidade)]
        enlaces = [
            (a, b, int(gerador.integers(1, 6)) * 50)
            for a, b in itertools.combinations(nos, 2)
            if gerador.random() < 0.5
        ]
        if not enlaces:
            continue
        topologia = Topologia(nos, enlaces)

        for origem, destino in topologia.pares_nos():
            esperado = _menor_caminho_exaustivo(topologia, origem, destino)
            if esperado is None:
                with pytest.raises(ErroRoteamento):
                    caminho_mais_curto(topologia, origem, destino)
                continue
            rota = caminho_mais_curto(topologia, origem, destino)
            assert list(rota.nos) == esperado[1]


def test_sem_rota_entre_componentes():
    topologia = Topologia(["A", "B", "C", "D"], [("A", "B", 100), ("C", "D", 100)])
    with pytest.raises(ErroRoteamento):
        caminho_mais_curto(topologia, "A", "D")


def test_no_inexistente():
    topologia = Topologia(["A", "B"], [("A", "B", 100)])
    with pytest.raises(ErroRoteamento):
        caminho_mais_curto(topologia, "A", "Z")


def test_enlaces_bidirecionais_com_grades_proprias(triangulo):
    """Cada sentido tem sua grade e o mesmo comprimento."""
    assert len(triangulo.enlaces) == 6
    ida, volta = triangulo.enlaces[("A", "C")], triangulo.enlaces[("C", "A")]
    assert ida.comprimento_km == volta.comprimento_km == 250
    assert ida.grade is not volta.grade
    assert ida.num_vaos == 3


def test_numero_de_vaos():
    assert Enlace.calcular_vaos(100, 100) == 1
    assert Enlace.calcular_vaos(60, 100) == 1
    assert Enlace.calcular_vaos(250, 100) == 3


def test_rota_em_cache(triangulo):
    assert triangulo.rota("A", "C") is triangulo.rota("A", "C")


def test_enlace_duplicado_rejeitado():
    with pytest.raises(ValueError):
        Topologia(["A", "B"], [("A", "B", 100), ("B", "A", 100)])
