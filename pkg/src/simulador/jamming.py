"""
Módulo de classificação de circuitos atacados.
"""

from typing import Sequence, Tuple

from src.rede.topologia import Rota
from src.simulador.modelos import Jammer


def classificar_jamming(rota: Rota, intervalo: Tuple[int, int], jammers: Sequence[Jammer]) -> Tuple[bool, float]:
    """
    Decide se um circuito é atacado e com qual potência adicional.

    O circuito é atacado quando algum jammer atua num enlace da rota e sua
    faixa intercepta as células de circuito (guardas não contam). Com vários
    jammers aplicáveis vale o maior ε.

    Args:
        rota: Rota do circuito
        intervalo: Intervalo [inicio, fim) escolhido pelo First Fit
        jammers: Jammers ativos

    Returns:
        Tupla (jammed, epsilon_db); jammed só é verdadeiro quando ε > 0
    """
    inicio, fim = intervalo
    epsilon = 0.0

    for jammer in jammers:
        if not any(jammer.atua_no_enlace(id_enlace) for id_enlace in rota.enlaces):
            continue
        if jammer.slot_inicial < fim and inicio <= jammer.slot_final:
            epsilon = max(epsilon, jammer.epsilon_db)

    return epsilon > 0, epsilon
