"""
Módulo de carregamento de configurações do simulador.
Responsável por ler, validar e fornecer acesso aos cenários de simulação.
"""

import os
import logging
from typing import Any, Dict, List, Optional, Set

import yaml

from src.config.cenario import (
    ConfigCenario,
    ConfigFisica,
    ConfigTopologia,
    ConfigVarredura,
    NUM_SLOTS_PADRAO,
    LIMIAR_SNR_PADRAO_DB,
    SEMENTES_PADRAO,
    SLOTS_GUARDA_PADRAO,
    TEMPO_PERMANENCIA_PADRAO,
)
from src.rede.espectro import TAXAS_SUPORTADAS
from src.simulador.modelos import Jammer

# Configuração de logging
logger = logging.getLogger(__name__)

SECOES = {'cenario', 'topologia', 'jammers', 'varredura_epsilon', 'fisica'}
CHAVES_CENARIO = {
    'nome', 'carga_erlang', 'num_requisicoes', 'tempo_medio_permanencia_s', 'taxas_gbps',
    'slots_guarda', 'num_slots', 'limiar_snr_db', 'modulacao', 'controle_snr',
    'spm_elevado_jammed', 'alocacao_ciente_snr', 'utilizacao_por_enlace', 'sementes',
}
CHAVES_TOPOLOGIA = {'nos', 'enlaces', 'arquivo'}
CHAVES_ENLACE = {'origem', 'destino', 'comprimento_km'}
CHAVES_JAMMER = {'origem', 'destino', 'slot_inicial', 'slot_final', 'epsilon_db', 'ambos_sentidos'}
CHAVES_VARREDURA = {'inicio_db', 'fim_db', 'passo_db'}
CHAVES_FISICA = {
    'potencia_tx_dbm', 'largura_slot_ghz', 'atenuacao_db_km', 'comprimento_vao_km',
    'gamma', 'beta2_ps2_km', 'frequencia_luz_hz', 'figura_ruido_db',
}


class ErroConfiguracao(ValueError):
    """Configuração inválida; a mensagem nomeia a chave e o valor."""

    def __init__(self, chave: str, valor: Any, motivo: str):
        self.chave = chave
        self.valor = valor
        super().__init__(f"Chave '{chave}' com valor inválido {valor!r}: {motivo}")


def _falhar(chave: str, valor: Any, motivo: str) -> None:
    erro = ErroConfiguracao(chave, valor, motivo)
    logger.error(str(erro))
    raise erro


def _verificar_chaves(secao: str, dados: Any, permitidas: Set[str]) -> Dict[str, Any]:
    if dados is None:
        return {}
    if not isinstance(dados, dict):
        _falhar(secao, dados, "esperado um mapeamento")
    for chave in dados:
        if chave not in permitidas:
            _falhar(f"{secao}.{chave}" if secao else str(chave), dados[chave], "chave desconhecida")
    return dados


def _numero(chave: str, valor: Any, minimo: Optional[float] = None, estrito: bool = False) -> float:
    # Aceita texto numérico: o YAML lê '1.93e14' (expoente sem sinal) como string
    if isinstance(valor, bool):
        _falhar(chave, valor, "esperado um número")
    try:
        numero = float(valor)
    except (TypeError, ValueError):
        _falhar(chave, valor, "esperado um número")
    if minimo is not None:
        if estrito and not numero > minimo:
            _falhar(chave, valor, f"deve ser maior que {minimo}")
        if not estrito and numero < minimo:
            _falhar(chave, valor, f"deve ser maior ou igual a {minimo}")
    return numero


def _inteiro(chave: str, valor: Any, minimo: Optional[int] = None) -> int:
    if isinstance(valor, bool) or not isinstance(valor, int):
        _falhar(chave, valor, "esperado um inteiro")
    if minimo is not None and valor < minimo:
        _falhar(chave, valor, f"deve ser maior ou igual a {minimo}")
    return valor


def _booleano(chave: str, valor: Any) -> bool:
    if not isinstance(valor, bool):
        _falhar(chave, valor, "esperado true ou false")
    return valor


def _lista(chave: str, valor: Any) -> List[Any]:
    if not isinstance(valor, list):
        _falhar(chave, valor, "esperada uma lista")
    return valor


def _interpretar_topologia(dados: Any, diretorio_base: Optional[str]) -> ConfigTopologia:
    dados = _verificar_chaves('topologia', dados, CHAVES_TOPOLOGIA)

    if 'arquivo' in dados:
        if 'nos' in dados or 'enlaces' in dados:
            _falhar('topologia.arquivo', dados['arquivo'], "não combine arquivo com nós/enlaces inline")
        caminho = str(dados['arquivo'])
        if diretorio_base and not os.path.isabs(caminho):
            caminho = os.path.join(diretorio_base, caminho)
        try:
            with open(caminho, 'r', encoding='utf-8') as arquivo:
                conteudo = yaml.safe_load(arquivo)
        except (OSError, yaml.YAMLError) as e:
            _falhar('topologia.arquivo', dados['arquivo'], f"não foi possível ler: {e}")
        logger.debug(f"Topologia lida de {caminho}")
        dados = _verificar_chaves('topologia', conteudo, CHAVES_TOPOLOGIA - {'arquivo'})

    if 'nos' not in dados or 'enlaces' not in dados:
        _falhar('topologia', dados, "informe 'nos' e 'enlaces' ou 'arquivo'")

    nos = tuple(str(no) for no in _lista('topologia.nos', dados['nos']))
    if len(nos) < 2 or len(set(nos)) != len(nos):
        _falhar('topologia.nos', dados['nos'], "esperados ao menos dois nós distintos")

    enlaces = []
    for indice, registro in enumerate(_lista('topologia.enlaces', dados['enlaces'])):
        prefixo = f"topologia.enlaces[{indice}]"
        registro = _verificar_chaves(prefixo, registro, CHAVES_ENLACE)
        if set(registro) != CHAVES_ENLACE:
            _falhar(prefixo, registro, f"campos obrigatórios: {sorted(CHAVES_ENLACE)}")
        origem, destino = str(registro['origem']), str(registro['destino'])
        for chave, no in (('origem', origem), ('destino', destino)):
            if no not in nos:
                _falhar(f"{prefixo}.{chave}", no, "nó inexistente")
        if origem == destino:
            _falhar(f"{prefixo}.destino", destino, "igual à origem")
        comprimento = _numero(f"{prefixo}.comprimento_km", registro['comprimento_km'], 0.0, estrito=True)
        enlaces.append((origem, destino, comprimento))

    pares = [frozenset((origem, destino)) for origem, destino, _ in enlaces]
    if len(set(pares)) != len(pares):
        _falhar('topologia.enlaces', dados['enlaces'], "enlace bidirecional repetido")

    return ConfigTopologia(nos=nos, enlaces=tuple(enlaces))


def _interpretar_jammers(dados: Any, topologia: ConfigTopologia, num_slots: int) -> tuple:
    if dados is None:
        return ()
    pares = {frozenset((origem, destino)) for origem, destino, _ in topologia.enlaces}
    jammers = []

    for indice, registro in enumerate(_lista('jammers', dados)):
        prefixo = f"jammers[{indice}]"
        registro = _verificar_chaves(prefixo, registro, CHAVES_JAMMER)
        for obrigatoria in ('origem', 'destino', 'slot_inicial', 'slot_final'):
            if obrigatoria not in registro:
                _falhar(f"{prefixo}.{obrigatoria}", None, "campo obrigatório ausente")

        origem, destino = str(registro['origem']), str(registro['destino'])
        if frozenset((origem, destino)) not in pares:
            _falhar(f"{prefixo}.destino", f"{origem}-{destino}", "enlace inexistente na topologia")

        inicio = _inteiro(f"{prefixo}.slot_inicial", registro['slot_inicial'], 0)
        fim = _inteiro(f"{prefixo}.slot_final", registro['slot_final'], inicio)
        if fim >= num_slots:
            _falhar(f"{prefixo}.slot_final", fim, f"fora da grade de {num_slots} slots")

        jammers.append(Jammer(
            enlace=(origem, destino),
            slot_inicial=inicio,
            slot_final=fim,
            epsilon_db=_numero(f"{prefixo}.epsilon_db", registro.get('epsilon_db', 0.0), 0.0),
            ambos_sentidos=_booleano(f"{prefixo}.ambos_sentidos", registro.get('ambos_sentidos', True)),
        ))

    return tuple(jammers)


def _interpretar_varredura(dados: Any) -> ConfigVarredura:
    dados = _verificar_chaves('varredura_epsilon', dados, CHAVES_VARREDURA)
    padrao = ConfigVarredura()
    inicio = _numero('varredura_epsilon.inicio_db', dados.get('inicio_db', padrao.inicio_db), 0.0)
    fim = _numero('varredura_epsilon.fim_db', dados.get('fim_db', padrao.fim_db))
    passo = _numero('varredura_epsilon.passo_db', dados.get('passo_db', padrao.passo_db), 0.0, estrito=True)
    if fim < inicio:
        _falhar('varredura_epsilon.fim_db', fim, f"menor que inicio_db={inicio}")
    return ConfigVarredura(inicio_db=inicio, fim_db=fim, passo_db=passo)


def _interpretar_fisica(dados: Any) -> ConfigFisica:
    dados = _verificar_chaves('fisica', dados, CHAVES_FISICA)
    padrao = ConfigFisica()
    valores = {}
    for chave in sorted(CHAVES_FISICA):
        valor = dados.get(chave, getattr(padrao, chave))
        # potência em dBm pode ser negativa; as demais grandezas são positivas
        if chave == 'potencia_tx_dbm':
            valores[chave] = _numero(f"fisica.{chave}", valor)
        else:
            valores[chave] = _numero(f"fisica.{chave}", valor, 0.0, estrito=True)
    return ConfigFisica(**valores)


def interpretar_config(texto: str, diretorio_base: Optional[str] = None) -> ConfigCenario:
    """
    Interpreta o texto de um cenário (YAML ou JSON) de forma estrita.

    Chaves desconhecidas são rejeitadas e os padrões documentados preenchem
    as ausentes: 320 slots, guarda de 2 slots, permanência média de 600 s,
    limiar de SNR de 15 dB e os parâmetros físicos de referência.

    Args:
        texto: Conteúdo do arquivo de cenário
        diretorio_base: Diretório usado para resolver 'topologia.arquivo'

    Returns:
        Cenário validado

    Raises:
        ErroConfiguracao: Erro de sintaxe ou valor inválido
    """
    try:
        dados = yaml.safe_load(texto)
    except yaml.YAMLError as e:
        logger.error(f"Erro ao ler YAML: {e}")
        raise ErroConfiguracao('<documento>', None, f"erro de sintaxe: {e}") from e

    dados = _verificar_chaves('', dados, SECOES)
    if 'topologia' not in dados:
        _falhar('topologia', None, "seção obrigatória ausente")

    cenario = _verificar_chaves('cenario', dados.get('cenario'), CHAVES_CENARIO)
    topologia = _interpretar_topologia(dados['topologia'], diretorio_base)

    num_slots = _inteiro('cenario.num_slots', cenario.get('num_slots', NUM_SLOTS_PADRAO), 1)

    taxas = tuple(
        _inteiro('cenario.taxas_gbps', taxa)
        for taxa in _lista('cenario.taxas_gbps', cenario.get('taxas_gbps', [50, 100, 200]))
    )
    if not taxas or any(taxa not in TAXAS_SUPORTADAS for taxa in taxas):
        _falhar('cenario.taxas_gbps', list(taxas), f"taxas aceitas: {list(TAXAS_SUPORTADAS)}")

    sementes = tuple(
        _inteiro('cenario.sementes', semente, 0)
        for semente in _lista('cenario.sementes', cenario.get('sementes', list(SEMENTES_PADRAO)))
    )
    if not sementes:
        _falhar('cenario.sementes', [], "lista de sementes vazia")

    config = ConfigCenario(
        topologia=topologia,
        nome=str(cenario.get('nome', 'cenario')),
        carga_erlang=_numero('cenario.carga_erlang', cenario.get('carga_erlang', 120.0), 0.0, estrito=True),
        num_requisicoes=_inteiro('cenario.num_requisicoes', cenario.get('num_requisicoes', 100000), 1),
        tempo_medio_permanencia_s=_numero(
            'cenario.tempo_medio_permanencia_s',
            cenario.get('tempo_medio_permanencia_s', TEMPO_PERMANENCIA_PADRAO), 0.0, estrito=True
        ),
        taxas_gbps=taxas,
        slots_guarda=_inteiro('cenario.slots_guarda', cenario.get('slots_guarda', SLOTS_GUARDA_PADRAO), 0),
        num_slots=num_slots,
        limiar_snr_db=_numero('cenario.limiar_snr_db', cenario.get('limiar_snr_db', LIMIAR_SNR_PADRAO_DB)),
        modulacao=str(cenario.get('modulacao', '16QAM')),
        controle_snr=_booleano('cenario.controle_snr', cenario.get('controle_snr', True)),
        spm_elevado_jammed=_booleano(
            'cenario.spm_elevado_jammed', cenario.get('spm_elevado_jammed', False)
        ),
        alocacao_ciente_snr=_booleano(
            'cenario.alocacao_ciente_snr', cenario.get('alocacao_ciente_snr', False)
        ),
        utilizacao_por_enlace=_booleano(
            'cenario.utilizacao_por_enlace', cenario.get('utilizacao_por_enlace', False)
        ),
        jammers=_interpretar_jammers(dados.get('jammers'), topologia, num_slots),
        varredura=_interpretar_varredura(dados.get('varredura_epsilon')),
        sementes=sementes,
        fisica=_interpretar_fisica(dados.get('fisica')),
    )

    logger.debug(
        f"Cenário '{config.nome}' interpretado: {len(topologia.nos)} nós, "
        f"{len(config.jammers)} jammers, {len(config.sementes)} sementes"
    )
    return config


def config_para_dict(config: ConfigCenario) -> Dict[str, Any]:
    """
    Serializa um cenário resolvido no mesmo esquema aceito por interpretar_config.

    Args:
        config: Cenário validado

    Returns:
        Dicionário com todas as chaves explícitas e topologia inline
    """
    return {
        'cenario': {
            'nome': config.nome,
            'carga_erlang': config.carga_erlang,
            'num_requisicoes': config.num_requisicoes,
            'tempo_medio_permanencia_s': config.tempo_medio_permanencia_s,
            'taxas_gbps': list(config.taxas_gbps),
            'slots_guarda': config.slots_guarda,
            'num_slots': config.num_slots,
            'limiar_snr_db': config.limiar_snr_db,
            'modulacao': config.modulacao,
            'controle_snr': config.controle_snr,
            'spm_elevado_jammed': config.spm_elevado_jammed,
            'alocacao_ciente_snr': config.alocacao_ciente_snr,
            'utilizacao_por_enlace': config.utilizacao_por_enlace,
            'sementes': list(config.sementes),
        },
        'topologia': {
            'nos': list(config.topologia.nos),
            'enlaces': [
                {'origem': origem, 'destino': destino, 'comprimento_km': comprimento}
                for origem, destino, comprimento in config.topologia.enlaces
            ],
        },
        'jammers': [
            {
                'origem': jammer.enlace[0],
                'destino': jammer.enlace[1],
                'slot_inicial': jammer.slot_inicial,
                'slot_final': jammer.slot_final,
                'epsilon_db': jammer.epsilon_db,
                'ambos_sentidos': jammer.ambos_sentidos,
            }
            for jammer in config.jammers
        ],
        'varredura_epsilon': {
            'inicio_db': config.varredura.inicio_db,
            'fim_db': config.varredura.fim_db,
            'passo_db': config.varredura.passo_db,
        },
        'fisica': {chave: getattr(config.fisica, chave) for chave in sorted(CHAVES_FISICA)},
    }


class CarregadorConfig:
    """
    Carrega e valida um cenário a partir de arquivo YAML.
    Permite sobrescrever valores via argumentos CLI.
    """

    def __init__(self, caminho_config: str = "config/config.yaml"):
        """
        Inicializa o carregador de configuração.

        Args:
            caminho_config: Caminho para o arquivo de cenário YAML
        """
        self.caminho_config = caminho_config
        self.config: Optional[ConfigCenario] = None
        self._carregar_config()
        logger.info(f"Configuração carregada com sucesso: {caminho_config}")

    def _carregar_config(self) -> None:
        """Carrega e interpreta o arquivo de cenário."""
        try:
            with open(self.caminho_config, 'r', encoding='utf-8') as arquivo:
                texto = arquivo.read()
        except FileNotFoundError:
            logger.error(f"Arquivo de configuração não encontrado: {self.caminho_config}")
            raise

        diretorio_base = os.path.dirname(os.path.abspath(self.caminho_config))
        self.config = interpretar_config(texto, diretorio_base)

    def obter_config(self) -> ConfigCenario:
        """
        Retorna o cenário completo.

        Returns:
            Cenário validado
        """
        return self.config

    def obter_sementes(self) -> List[int]:
        return list(self.config.sementes)

    def obter_valores_epsilon(self) -> List[float]:
        return self.config.varredura.valores()

    @staticmethod
    def criar_config_padrao(caminho: str = "config/config.yaml") -> None:
        """
        Cria um arquivo de cenário padrão: enlace único de 100 km entre A e B
        com um jammer nos slots 140-149.

        Args:
            caminho: Caminho onde o arquivo será criado
        """
        config_padrao = ConfigCenario(
            topologia=ConfigTopologia(nos=('A', 'B'), enlaces=(('A', 'B', 100.0),)),
            nome="enlace_unico",
            utilizacao_por_enlace=True,
            jammers=(Jammer(enlace=('A', 'B'), slot_inicial=140, slot_final=149),),
        )

        diretorio = os.path.dirname(caminho)
        if diretorio:
            os.makedirs(diretorio, exist_ok=True)

        with open(caminho, 'w', encoding='utf-8') as arquivo:
            yaml.safe_dump(config_para_dict(config_padrao), arquivo, default_flow_style=False,
                           allow_unicode=True, sort_keys=False)

        logger.info(f"Arquivo de configuração padrão criado em: {caminho}")

    def atualizar_config_cli(self, args: Dict[str, Any]) -> None:
        """
        Atualiza o cenário a partir de argumentos CLI.

        Args:
            args: Dicionário com argumentos da linha de comando
        """
        alteracoes = {}

        if args.get('sementes'):
            alteracoes['sementes'] = list(range(1, args['sementes'] + 1))

        if args.get('requisicoes'):
            alteracoes['num_requisicoes'] = args['requisicoes']

        if args.get('carga'):
            alteracoes['carga_erlang'] = args['carga']

        if alteracoes:
            # Revalida pelo mesmo caminho do arquivo
            dados = config_para_dict(self.config)
            dados['cenario'].update(alteracoes)
            self.config = interpretar_config(yaml.safe_dump(dados))
            logger.info(f"Configuração atualizada com argumentos CLI: {sorted(alteracoes)}")
