"""
Erros do domínio das transformadas.

Cada erro carrega um `detail` legível e o código de saída usado pela CLI,
do mesmo jeito que HTTPException carrega status_code e detail.
"""


class TransformError(Exception):
    """Erro base do projeto"""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    @property
    def name(self) -> str:
        return type(self).__name__


class NonUniformGrid(TransformError):
    """Pontos que não formam uma grade uniforme"""


class TooShort(TransformError):
    """Menos de 2 pontos para recuperar a grade"""


class GridTooShort(TransformError):
    """Caminho FFT chamado com N < 2"""


class OffGridStart(TransformError):
    """Início pedido fora da rede de espaçamento natural"""


class MisalignedOrigin(TransformError):
    """Origem da grade não é múltiplo inteiro do espaçamento"""


class UnsupportedConvention(TransformError):
    """Referência analítica pedida numa convenção sem forma fechada"""


class SizeTooLarge(TransformError):
    """Tamanho acima do limite do método ingênuo no benchmark"""


class BenchConfigError(TransformError):
    """Parâmetros inválidos para o benchmark"""


class MissingPair(TransformError):
    """Tamanho sem o par riemann_fft / bare_fft"""


class OracleMismatch(TransformError):
    """Caminho FFT divergiu da soma direta"""


class ParseError(TransformError):
    """Linha malformada num arquivo CSV"""

    def __init__(self, detail: str, line: int):
        super().__init__(f"linha {line}: {detail}")
        self.line = line


class CsvIoError(TransformError):
    """Falha de leitura/escrita de arquivo"""
