"""
Hierarquia de exceções do Contorno Duplo.

Todas as exceções de domínio carregam o atributo ``codigo`` (nome da classe),
usado pela linha de comando para compor a mensagem de erro.
"""


class ContornoError(Exception):
    """Erro base do sistema de dois contornos."""

    @property
    def codigo(self) -> str:
        return type(self).__name__


class ParamsValidationError(ContornoError, ValueError):
    """Parâmetros (n, l1, l2, d) fora dos limites admitidos."""


class NOutOfRange(ParamsValidationError):
    """n < 2."""


class LengthOutOfRange(ParamsValidationError):
    """Comprimento de cluster fora de [1, n-1]."""


class DOutOfRange(ParamsValidationError):
    """d fora de [1, floor(n/2)]."""


class UnacceptableState(ContornoError, ValueError):
    """Estado fora de [0, n)² ou com os dois clusters ocupando o mesmo nó."""


class GoldenCorpusError(ContornoError):
    """Corpus de sequências de referência malformado."""
