# curvecount/core/errors.py

from typing import Optional

# Códigos de saída da CLI
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


# ============================================================================
# ERROS DO NÚCLEO DE CÁLCULO
# ============================================================================

class RingError(ValueError):
    """Especificação de anel inválida ou operação entre anéis diferentes."""


class BundleError(ValueError):
    """Fibrado formal inválido."""


class PairingError(ValueError):
    """Classe com grau maior que a dimensão do ciclo."""


class DegreeError(ValueError):
    """Grau fora do intervalo de validade de uma fórmula."""

    def __init__(self, detail: str, min_degree: Optional[int] = None):
        super().__init__(detail)
        self.min_degree = min_degree


class NonExactDivisionError(ArithmeticError):
    """Quociente por simetria que não resulta em valores inteiros."""


class IntegralityError(ArithmeticError):
    """A recursão produziu um número não inteiro."""


class InconsistencyError(RuntimeError):
    """Duas fórmulas (ou fontes da memo) discordam."""


class CacheError(RuntimeError):
    """Arquivo de cache ilegível ou com valores inválidos."""


# ============================================================================
# ERRO DA CAMADA DE COMANDOS
# ============================================================================

class CommandError(Exception):
    """
    Erro de comando com código de saída.
    Carrega o código de saída e a mensagem para o usuário.
    """

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail
