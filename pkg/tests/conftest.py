import sys
from pathlib import Path

# Adicionar a raiz do repositório ao sys.path
current_path = Path(__file__).parent.parent
sys.path.insert(0, str(current_path))

import importlib

import pytest

try:
    from curvecount.main import main
    charnum_module = importlib.import_module("curvecount.models.charnum")
    from curvecount.models.graded_ring import Ring
    from curvecount.models.kontsevich import MemoTable
except ImportError as e:
    print(f"Erro ao importar módulos: {e}")
    print(f"Caminho atual: {current_path}")
    print(f"sys.path: {sys.path}")
    raise


# ============================================================================
# ANÉIS
# ============================================================================

@pytest.fixture
def p1_p2() -> Ring:
    """P¹ × P² (y² = 0, a³ = 0)."""
    return charnum_module.P1_P2


@pytest.fixture
def p2_p2() -> Ring:
    """P² × P²."""
    return charnum_module.P2_P2


@pytest.fixture
def p3_p2() -> Ring:
    """P³ × P²."""
    return charnum_module.P3_P2


@pytest.fixture
def p3_p2_pt() -> Ring:
    """P³ × P² estendido por λ com c(TP²)."""
    return charnum_module.P3_P2_PT


# ============================================================================
# TABELA DE n_d E CACHE
# ============================================================================

@pytest.fixture
def memo_table() -> MemoTable:
    """Tabela isolada, para não depender da tabela global."""
    return MemoTable()


@pytest.fixture
def cache_path(tmp_path) -> Path:
    """Caminho de cache ainda inexistente."""
    return tmp_path / "cache" / "nd.json"


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """Sem variáveis CURVECOUNT_* e sem .env no diretório corrente."""
    for key in ("CURVECOUNT_CACHE", "CURVECOUNT_LOG_LEVEL", "CURVECOUNT_FORMAT", "CURVECOUNT_MAX_DEGREE"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return monkeypatch


@pytest.fixture
def run_cli(clean_env, capsys):
    """Executar a CLI e devolver (código, stdout, stderr)."""
    def _run(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run
