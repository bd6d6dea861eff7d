# curvecount/core/config.py

from pathlib import Path
from typing import Literal, Optional

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """
    Configurações da ferramenta.
    Carrega variáveis do ambiente e do arquivo .env
    """

    # Cache da tabela de n_d (JSON grau -> n_d)
    CURVECOUNT_CACHE: Optional[Path] = None

    # Logging (sempre em stderr)
    CURVECOUNT_LOG_LEVEL: str = "WARNING"

    # Formato padrão de saída
    CURVECOUNT_FORMAT: Literal["plain", "json", "csv"] = "plain"

    # Maior grau aceito em `nd --degree`
    CURVECOUNT_MAX_DEGREE: int = 200

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"


# Instância global das configurações
settings = Settings()
