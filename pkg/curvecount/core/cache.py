# curvecount/core/cache.py

import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Dict

from pydantic import RootModel, ValidationError, field_validator

from curvecount.core.errors import CacheError

logger = logging.getLogger(__name__)


class CacheFile(RootModel[Dict[str, str]]):
    """Conteúdo do cache: {"grau": "n_d"}, tudo em strings decimais."""

    @field_validator("root")
    @classmethod
    def validate_entries(cls, v):
        for key, value in v.items():
            if not (key.isascii() and key.isdecimal()) or int(key) < 1:
                raise ValueError(f"Grau inválido no cache: {key!r}")
            if not (value.isascii() and value.isdecimal()):
                raise ValueError(f"Valor inválido no cache para d={key}: {value!r}")
        if "1" in v and int(v["1"]) != 1:
            raise ValueError(f"n_1 deve ser 1, cache tem {v['1']}")
        return v

    def to_table(self) -> Dict[int, int]:
        return {int(k): int(v) for k, v in self.root.items()}

    @classmethod
    def from_table(cls, values: Dict[int, int]) -> "CacheFile":
        return cls({str(d): str(values[d]) for d in sorted(values)})


def load_cache(path: Path) -> Dict[int, int]:
    """
    Ler o cache. Arquivo ausente = início a frio.

    Raises:
        CacheError: Arquivo ilegível, JSON inválido ou entradas inválidas
    """
    path = Path(path)
    if not path.exists():
        logger.info("Cache %s não existe; começando do zero", path)
        return {}
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
        table = CacheFile.model_validate(raw).to_table()
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise CacheError(f"Cache {path} corrompido: {e}") from e
    except ValidationError as e:
        raise CacheError(f"Cache {path} com valores inválidos: {e}") from e
    except OSError as e:
        raise CacheError(f"Cache {path} ilegível: {e}") from e
    logger.info("Cache %s carregado (%d entradas)", path, len(table))
    return table


def save_cache(path: Path, values: Dict[int, int]) -> None:
    """Gravar o cache de forma atômica (arquivo temporário + os.replace)."""
    path = Path(path)
    payload = CacheFile.from_table(values).model_dump()
    tmp_name = None
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
        os.replace(tmp_name, path)
    except OSError as e:
        if tmp_name is not None and os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise CacheError(f"Não foi possível gravar o cache {path}: {e}") from e
    logger.info("Cache %s gravado (%d entradas)", path, len(values))
