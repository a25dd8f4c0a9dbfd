from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from dotenv import load_dotenv

from .Generation import DEFAULT_MAX_ORDER, DEFAULT_SPLIT_DEPTH


@dataclass
class Settings:
    """Run settings, read from the environment or a .env file.

    Attributes:
        max_order (int): Generation ceiling (SNARKFORGE_MAX_ORDER). Defaults to 22.
        workers (int): Default worker count (SNARKFORGE_WORKERS). Defaults to 1.
        log_level (str): Loguru level for the CLI sink (SNARKFORGE_LOG_LEVEL). Defaults to INFO.
        split_depth (int): Edges placed before the generator splits into subtrees
            (SNARKFORGE_SPLIT_DEPTH). Defaults to 6.
    """

    max_order: int = DEFAULT_MAX_ORDER
    workers: int = 1
    log_level: str = "INFO"
    split_depth: int = DEFAULT_SPLIT_DEPTH

    @classmethod
    def from_env(cls, env_file: Optional[Union[str, Path]] = ".env") -> Settings:
        """Build settings from environment variables.

        Args:
            env_file (Optional[Union[str, Path]], optional): .env file to load first; missing
                files are ignored and variables already set win. Defaults to ".env".

        Returns:
            Settings: The settings.
        """
        if env_file:
            load_dotenv(env_file)
        return cls(
            max_order=int(os.getenv("SNARKFORGE_MAX_ORDER", DEFAULT_MAX_ORDER)),
            workers=int(os.getenv("SNARKFORGE_WORKERS", 1)),
            log_level=os.getenv("SNARKFORGE_LOG_LEVEL", "INFO"),
            split_depth=int(os.getenv("SNARKFORGE_SPLIT_DEPTH", DEFAULT_SPLIT_DEPTH)),
        )
