# -*- coding: utf-8 -*-
"""
Environment driven settings for lowreg
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"'{name}' must be an integer, got {value!r}")


# worker threads used for independent ladder jobs
threads = max(1, _int_env('LOWREG_THREADS', 1))

# largest N the brute-force oracles accept per dimension
oracle_cap_1d = _int_env('LOWREG_ORACLE_CAP_1D', 32)
oracle_cap_2d = _int_env('LOWREG_ORACLE_CAP_2D', 8)

log_level = os.getenv('LOWREG_LOG_LEVEL', 'INFO')
