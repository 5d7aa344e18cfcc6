"""Opt-in expensive invariant checks, controlled by KANGULATE_DEBUG_ASSERTS."""
from __future__ import annotations

import os


def debug_asserts_enabled() -> bool:
    return os.environ.get("KANGULATE_DEBUG_ASSERTS", "") == "1"
