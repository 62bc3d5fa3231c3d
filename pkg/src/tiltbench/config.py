"""Run configuration: one seed drives every randomized subroutine."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class WorkbenchConfig:
    seed: int = 0
    max_path_len: int = 30


DEFAULT = WorkbenchConfig()
