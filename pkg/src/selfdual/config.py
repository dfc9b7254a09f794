"""Guard thresholds for the exhaustive parts of the pipeline.

All heavy checks are bounded so that a stray parameter cannot hang the
process.  The defaults can be overridden per call or globally through the
environment variable ``SELFDUAL_GUARD_OVERRIDE`` whose value is a
comma-separated ``key=value`` list, e.g.::

    SELFDUAL_GUARD_OVERRIDE="codewords=20000000,columns=2000000"

Recognized keys: ``field_size``, ``factor_limit``, ``dlog_limit``,
``codewords``, ``columns``, ``column_work``, ``exhaustive_tier``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

_ENV_VAR = "SELFDUAL_GUARD_OVERRIDE"

_KEY_TO_FIELD = {
    "field_size": "field_size_limit",
    "factor_limit": "factor_limit",
    "dlog_limit": "dlog_limit",
    "codewords": "codeword_limit",
    "columns": "column_limit",
    "column_work": "column_work_limit",
    "exhaustive_tier": "exhaustive_tier_limit",
}


@dataclass(frozen=True)
class GuardConfig:
    # largest admissible field order
    field_size_limit: int = 2**31
    # factorize() refuses integers above this
    factor_limit: int = 2**40
    # brute-force discrete logs only in groups up to this order
    dlog_limit: int = 2**20
    # min_distance_exhaustive() refuses when q**k exceeds this
    codeword_limit: int = 10**7
    # mds_check(exhaustive-columns) refuses when C(n, k) exceeds this
    column_limit: int = 10**6
    # verification tier selection: the columns tier is only chosen
    # automatically when C(n, k) * k**3 stays below this work estimate
    column_work_limit: int = 8 * 10**6
    # verification tier selection: exhaustive distance when q**k <= this
    exhaustive_tier_limit: int = 10**6

    @staticmethod
    def from_env() -> "GuardConfig":
        cfg = GuardConfig()
        raw = os.environ.get(_ENV_VAR, "").strip()
        if not raw:
            return cfg
        overrides = {}
        for part in raw.split(","):
            part = part.strip()
            if not part:
                continue
            key, _, value = part.partition("=")
            field = _KEY_TO_FIELD.get(key.strip())
            if field is None:
                continue
            try:
                overrides[field] = int(value.strip())
            except ValueError:
                continue
        return replace(cfg, **overrides)


def current_guards(guards: "GuardConfig | None" = None) -> GuardConfig:
    """Resolve the guard config for a call: explicit wins over environment."""
    if guards is not None:
        return guards
    return GuardConfig.from_env()
