"""One test per acceptance criterion.

Each runs the matching ``verify`` checks at a fixed seed, asserts that they
pass within the time budget and records a summary line for the terminal
report (see ``conftest.py``).
"""

import json
import time

import pytest

from conftest import ACCEPTANCE_LINES
from maharam.verify import run_suite

SEED = 7

CRITERIA = {
    1: ("ordinal", ("nat_sum_algebra", "nat_sum_inductive"), 10),
    2: ("galvin", ("galvin_monotone", "galvin_root_union_irreflexive", "galvin_finite_height", "galvin_tree"), 5),
    3: ("games", ("schreier_player_I", "schreier_player_II"), 60),
    4: ("games", ("palpha_player_I", "palpha_player_II", "palpha_exhaustive"), 60),
    5: ("games", ("oplus_and_power",), 30),
    6: ("norms", ("roberts", "gap"), 30),
    7: ("norms", ("norm_oracle",), 60),
    8: ("submeasure", ("toy_axioms", "toy_tables_vs_definitions"), 600),
    9: ("submeasure", ("covering_sequences", "thinness_property", "transport"), 600),
    10: ("rank", ("premises", "strategy_engine"), 300),
    11: (None, (("submeasure", "constants"), ("rank", "bounds")), 1),
    12: ("rank", ("rank_oracle", "rank_closed_forms", "rank_scaling"), 60),
}


def _run(suite, names):
    if suite is not None:
        return run_suite(suite, SEED, only=names)
    out = []
    for s, name in names:
        out += run_suite(s, SEED, only=(name,))
    return out


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    suite, names, budget = CRITERIA[n]
    start = time.perf_counter()
    checks = _run(suite, names)
    elapsed = time.perf_counter() - start
    failed = [c for c in checks if not c.passed]
    ok = len(checks) == len(names) and not failed and elapsed < budget
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {n}: {status} ({len(checks)} checks, {elapsed:.1f}s, budget {budget}s)")
    assert len(checks) == len(names), "missing checks"
    assert not failed, json.dumps([c.to_json() for c in failed], indent=2, default=str)
    assert elapsed < budget, f"{elapsed:.1f}s over the {budget}s budget"
