import json

import pytest

from drumwidth.family import D1_MOTIF, SANTOS_MOTIF
from drumwidth.search import REASONS, SearchConfig, evaluate_motif, records_to_jsonl, run_search, sample_motif


def test_planted_motifs():
    r = evaluate_motif(D1_MOTIF)
    assert (r.outcome, r.width, r.n_vertices, r.simplicial) == ("width", 6, 40, True)
    r = evaluate_motif(SANTOS_MOTIF)
    assert (r.outcome, r.width, r.simplicial) == ("width", 6, False)


def test_rejections():
    assert evaluate_motif([(0, 0, 0, 0, 1)]).outcome == "NotFullDim"
    assert evaluate_motif(D1_MOTIF, max_vertices=10).outcome == "BudgetExceeded"


def test_sampling_deterministic():
    cfg = SearchConfig(seed=7)
    assert sample_motif(cfg, 3) == sample_motif(SearchConfig(seed=7), 3)
    assert sample_motif(cfg, 3) != sample_motif(SearchConfig(seed=8), 3)
    for p in sample_motif(cfg, 3):
        assert p[-1] == 1 and len(p) == 5


def test_small_run_records():
    recs = run_search(SearchConfig(seed=3, budget=8))
    assert [r.index for r in recs] == list(range(8))
    assert all(r.outcome in REASONS for r in recs)
    lines = records_to_jsonl(recs).splitlines()
    assert len(lines) == 8 and all("seconds" not in json.loads(x) for x in lines)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(big_range=(5, 1))
    with pytest.raises(ValueError):
        SearchConfig(patterns=[("BIG", "HUGE", "ZERO", "ZERO")])
    cfg = SearchConfig.from_json({"seed": 2, "budget": 3, "big_range": [80, 90]})
    assert cfg.big_range == (80, 90)
