"""Randomised search over sparse, scale-mixed symmetric motifs."""
from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

from ._parallel import parallel_map
from .drum import has_oriented_two_cycle, width
from .errors import DrumWidthError, EmptySkin, NonUniqueMinimum, NotFullDimensional
from .exactcore import rat_str, vec
from .family import build_from_motif

BIG, SMALL, ZERO = "BIG", "SMALL", "ZERO"

DEFAULT_PATTERNS = (
    (BIG, ZERO, ZERO, ZERO),
    (BIG, BIG, ZERO, ZERO),
    (BIG, ZERO, SMALL, ZERO),
    (ZERO, ZERO, SMALL, SMALL),
    (BIG, ZERO, ZERO, SMALL),
    (BIG, SMALL, ZERO, ZERO),
    (ZERO, ZERO, BIG, ZERO),
)


@dataclass
class SearchConfig:
    patterns: tuple = DEFAULT_PATTERNS
    big_range: tuple = (75, 100)
    small_range: tuple = (1, 3)
    size_range: tuple = (3, 5)
    seed: int = 0
    budget: int = 100
    max_vertices: int = 64
    record_time: bool = False

    def __post_init__(self):
        self.patterns = tuple(tuple(p) for p in self.patterns)
        for lo, hi in (self.big_range, self.small_range, self.size_range):
            if lo > hi:
                raise ValueError(f"empty range [{lo}, {hi}]")
        if self.size_range[0] < 1:
            raise ValueError("motifs need at least one point")
        for p in self.patterns:
            if len(p) != 4 or any(s not in (BIG, SMALL, ZERO) for s in p):
                raise ValueError(f"bad pattern {p}")

    @classmethod
    def from_json(cls, obj: dict) -> SearchConfig:
        kw = dict(obj)
        for key in ("big_range", "small_range", "size_range"):
            if key in kw:
                kw[key] = tuple(kw[key])
        return cls(**kw)


def _rng(cfg: SearchConfig, index: int) -> random.Random:
    return random.Random(f"drumwidth-search:{cfg.seed}:{index}")


def sample_motif(cfg: SearchConfig, index: int) -> tuple:
    rng = _rng(cfg, index)
    size = rng.randint(*cfg.size_range)
    pts = []
    for _ in range(size):
        pat = cfg.patterns[rng.randrange(len(cfg.patterns))]
        coords = []
        for slot in pat:
            if slot == BIG:
                coords.append(rng.randint(*cfg.big_range))
            elif slot == SMALL:
                coords.append(rng.randint(*cfg.small_range))
            else:
                coords.append(0)
        pts.append(tuple(coords) + (1,))
    return tuple(pts)


@dataclass
class SearchRecord:
    index: int | None
    motif: list
    outcome: str              # "width" or a rejection reason
    width: int | None = None
    n_vertices: int | None = None
    simplicial: bool | None = None
    seconds: float | None = field(default=None)

    def to_json(self) -> dict:
        out = asdict(self)
        if out["seconds"] is None:
            del out["seconds"]
        return out


REASONS = ("width", "NotFullDim", "EmptySkin", "NonUniqueMinimum", "TwoCycle", "BudgetExceeded", "Error")


def evaluate_motif(motif: Sequence[Sequence], max_vertices: int = 64, index: int | None = None,
                   record_time: bool = False) -> SearchRecord:
    """Build the drum, screen by the two-cycle test, then compute its width."""
    t0 = time.perf_counter()
    m = [[rat_str(c) for c in vec(p)] for p in motif]
    rec = SearchRecord(index, m, "Error")
    try:
        d = build_from_motif(motif)
        rec.n_vertices = d.n
        if d.n > max_vertices:
            rec.outcome = "BudgetExceeded"
        elif has_oriented_two_cycle(d):
            rec.outcome = "TwoCycle"
        else:
            rec.width = width(d)
            rec.simplicial = d.is_simplicial()
            rec.outcome = "width"
    except NotFullDimensional:
        rec.outcome = "NotFullDim"
    except EmptySkin:
        rec.outcome = "EmptySkin"
    except NonUniqueMinimum:
        rec.outcome = "NonUniqueMinimum"
    except DrumWidthError:
        rec.outcome = "Error"
    if record_time:
        rec.seconds = round(time.perf_counter() - t0, 6)
    return rec


def _job(args):
    cfg, index = args
    return evaluate_motif(sample_motif(cfg, index), cfg.max_vertices, index, cfg.record_time)


def run_search(cfg: SearchConfig) -> list[SearchRecord]:
    return parallel_map(_job, [(cfg, i) for i in range(cfg.budget)])


def records_to_jsonl(records: Sequence[SearchRecord]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in records)
