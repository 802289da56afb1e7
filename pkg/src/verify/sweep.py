"""
Intensity Efficiency - Sweep Runner
Chunked, optionally parallel and resumable existence sweeps
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from src.core.constants import (
    DEFAULT_CHUNK_SIZE, DEFAULT_FULL_BUDGET, RANDOM_SWEEP_SIZES, IterationMode
)
from src.core.logger import get_logger
from src.enumeration.profiles import ProfileIterator, profile_iterator
from src.enumeration.relations import ProblemSizeError
from src.verify.existence import ExistenceReport, check_profiles

Chunk = Tuple[int, int]


class CheckpointError(ValueError):
    """A checkpoint file written for a different sweep."""


@dataclass(frozen=True)
class SweepConfig:
    """Everything a worker process needs to rebuild its iterator."""
    n: int
    mode: str
    seed: Optional[int]
    count: int
    budget: int

    @classmethod
    def of(cls, iterator: ProfileIterator) -> 'SweepConfig':
        return cls(iterator.n, iterator.mode.value, iterator.seed, iterator.count, iterator.budget)

    def iterator(self) -> ProfileIterator:
        return ProfileIterator(self.n, IterationMode(self.mode), seed=self.seed,
                               count=self.count, budget=self.budget)


def plan_chunks(iterator: ProfileIterator, chunk_size: int) -> List[Chunk]:
    # A symmetry-mode index is an (r1, r2) prefix that expands into many tails
    if iterator.mode == IterationMode.SYMMETRY:
        chunk_size = max(1, chunk_size // iterator.relation_count)
    total = iterator.space_size()
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def run_chunk(config: SweepConfig, chunk: Chunk) -> ExistenceReport:
    """Worker entry point; module level so process pools can pickle it."""
    start, stop = chunk
    return check_profiles(config.iterator().iterate(start, stop), config.n, config.mode)


# =============================================================================
# CHECKPOINTS
# =============================================================================
def load_checkpoint(path: str, config: SweepConfig) -> Dict[Chunk, ExistenceReport]:
    if not os.path.exists(path):
        return {}
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        get_logger().error(f"Invalid JSON in checkpoint {path}: {e}")
        raise
    except OSError as e:
        get_logger().error(f"Failed to read checkpoint {path}: {e}", exc_info=True)
        raise

    if data.get("config") != asdict(config):
        raise CheckpointError(f"checkpoint {path} belongs to a different sweep: {data.get('config')}")
    done = {}
    for entry in data.get("chunks", []):
        done[(entry["start"], entry["stop"])] = ExistenceReport.from_dict(entry["report"])
    get_logger().info(f"Resuming from {path}: {len(done)} chunks already done")
    return done


def save_checkpoint(path: str, config: SweepConfig, done: Dict[Chunk, ExistenceReport]):
    data = {
        "config": asdict(config),
        "chunks": [{"start": start, "stop": stop, "report": done[(start, stop)].to_dict()}
                   for start, stop in sorted(done)],
    }
    temp = f"{path}.tmp"
    try:
        with open(temp, 'w', encoding='utf-8') as f:
            json.dump(data, f)
        os.replace(temp, path)
    except OSError as e:
        get_logger().error(f"Failed to write checkpoint {path}: {e}", exc_info=True)
        raise


# =============================================================================
# RUNNER
# =============================================================================
def run_sweep(iterator: ProfileIterator, jobs: int = 1, checkpoint: Optional[str] = None,
              chunk_size: int = DEFAULT_CHUNK_SIZE, progress: bool = False) -> ExistenceReport:
    """
    Check every profile the iterator yields, split into index-range chunks.

    The merged report does not depend on `jobs` or on the chunk order. With a
    checkpoint path, finished chunks are stored after each completion and
    skipped when the same sweep is started again.
    """
    config = SweepConfig.of(iterator)
    done = load_checkpoint(checkpoint, config) if checkpoint else {}
    chunks = plan_chunks(iterator, chunk_size)
    logger = get_logger()
    stale = set(done) - set(chunks)
    if stale:
        logger.warning(f"Dropping {len(stale)} checkpoint chunks planned with another chunk size")
        done = {c: r for c, r in done.items() if c not in stale}
    pending = [c for c in chunks if c not in done]
    logger.info(f"Sweep n={config.n} mode={config.mode}: {len(chunks)} chunks, "
                f"{len(pending)} pending, jobs={jobs}")

    def record(chunk: Chunk, report: ExistenceReport):
        done[chunk] = report
        logger.debug(f"Chunk {chunk[0]}..{chunk[1]}: {report.summary_line()}")
        if checkpoint:
            save_checkpoint(checkpoint, config, done)

    with tqdm(total=len(chunks), initial=len(chunks) - len(pending), unit="chunk",
              desc=f"n={config.n} {config.mode}", disable=not progress) as bar:
        if jobs <= 1:
            for chunk in pending:
                record(chunk, run_chunk(config, chunk))
                bar.update(1)
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = {pool.submit(run_chunk, config, chunk): chunk for chunk in pending}
                for future in as_completed(futures):
                    record(futures[future], future.result())
                    bar.update(1)

    report = ExistenceReport(config.n, config.mode)
    for chunk in sorted(done):
        report = report.merge(done[chunk])
    logger.info(f"Sweep n={config.n} mode={config.mode} finished: {report.summary_line()}")
    return report


def verify_existence_exhaustive(n: int, budget: int = DEFAULT_FULL_BUDGET,
                                symmetry: bool = False, jobs: int = 1,
                                checkpoint: Optional[str] = None,
                                chunk_size: int = DEFAULT_CHUNK_SIZE,
                                progress: bool = False) -> ExistenceReport:
    """
    Check every profile for n, or one representative per symmetry orbit.

    Raises:
        ProfileBudgetError: if a full sweep would exceed `budget`
        ProblemSizeError: if symmetry reduction is asked for above its supported n
    """
    mode = IterationMode.SYMMETRY if symmetry else IterationMode.FULL
    iterator = profile_iterator(n, mode, budget=budget)
    return run_sweep(iterator, jobs=jobs, checkpoint=checkpoint,
                     chunk_size=chunk_size, progress=progress)


def verify_existence_random(n: int, samples: int, seed: int, jobs: int = 1,
                            checkpoint: Optional[str] = None,
                            chunk_size: int = DEFAULT_CHUNK_SIZE,
                            progress: bool = False) -> ExistenceReport:
    """Check `samples` uniformly drawn profiles; sample t always uses stream (seed, t)."""
    if n not in RANDOM_SWEEP_SIZES:
        raise ProblemSizeError(f"random sweeps support n in {RANDOM_SWEEP_SIZES}, got n={n}")
    iterator = profile_iterator(n, IterationMode.RANDOM, seed=seed, count=samples)
    return run_sweep(iterator, jobs=jobs, checkpoint=checkpoint,
                     chunk_size=chunk_size, progress=progress)
