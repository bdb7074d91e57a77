"""
Brute-Force Oracle.

Ground truth for f(n,m) at small n: enumerate every labeled graph on n
vertices, as a subset of the binom(n,2) possible edges, and take the largest
sum of squared degrees. Degrees are computed for whole blocks of edge masks at
once with numpy; block ranges may be spread over a process pool, and the
per-block maxima are reduced with an associative max.
"""

import logging
import multiprocessing as mp
from dataclasses import dataclass
from itertools import combinations, islice
from typing import List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..constructions import DegreeSequence
from ..errors import OracleCapExceededError
from ..exact_core import binom2, validate_counts

logger = logging.getLogger(__name__)

DEFAULT_CAP = 7
HARD_LIMIT = 8
DEFAULT_CHUNK_SIZE = 1 << 18


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive maximum of the sum of squared degrees for one (n, m)."""

    n: int
    m: int
    max_value: int
    witness: DegreeSequence


def _edge_pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


def _incidence(n: int) -> np.ndarray:
    """(binom(n,2), n) edge-vertex incidence matrix."""
    pairs = _edge_pairs(n)
    inc = np.zeros((len(pairs), n), dtype=np.int32)
    for i, (u, v) in enumerate(pairs):
        inc[i, u] = 1
        inc[i, v] = 1
    return inc


def _witness_from_mask(n: int, mask: int) -> DegreeSequence:
    degrees = [0] * n
    for i, (u, v) in enumerate(_edge_pairs(n)):
        if mask >> i & 1:
            degrees[u] += 1
            degrees[v] += 1
    return DegreeSequence(tuple(degrees))


def _sweep_chunk(args: Tuple[int, int, int]) -> Tuple[np.ndarray, np.ndarray]:
    """Per-popcount best value and mask over masks lo..hi-1."""
    n, lo, hi = args
    inc = _incidence(n)
    n_edges = inc.shape[0]
    masks = np.arange(lo, hi, dtype=np.int64)
    shifts = np.arange(n_edges, dtype=np.int64)
    bits = ((masks[:, None] >> shifts[None, :]) & 1).astype(np.int32)
    degrees = bits @ inc
    sums = (degrees * degrees).sum(axis=1)
    popcount = bits.sum(axis=1)

    best_value = np.full(n_edges + 1, -1, dtype=np.int64)
    best_mask = np.full(n_edges + 1, -1, dtype=np.int64)
    for m in np.unique(popcount):
        selected = np.flatnonzero(popcount == m)
        i = selected[np.argmax(sums[selected])]
        best_value[m] = sums[i]
        best_mask[m] = masks[i]
    return best_value, best_mask


class BruteForceOracle:
    """Exhaustive maximizer of the sum of squared degrees."""

    def __init__(self, cap: int = DEFAULT_CAP, allow_large: bool = False,
                 chunk_size: int = DEFAULT_CHUNK_SIZE, jobs: int = 1, progress: bool = False):
        """Initialize the oracle.

        Args:
            cap: Largest n enumerated without allow_large
            allow_large: Permit n up to HARD_LIMIT
            chunk_size: Masks (or edge subsets) handled per numpy block
            jobs: Worker processes for brute_force_sweep (1 = in-process)
            progress: Show a tqdm progress bar
        """
        self.cap = cap
        self.allow_large = allow_large
        self.chunk_size = chunk_size
        self.jobs = jobs
        self.progress = progress

    def _check_cap(self, n: int) -> None:
        if n > HARD_LIMIT:
            raise OracleCapExceededError(f"oracle cap exceeded: n={n} is above the hard limit {HARD_LIMIT}")
        if n > self.cap:
            if not self.allow_large:
                raise OracleCapExceededError(
                    f"oracle cap exceeded: n={n} > cap {self.cap} (pass allow_large to override)"
                )
            logger.warning(
                f"Enumerating 2^{binom2(n)} edge sets for n={n}; expect a long run"
            )
        # degree-square sums are accumulated in int32
        assert n * (n - 1) ** 2 < 2 ** 31

    def max(self, n: int, m: int) -> OracleResult:
        """Exhaustive maximum over all binom(binom(n,2), m) edge subsets.

        Args:
            n: Vertex count, 1 <= n <= cap
            m: Edge count, 0 <= m <= binom(n,2)

        Returns:
            OracleResult with the maximum and a witness degree sequence
        """
        validate_counts(n, m)
        self._check_cap(n)
        inc = _incidence(n)
        subsets = combinations(range(inc.shape[0]), m)

        best_value = -1
        best_degrees: Optional[Tuple[int, ...]] = None
        while True:
            block = list(islice(subsets, self.chunk_size))
            if not block:
                break
            idx = np.array(block, dtype=np.int64).reshape(len(block), m)
            degrees = np.zeros((len(block), n), dtype=np.int32)
            for j in range(m):
                degrees += inc[idx[:, j]]
            sums = (degrees * degrees).sum(axis=1)
            i = int(np.argmax(sums))
            if int(sums[i]) > best_value:
                best_value = int(sums[i])
                best_degrees = tuple(int(d) for d in degrees[i])

        return OracleResult(n=n, m=m, max_value=best_value, witness=DegreeSequence(best_degrees))

    def sweep(self, n: int) -> List[OracleResult]:
        """Maxima for every m = 0..binom(n,2) in one pass over all 2^binom(n,2) masks."""
        validate_counts(n, 0)
        self._check_cap(n)
        n_edges = binom2(n)
        total = 1 << n_edges
        bounds = [(n, lo, min(lo + self.chunk_size, total)) for lo in range(0, total, self.chunk_size)]
        logger.info(f"Oracle sweep n={n}: {total} edge masks in {len(bounds)} blocks")

        best_value = np.full(n_edges + 1, -1, dtype=np.int64)
        best_mask = np.full(n_edges + 1, -1, dtype=np.int64)

        def reduce(partial: Tuple[np.ndarray, np.ndarray]) -> None:
            values, masks = partial
            # strict improvement keeps the lowest mask among equal maxima
            better = values > best_value
            best_value[better] = values[better]
            best_mask[better] = masks[better]

        bar = tqdm(total=len(bounds), desc=f"oracle n={n}", disable=not self.progress)
        if self.jobs > 1 and len(bounds) > 1:
            with mp.Pool(self.jobs) as pool:
                for partial in pool.imap(_sweep_chunk, bounds):
                    reduce(partial)
                    bar.update()
        else:
            for args in bounds:
                reduce(_sweep_chunk(args))
                bar.update()
        bar.close()

        return [
            OracleResult(n=n, m=m, max_value=int(best_value[m]),
                         witness=_witness_from_mask(n, int(best_mask[m])))
            for m in range(n_edges + 1)
        ]


def brute_force_max(n: int, m: int, cap: int = DEFAULT_CAP, allow_large: bool = False) -> OracleResult:
    """Exhaustive maximum of the sum of squared degrees at (n, m)."""
    return BruteForceOracle(cap=cap, allow_large=allow_large).max(n, m)


def brute_force_sweep(n: int, cap: int = DEFAULT_CAP, allow_large: bool = False,
                      jobs: int = 1) -> List[OracleResult]:
    """Exhaustive maxima for every m at vertex count n."""
    return BruteForceOracle(cap=cap, allow_large=allow_large, jobs=jobs).sweep(n)
