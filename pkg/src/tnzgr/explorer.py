"""Randomized witness search for strata, with persistent certificate stores.

For m >= 3 no closed-form enumeration of the strata is known, so this
module samples integer matrices, records each newly seen stratum together
with the witness matrix that produced it, and classifies the finds into
relabeling orbits.  Every reported orbit count for m >= 3 is a lower
bound on the truth: sampling proves presence, never absence.

Sampling is a pure function of (seed, sample index) via the SplitMix64
stream documented in tnzgr.prng, so runs are reproducible byte-for-byte,
chunked across processes or not.
"""

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .counting import orbit_partition
from .linalg import RationalMatrix, matrix_from_obj
from .pluecker import SignVector, Stratum, ZeroMinorError, canonicalize, sign_vector, three_term_feasible
from .prng import MASK64, matrix_entries

DEFAULT_BOUND = 50
_CHUNK = 1 << 16


@dataclass(frozen=True)
class SampleConfig:
    m: int
    n: int
    samples: int
    seed: int
    entry_bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need n >= m >= 1, got m={self.m}, n={self.n}")
        if self.entry_bound < 1:
            raise ValueError("entry bound must be >= 1")
        if self.samples < 1:
            raise ValueError("sample budget must be >= 1")
        object.__setattr__(self, "seed", self.seed & MASK64)


@dataclass(frozen=True)
class StoredStratum:
    signs: str
    witness: RationalMatrix
    seed: int
    sample: int


@dataclass
class ExploreTally:
    samples: int = 0
    accepted: int = 0
    rejected: int = 0
    new: int = 0
    seen: int = 0


@dataclass
class StrataStore:
    m: int
    n: int
    found: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.found)

    def strata(self):
        return [Stratum(SignVector(self.n, self.m, _bits_of(s))) for s in sorted(self.found)]


def _bits_of(signs):
    bits = 0
    for r, ch in enumerate(signs):
        if ch == "-":
            bits |= 1 << r
    return bits


def sample_generic_matrix(cfg, k):
    """Integer matrix for sample index k, or None when some minor vanishes."""
    flat = matrix_entries(cfg.seed, k, cfg.m, cfg.n, cfg.entry_bound)
    mat = RationalMatrix.from_rows([flat[i * cfg.n : (i + 1) * cfg.n] for i in range(cfg.m)])
    try:
        sign_vector(mat)
    except ZeroMinorError:
        return None
    return mat


def _scan_chunk(args):
    seed, k0, k1, m, n, bound = args
    return kernels.scan_samples(seed, k0, k1, m, n, bound)


def explore(cfg, store=None):
    """Run the sampling budget, recording unseen strata with their witnesses.

    Returns (store, tally).  Re-running with the same config is idempotent
    on the store; the found set only ever grows.  Honors TNZGR_THREADS for
    multi-process scanning (the result does not depend on it).
    """
    if store is None:
        store = StrataStore(cfg.m, cfg.n)
    if (store.m, store.n) != (cfg.m, cfg.n):
        raise ValueError(f"store is for m={store.m}, n={store.n}; config wants m={cfg.m}, n={cfg.n}")
    chunks = [(cfg.seed, k0, min(k0 + _CHUNK, cfg.samples), cfg.m, cfg.n, cfg.entry_bound) for k0 in range(0, cfg.samples, _CHUNK)]
    threads = int(os.environ.get("TNZGR_THREADS", "1") or "1")
    if threads > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_chunk, chunks))
    else:
        results = [_scan_chunk(c) for c in chunks]
    accepted = 0
    first_seen = {}
    for n_ok, found in results:  # chunk order keeps first_seen at the minimum index
        accepted += n_ok
        for bits, k in found.items():
            first_seen.setdefault(bits, k)
    tally = ExploreTally(samples=cfg.samples, accepted=accepted, rejected=cfg.samples - accepted)
    for bits, k in sorted(first_seen.items(), key=lambda item: item[1]):
        key = SignVector(cfg.n, cfg.m, bits).to_string()
        if key in store.found:
            continue
        _insert_validated(store, cfg, key, k)
        tally.new += 1
    tally.seen = accepted - tally.new
    return store, tally


def _insert_validated(store, cfg, key, k):
    # exact-arithmetic revalidation of the fast scan before anything is persisted
    witness = sample_generic_matrix(cfg, k)
    if witness is None:
        raise RuntimeError(f"sample {k} was accepted by the scan kernel but has a zero minor")
    exact = canonicalize(sign_vector(witness)).to_string()
    if exact != key:
        raise RuntimeError(f"sample {k}: scan kernel sign vector {key} != exact recomputation {exact}")
    if not three_term_feasible(SignVector(cfg.n, cfg.m, _bits_of(key))):
        raise RuntimeError(f"realized stratum {key} fails the three-term sign condition; arithmetic bug")
    store.found[key] = StoredStratum(signs=key, witness=witness, seed=cfg.seed, sample=k)


def classify_found(store, group):
    """Orbit partition of the found strata; a lower bound on classes for m >= 3."""
    if not store.found:
        raise ValueError("store holds no strata to classify")
    return orbit_partition(store.strata(), group, store.n)


def validate_store(store):
    """Re-check every certificate: witness reproduces its key, key is feasible."""
    for key, entry in store.found.items():
        if canonicalize(sign_vector(entry.witness)).to_string() != key:
            raise ValueError(f"stored witness for {key} does not reproduce its sign vector")
        if not three_term_feasible(SignVector(store.n, store.m, _bits_of(key))):
            raise ValueError(f"stored stratum {key} fails the three-term sign condition")
    return len(store.found)


def store_to_json(store):
    """Deterministic serialization: strata sorted by sign string, fixed layout."""
    obj = {
        "m": store.m,
        "n": store.n,
        "strata": [
            {
                "signs": entry.signs,
                "witness": json.loads(entry.witness.to_json()),
                "seed": entry.seed,
                "sample": entry.sample,
            }
            for _, entry in sorted(store.found.items())
        ],
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def store_from_json(text):
    obj = json.loads(text)
    if not isinstance(obj, dict) or not {"m", "n", "strata"} <= set(obj):
        raise ValueError('store file must be an object with keys "m", "n", "strata"')
    store = StrataStore(obj["m"], obj["n"])
    for item in obj["strata"]:
        entry = StoredStratum(
            signs=item["signs"],
            witness=matrix_from_obj(item["witness"]),
            seed=item["seed"],
            sample=item["sample"],
        )
        store.found[entry.signs] = entry
    return store


def load_store_file(path):
    with open(path, encoding="utf-8") as handle:
        return store_from_json(handle.read())


def save_store_file(store, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(store_to_json(store))
