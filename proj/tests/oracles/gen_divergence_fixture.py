#!/usr/bin/env python3
# Copyright 2026 The emojilab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Freezes divergence metric values computed with scipy / plain Python.

Run from the repository root:  python3 tests/oracles/gen_divergence_fixture.py
"""

import json
import math

import numpy as np
from scipy.spatial.distance import jensenshannon


def rbo_ext(a, b, p):
    k = min(len(a), len(b))
    x = [len(set(a[:d]) & set(b[:d])) for d in range(1, k + 1)]
    tail = x[k - 1] / k * p ** k
    return tail + (1 - p) / p * sum(x[d - 1] / d * p ** d for d in range(1, k + 1))


def rbo_trunc(a, b, p):
    k = min(len(a), len(b))
    return (1 - p) * sum(len(set(a[:d]) & set(b[:d])) / d * p ** (d - 1)
                         for d in range(1, k + 1))


def main():
    rng = np.random.default_rng(20261018)
    cases = []
    for _ in range(60):
        n = int(rng.integers(1, 21))
        p = rng.random(n) * (rng.random(n) < 0.8)
        q = rng.random(n) * (rng.random(n) < 0.8)
        if p.sum() == 0:
            p[0] = 1.0
        if q.sum() == 0:
            q[-1] = 1.0
        p /= p.sum()
        q /= q.sum()
        items = [f"e{i}" for i in range(n + 5)]
        ra = list(rng.permutation(items))[:n]
        rb = list(rng.permutation(items))[:n]
        persistence = float(rng.uniform(0.5, 0.98))
        cases.append({
            "p": p.tolist(), "q": q.tolist(),
            "jsd": float(jensenshannon(p, q, base=2)),
            "tv": float(0.5 * np.abs(p - q).sum()),
            "bc": float(np.sqrt(p * q).sum()),
            "rank_a": ra, "rank_b": rb, "persistence": persistence,
            "rbo_ext": rbo_ext(ra, rb, persistence),
            "rbo_trunc": rbo_trunc(ra, rb, persistence),
        })
    with open("tests/data/divergence_oracle.json", "w") as f:
        json.dump({"generator": "scipy.spatial.distance.jensenshannon base=2",
                   "cases": cases}, f, indent=0)


if __name__ == "__main__":
    main()
