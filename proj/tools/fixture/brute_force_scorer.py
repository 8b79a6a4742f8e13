#!/usr/bin/env python3
# Copyright 2026 The tensor-verb Authors.
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
"""Independent reference scorer for the fixture.

Rebuilds the space from the raw corpus with plain Python dictionaries,
composes every sentence with numpy (np.kron, np.diag, elementwise
products), and correlates with scipy.stats.spearmanr. Nothing is shared
with the C++ code path. With --check it compares against a JSON report
written by `tensor-verb evaluate --json`.
"""

import argparse
import collections
import json
import sys

import numpy as np
from scipy.stats import spearmanr


def build_space(corpus_path, stoplist, basis_size, window):
    sentences = [l.split() for l in open(corpus_path) if l.strip()]
    freq = collections.Counter(t for s in sentences for t in s)
    cands = sorted((w for w in freq if w not in stoplist),
                   key=lambda w: (-freq[w], w))
    basis = cands[:basis_size]
    bidx = {w: j for j, w in enumerate(basis)}
    counts = collections.defaultdict(lambda: np.zeros(len(basis)))
    for s in sentences:
        for p, t in enumerate(s):
            row = counts[t]
            for q in range(max(0, p - window), min(len(s), p + window + 1)):
                if q != p and s[q] in bidx:
                    row[bidx[s[q]]] += 1
    ctx = sum(counts.values())
    grand = ctx.sum()
    space = {}
    for t, row in counts.items():
        tot = row.sum()
        v = np.zeros(len(basis))
        if tot > 0:
            nz = (row > 0) & (ctx > 0)
            v[nz] = (row[nz] / tot) / (ctx[nz] / grand)
        space[t] = v
    return basis, space


def load_triples(path):
    triples = collections.defaultdict(list)
    for line in open(path):
        if line.startswith("#") or not line.strip():
            continue
        v, s, o, n = line.rstrip("\n").split("\t")
        triples[v].append((s, o, int(n)))
    return triples


def cos(a, b):
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return 0.0
    return float(np.sum(a * b) / (na * nb))


def score(model, e, space, triples):
    v, l, s, o = (space[e[k]] for k in ("verb", "landmark", "subject", "object"))
    if model == "baseline":
        return cos(v, l)
    if model == "add":
        return cos(s + v + o, s + l + o)
    if model == "multiply":
        return cos(s * v * o, s * l * o)
    method = model.split(":")[1]
    r = len(v)

    def matrix(word):
        c = space[word]
        if method == "indirect":
            m = np.zeros((r, r))
            for sub, obj, n in triples[word]:
                m += n * np.kron(space[sub], space[obj]).reshape(r, r)
            return m
        if method == "zero_diag":
            return np.diag(c)
        if method == "one_diag":
            m = np.ones((r, r))
            np.fill_diagonal(m, c)
            return m
        return np.outer(c, c)

    so = np.outer(s, o)
    return cos(matrix(e["verb"]) * so, matrix(e["landmark"]) * so)


MODELS = ["baseline", "add", "multiply", "categorical:indirect",
          "categorical:zero_diag", "categorical:one_diag",
          "categorical:kron_self"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--corpus", required=True)
    ap.add_argument("--triples", required=True)
    ap.add_argument("--dataset", required=True)
    ap.add_argument("--stoplist", required=True)
    ap.add_argument("--basis-size", type=int, default=2000)
    ap.add_argument("--window", type=int, default=5)
    ap.add_argument("--check", help="JSON report to compare against")
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    stop = {w.strip() for w in open(args.stoplist) if w.strip()}
    basis, space = build_space(args.corpus, stop, args.basis_size, args.window)
    triples = load_triples(args.triples)
    lines = open(args.dataset).read().splitlines()
    keys = lines[0].split("\t")
    data = [dict(zip(keys, l.split("\t"))) for l in lines[1:] if l]
    human = [int(e["score"]) for e in data]

    results = {}
    for m in MODELS:
        sims = [score(m, e, space, triples) for e in data]
        rho = spearmanr(sims, human).correlation
        hi = np.mean([x for x, e in zip(sims, data) if e["band"] == "HIGH"])
        lo = np.mean([x for x, e in zip(sims, data) if e["band"] == "LOW"])
        results[m] = (rho, hi, lo, sims)
        print(f"{m:24s} high={hi:.4f} low={lo:.4f} rho={rho:.4f}")

    if not args.check:
        return 0
    report = {r["model"]: r for r in json.load(open(args.check))["models"]}
    worst = 0.0
    for m, (rho, hi, lo, sims) in results.items():
        r = report[m]
        got = [s["similarity"] for s in sorted(r["scores"], key=lambda s: s["entry"])]
        diffs = [abs(rho - r["rho"]), abs(hi - r["mean_high"]),
                 abs(lo - r["mean_low"])] + [abs(a - b) for a, b in zip(sims, got)]
        if len(got) != len(sims):
            print(f"{m}: {len(got)} scores, expected {len(sims)}")
            return 1
        worst = max(worst, max(diffs))
    print(f"max abs difference vs report: {worst:.3e}")
    return 0 if worst <= args.tol else 1


if __name__ == "__main__":
    sys.exit(main())
