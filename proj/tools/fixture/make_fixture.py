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
"""Generates the synthetic disambiguation fixture under data/fixture/.

Two ambiguous verbs ("meet", "draw") each have two senses whose subjects and
objects are disjoint. Each sense has an unambiguous landmark verb. The
dataset pairs every ambiguous-verb sentence with both landmarks; the
matching landmark is HIGH, the other LOW.
"""

import argparse
import os
import random

SENSES = {
    "meet": {
        "satisfy": (["system", "design", "plan", "product", "policy"],
                    ["criterion", "requirement", "standard", "need", "target"]),
        "visit": (["child", "family", "tourist", "friend", "pupil"],
                  ["house", "museum", "city", "park", "village"]),
    },
    "draw": {
        "attract": (["show", "event", "festival", "star", "concert"],
                    ["crowd", "audience", "attention", "fan", "visitor"]),
        "sketch": (["artist", "student", "designer", "architect", "painter"],
                   ["picture", "portrait", "map", "diagram", "plan"]),
    },
}

# Words that appear with every sense; they blur the additive model.
SHARED = ["new", "old", "large", "small", "good", "local", "year", "time",
          "often", "again"]
FUNCTION = ["the", "a", "of", "in", "with", "and", "this", "that"]


def sentence(rng, subj, verb, obj):
    words = ["the", subj, verb]
    if rng.random() < 0.5:
        words.append(rng.choice(["the", "a", "this", "that"]))
    if rng.random() < 0.6:
        words.append(rng.choice(SHARED[:6]))
    words.append(obj)
    if rng.random() < 0.5:
        words += [rng.choice(["in", "with", "of"]), "the", rng.choice(SHARED[6:])]
    return words


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/fixture")
    ap.add_argument("--seed", type=int, default=20111)
    ap.add_argument("--sentences", type=int, default=2000)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    plan = []  # (subj, verb, obj)
    for verb, senses in SENSES.items():
        for landmark, (subjects, objects) in senses.items():
            plan.append((verb, landmark, subjects, objects))

    corpus = []
    triples = {}
    while len(corpus) < args.sentences:
        verb, landmark, subjects, objects = rng.choice(plan)
        used = verb if rng.random() < 0.5 else landmark
        subj = rng.choice(subjects)
        obj = rng.choice(objects)
        corpus.append(sentence(rng, subj, used, obj))
        key = (used, subj, obj)
        triples[key] = triples.get(key, 0) + 1

    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "corpus.txt"), "w") as f:
        for words in corpus:
            f.write(" ".join(words) + "\n")
    with open(os.path.join(args.out, "triples.tsv"), "w") as f:
        f.write("# verb\tsubject\tobject\tcount\n")
        for (v, s, o), n in sorted(triples.items()):
            f.write(f"{v}\t{s}\t{o}\t{n}\n")

    # Five sentences per ambiguous verb: three of the first sense, two of the
    # second, each judged against both landmarks by two annotators.
    rows = []
    for verb, senses in SENSES.items():
        landmarks = list(senses)
        picks = []
        for k, landmark in enumerate(landmarks):
            subjects, objects = senses[landmark]
            for i in range(3 if k == 0 else 2):
                picks.append((landmark, subjects[i], objects[(i + 1) % 5]))
        for sense, subj, obj in picks:
            for landmark in landmarks:
                high = landmark == sense
                for annotator in ("a1", "a2"):
                    base = rng.choice([5, 6, 7]) if high else rng.choice([1, 2, 3])
                    # A few disagreeing judgments keep the human column noisy.
                    if rng.random() < 0.1:
                        base = rng.choice([3, 4, 5])
                    rows.append((annotator, verb, subj, obj, landmark, base,
                                 "HIGH" if high else "LOW"))
    with open(os.path.join(args.out, "dataset.tsv"), "w") as f:
        f.write("annotator\tverb\tsubject\tobject\tlandmark\tscore\tband\n")
        for r in rows:
            f.write("\t".join(str(x) for x in r) + "\n")


if __name__ == "__main__":
    main()
