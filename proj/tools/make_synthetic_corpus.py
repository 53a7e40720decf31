#!/usr/bin/env python3
# Copyright 2026 The causex Authors.
# SPDX-License-Identifier: Apache-2.0
"""Writes the 200-sentence synthetic labeled corpus (data/synthetic/corpus.tsv).

Causal sentences join two maritime clauses with a lexicon connective. Other
sentences use the same topic vocabulary and contain no lexicon word at all.
"""

import argparse
import random

SUBJECTS = [
    "the master", "the chief engineer", "the pilot", "the second officer",
    "the lookout", "the deckhand", "the bosun", "the helmsman",
    "the skipper", "the crew",
]
ACTIONS = [
    "reduced speed", "stopped the main engine", "altered course",
    "called the harbour office", "checked the steering gear",
    "closed the watertight door", "released the anchor",
    "inspected the cargo hold", "started the fire pump",
    "secured the mooring lines", "raised the alarm", "left the bridge",
]
EVENTS = [
    "the engine room flooded", "the steering gear failed",
    "the fuel pump leaked", "the visibility dropped in fog",
    "the cargo shifted in heavy weather", "the hull struck the quay",
    "the radar display froze", "the fire alarm sounded on deck",
    "the mooring line parted", "the tug lost power",
]
PLACES = [
    "near the harbour entrance", "on the starboard bridge wing",
    "in the engine room", "on the main deck", "beside the cargo hold",
    "at the pilot ladder", "in the wheelhouse", "alongside the quay",
]
TIMES = [
    "during the morning watch", "after the crew change",
    "before arrival at the berth", "at the start of the voyage",
    "while the vessel was alongside", "late in the evening",
]


def causal(rng, connective):
    event = rng.choice(EVENTS)
    subject = rng.choice(SUBJECTS)
    action = rng.choice(ACTIONS)
    place = rng.choice(PLACES)
    if connective == "consequently":
        return f"{cap(event)} {place}; consequently {subject} {action}."
    if connective == "because":
        return f"{cap(subject)} {action} {place} because {event}."
    if connective == "due to":
        noun = event.replace("the ", "", 1).split()[0]
        return (f"{cap(subject)} {action} {place} due to a problem with "
                f"the {noun}.")
    if connective == "as a result":
        return f"{cap(event)} {place}. As a result {subject} {action}."
    if connective == "caused":
        return (f"{cap(event)} {place} and caused damage before "
                f"{subject} {action}.")
    raise ValueError(connective)


def non_causal(rng):
    subject = rng.choice(SUBJECTS)
    action = rng.choice(ACTIONS)
    place = rng.choice(PLACES)
    time = rng.choice(TIMES)
    event = rng.choice(EVENTS)
    shape = rng.randrange(3)
    if shape == 0:
        return f"{cap(subject)} {action} {place} {time}."
    if shape == 1:
        return f"{cap(time)} {subject} {action} {place}."
    return f"{cap(subject)} reported that {event} {time}."


def cap(s):
    return s[0].upper() + s[1:]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2016)
    ap.add_argument("--output", default="data/synthetic/corpus.tsv")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    connectives = ["consequently", "because", "due to", "as a result", "caused"]
    rows = [(1, causal(rng, c)) for c in connectives for _ in range(20)]
    rows += [(-1, non_causal(rng)) for _ in range(100)]
    rng.shuffle(rows)
    with open(args.output, "w", encoding="utf-8", newline="\n") as out:
        out.write("# Copyright 2026 The causex Authors.\n")
        out.write("# SPDX-License-Identifier: Apache-2.0\n")
        for i, (label, text) in enumerate(rows):
            doc = f"syn{i // 10 + 1:02d}"
            label_text = "+1" if label > 0 else "-1"
            out.write(f"{doc}\t{i % 10}\t{label_text}\t{text}\n")


if __name__ == "__main__":
    main()
