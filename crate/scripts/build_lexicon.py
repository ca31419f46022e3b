#!/usr/bin/env python3
"""Regenerate crates/core/data/dictionary.txt and pos.txt.

Source: the `lemma_lu.csv.gz` table shipped with the MIT-licensed
`lemminflect` package (form,pos,lemma per line).

    pip download lemminflect --no-deps -d /tmp/li
    python3 scripts/build_lexicon.py path/to/lemma_lu.csv.gz

Only all-lowercase alphabetic forms of length >= 2 are kept. Verb forms
ending in -ed/-ing, or -en participles such as "hidden", that differ
from their lemma are also tagged ADJ.
"""

import gzip
import re
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "data"

PREPS = ["with", "to", "from", "for", "of", "in", "on", "by", "at"]
DETS = ["a", "an", "the", "this", "that", "these", "those", "each", "every",
        "all", "any", "some", "no", "both", "either", "neither"]
PRONS = ["i", "it", "its", "me", "my", "you", "your", "we", "our", "us",
         "they", "them", "their", "he", "she", "him", "her", "his", "self",
         "itself", "themselves", "what", "which", "who", "whom", "whose"]
CONJS = ["and", "or", "but", "nor", "if", "else", "then", "when", "while",
         "unless", "until", "than", "so", "because", "whether"]
AUX = ["is", "are", "was", "were", "be", "been", "being", "has", "have",
       "had", "can", "could", "should", "would", "will", "shall", "may",
       "might", "must", "do", "does", "did"]

# Words whose verb sense dominates in method names. They list VERB first,
# which lets a name-final occurrence read as a verb.
VERB_PRIMARY = """
register process update delete load save open close start stop run call send
handle reset return search sort filter check parse print read write copy move
fetch push insert create build render notify validate convert export lock
unlock merge clear flush commit refresh resize scroll select submit subscribe
toggle execute launch install uninstall download upload dispatch emit invoke
apply compile deploy encode decode encrypt decrypt compress extract format
initialize release remove restore retry schedule serialize split transform
""".split()

MAP = {"noun": "NOUN", "verb": "VERB", "aux": "VERB", "adj": "ADJ", "adv": "ADV"}
PRIORITY = ["NOUN", "ADJ", "VERB", "ADV", "DET", "PRON", "PREP", "CONJ"]


def participle(form, lemma):
    if re.search(r"(ed|ing)$", form):
        return True
    return form.endswith("en") and not lemma.endswith("en")


def main(src):
    tags = {}
    for line in gzip.open(src, "rt", encoding="utf-8"):
        form, pos, lemma = line.rstrip("\n").split(",", 2)
        if not re.fullmatch(r"[a-z]{2,}", form) or pos not in MAP:
            continue
        entry = tags.setdefault(form, set())
        entry.add(MAP[pos])
        if pos == "verb" and form != lemma and participle(form, lemma):
            entry.add("ADJ")

    for words, tag in ((DETS, "DET"), (PRONS, "PRON"), (CONJS, "CONJ"), (AUX, "VERB")):
        for w in words:
            tags.setdefault(w, set()).add(tag)
    for w in PREPS:
        tags[w] = {"PREP"}

    def order(word, ts):
        ranked = sorted(ts, key=PRIORITY.index)
        if word in VERB_PRIMARY and "VERB" in ranked:
            ranked.remove("VERB")
            ranked.insert(0, "VERB")
        return ranked

    words = sorted(tags)
    header = "# generated by scripts/build_lexicon.py from lemminflect (MIT)\n"
    with open(OUT / "dictionary.txt", "w", encoding="utf-8") as f:
        f.write(header)
        for w in words:
            f.write(w + "\n")
    with open(OUT / "pos.txt", "w", encoding="utf-8") as f:
        f.write(header)
        for w in words:
            f.write(f"{w} {','.join(order(w, tags[w]))}\n")
    print(f"{len(words)} words")


if __name__ == "__main__":
    main(sys.argv[1])
