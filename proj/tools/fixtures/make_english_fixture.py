#!/usr/bin/env python3
# Copyright 2026 The Morphseg Authors.
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
"""Builds the English desk-scale fixture used by the acceptance suite.

Text: the King James Bible (public domain) as shipped by pythonbible-kjv.
Gold: a heuristic morphological analysis derived from the lemminflect
lexicon. Every word type of the emitted text gets one line

    word<TAB>BASE[#BASE...] POS [AFFIX ...]

where POS is a part-of-speech tag (N, V, A, ADV, X) that the keep-list
filters out, and AFFIX tags mark inflections or -ly derivation.

    pip install pythonbible pythonbible-kjv lemminflect
    python3 make_english_fixture.py --tokens 210000 --out-dir ../../tests/data
"""

import argparse
import os
import re

import lemminflect
from pythonbible_kjv import plain_text_bible

PENN_TO_AFFIX = {
    "NNS": ["PL"],
    "VBD": ["PAST"],
    "VBN": ["PCP2"],
    "VBG": ["PCP1"],
    "VBZ": ["SG3"],
    "JJR": ["CMP"],
    "JJS": ["SUP"],
    "RBR": ["CMP"],
    "RBS": ["SUP"],
}
UPOS_TO_TAG = {"NOUN": "N", "VERB": "V", "ADJ": "A", "ADV": "ADV",
               "PROPN": "N", "AUX": "V"}
KEEP_TAGS = ["PL", "PAST", "PCP1", "PCP2", "SG2", "SG3", "CMP", "SUP",
             "GEN", "<DER:ly>"]
UPOS_ORDER = ["NOUN", "VERB", "ADJ", "ADV", "PROPN", "AUX"]


def bible_text():
  raw = plain_text_bible.bible.content if hasattr(
      plain_text_bible.bible, "content") else None
  if raw is None:
    src = open(plain_text_bible.__file__, encoding="utf-8").read()
    raw = src.split('"""', 2)[1]
  # Verse numbers ("12.") and editorial brackets are not part of the text.
  raw = re.sub(r"\b\d+\.", " ", raw)
  raw = raw.replace("[", "").replace("]", "")
  # Pre-tokenize: punctuation other than word-internal apostrophes and
  # hyphens becomes whitespace.
  raw = re.sub(r"[^A-Za-z'\-\s]", " ", raw)
  raw = re.sub(r"(?<![A-Za-z])['\-]+|['\-]+(?![A-Za-z])", " ", raw)
  return raw.split()


def analyses(word):
  """All (base, upos, affixes) readings of a lowercase word."""
  out = []
  for upos, lemmas in lemminflect.getAllLemmas(word).items():
    for lemma in lemmas:
      infl = lemminflect.getAllInflections(lemma, upos)
      tags = [t for t, forms in infl.items() if word in forms]
      affixes = min((PENN_TO_AFFIX.get(t, []) for t in tags), key=len,
                    default=[])
      out.append((lemma, upos, affixes))
  if word.endswith("ly") and len(word) > 4:
    stem = word[:-2]
    for cand in (stem, stem[:-1] + "y" if stem.endswith("i") else None):
      if cand and "ADJ" in lemminflect.getAllLemmas(cand):
        out.append((cand, "ADV", ["<DER:ly>"]))
  for suffix, tag in (("eth", "SG3"), ("est", "SG2")):
    if word.endswith(suffix) and len(word) > len(suffix) + 2:
      stem = word[: -len(suffix)]
      for cand in (stem, stem + "e"):
        if "VERB" in lemminflect.getAllLemmas(cand):
          out.append((cand, "VERB", [tag]))
  return out


def analyze(word):
  if word.endswith("'s") and len(word) > 2:
    base, pos, tags = analyze(word[:-2])
    return base, pos, tags + ["GEN"]
  if word.endswith("s'") and len(word) > 2:
    base, pos, tags = analyze(word[:-1])
    return base, pos, tags + ["GEN"]
  if "-" in word:
    parts = [p for p in word.split("-") if p]
    head_base, pos, tags = analyze(parts[-1])
    return "#".join(parts[:-1] + [head_base]), pos, tags
  readings = analyses(word)
  if not readings:
    return word, "X", []
  derived = [r for r in readings if "<DER:ly>" in r[2]]
  if derived:
    lemma, upos, affixes = derived[0]
    return lemma, UPOS_TO_TAG[upos], affixes
  # Shortest analysis wins; then prefer the reading that keeps the word
  # itself as base form, then a fixed part-of-speech order.
  readings.sort(key=lambda r: (len(r[2]), r[0] != word,
                               UPOS_ORDER.index(r[1])
                               if r[1] in UPOS_ORDER else 99, r[0]))
  lemma, upos, affixes = readings[0]
  return lemma, UPOS_TO_TAG.get(upos, "X"), affixes


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument("--tokens", type=int, default=210000)
  parser.add_argument("--out-dir", default=".")
  args = parser.parse_args()

  tokens = bible_text()[: args.tokens]
  os.makedirs(args.out_dir, exist_ok=True)
  with open(os.path.join(args.out_dir, "kjv_en.txt"), "w",
            encoding="utf-8") as f:
    for i in range(0, len(tokens), 16):
      f.write(" ".join(tokens[i:i + 16]) + "\n")

  types = sorted({t.lower() for t in tokens})
  with open(os.path.join(args.out_dir, "kjv_en_gold.tsv"), "w",
            encoding="utf-8") as f:
    for word in types:
      base, pos, affixes = analyze(word)
      f.write("%s\t%s\n" % (word, " ".join([base.upper(), pos] + affixes)))

  with open(os.path.join(args.out_dir, "english_tags.txt"), "w",
            encoding="utf-8") as f:
    f.write("\n".join(KEEP_TAGS) + "\n")


if __name__ == "__main__":
  main()
