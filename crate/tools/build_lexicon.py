"""Regenerate crates/core/data/lexicon.tsv.

Input: a WordNet 3.x `dict/` directory (index.sense plus index.{noun,verb,adj,adv}),
e.g. from the `wordnet-db` npm package. Kept: every single word with a
nonzero sense-tagged frequency, plus untagged words that WordNet lists only
as adjectives and/or adverbs (modifiers such as "sorted" or "immutable").

    python3 tools/build_lexicon.py /path/to/wordnet/dict > crates/core/data/lexicon.tsv

A part of speech is kept for a word when its sense-tagged frequency is at
least 5% of the word's total, or when the word has no tagged senses at all.
Function words are appended with category `o`.
"""
import collections
import re
import sys

MIN_SHARE = 0.05
LETTER = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}
SENSE_POS = {"1": "n", "2": "v", "3": "a", "4": "r", "5": "a"}

FUNCTION_WORDS = """
a about above across after against along amid among an and around as at because before behind
below beneath beside besides between beyond both but by despite down during each either every
except for from if in inside into less like near neither nor of off on onto or out outside over
per since than that the their them these they this those though through throughout till to
toward towards under underneath unless unlike until unto upon versus via what whatever when
whenever where whereas wherever whether which while who whoever whom whose why with within
without yet my your his her its our mine yours hers ours theirs we you he she it me him us
i am are was were been being does did doing done would should could might must shall
""".split()


def main(dict_dir):
    listed = collections.defaultdict(set)
    for pos, letter in LETTER.items():
        with open(f"{dict_dir}/index.{pos}") as f:
            for line in f:
                if line.startswith(" "):
                    continue
                lemma = line.split(" ", 1)[0]
                if re.fullmatch(r"[a-z]+", lemma):
                    listed[lemma].add(letter)

    freq = collections.defaultdict(collections.Counter)
    with open(f"{dict_dir}/index.sense") as f:
        for line in f:
            key, _off, _num, count = line.split()
            lemma, rest = key.split("%", 1)
            freq[lemma][SENSE_POS[rest[0]]] += int(count)

    entries = {}
    for word in listed:
        if len(word) < 2:
            continue
        counts = freq[word]
        if sum(counts.values()) == 0 and not listed[word] <= {"a", "r"}:
            continue
        total = sum(counts.values())
        cats = {
            c for c in listed[word]
            if total == 0 or counts.get(c, 0) >= MIN_SHARE * total
        }
        if cats:
            entries[word] = cats
    for word in FUNCTION_WORDS:
        entries.setdefault(word, set()).add("o")

    order = "nvaro"
    for word in sorted(entries):
        cats = ",".join(c for c in order if c in entries[word])
        print(f"{word}\t{cats}")


if __name__ == "__main__":
    main(sys.argv[1])
