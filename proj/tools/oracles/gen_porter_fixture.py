#!/usr/bin/env python3
"""Regenerate tests/fixtures/porter_reference.tsv with NLTK's PorterStemmer in
ORIGINAL_ALGORITHM mode (the 1980 rule set without NLTK/Martin extensions)."""
import random
import sys

from nltk.stem.porter import PorterStemmer

CLASSIC = """caresses ponies ties caress cats feed agreed disabled matting mating
meeting milling messing meetings happy sky relational conditional rational
valenci hesitanci digitizer conformabli radicalli differentli vileli analogousli
vietnamization predication operator feudalism decisiveness hopefulness callousness
formaliti sensitiviti sensibiliti triplicate formative formalize electriciti
electrical hopeful goodness revival allowance inference airliner gyroscopic
adjustable defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate cease
controll roll generalizations oscillators abatements angry angrier annoyance
disappointed disappointment sadness grieving nervousness embarrassed remorseful
disapproving excitement amusing joyful loving optimistic gratitude relieved
approval realization surprised curiosity confusion admiration caring desired
fearful pride running ran runs sat sitting cats cat the on mat a is was be being
generously generous hopping hoped hoping tanned falling filing fizzed failing
plastered bled motoring sing conflated troubled sized hissing fizzing
""".split()


def main(path):
    stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    words = list(dict.fromkeys(CLASSIC))
    lex = [l.split("\t")[0] for l in open("data/vader_lexicon.txt", encoding="utf-8")]
    lex = [w for w in lex if w.isalpha() and w.isascii() and w.islower()]
    rng = random.Random(7)
    words += rng.sample(lex, 400)
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write("# word\tstem  (nltk PorterStemmer ORIGINAL_ALGORITHM)\n")
        for w in words:
            out.write("%s\t%s\n" % (w, stemmer.stem(w, to_lowercase=False)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/porter_reference.tsv")
