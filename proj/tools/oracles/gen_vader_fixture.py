#!/usr/bin/env python3
"""Regenerate tests/fixtures/vader_reference.tsv from the reference analyzer.

Requires `pip install vaderSentiment==3.3.2`. Scores are written unrounded so
the C++ port can be compared at 1e-4 on compound and 1e-6 on the proportions.
"""
import sys

from vaderSentiment import vaderSentiment as ref

SENTENCES = [
    "VADER is smart, handsome, and funny.",
    "VADER is smart, handsome, and funny!",
    "VADER is very smart, handsome, and funny.",
    "VADER is VERY SMART, handsome, and FUNNY.",
    "VADER is VERY SMART, handsome, and FUNNY!!!",
    "VADER is VERY SMART, uber handsome, and FRIGGIN FUNNY!!!",
    "VADER is not smart, handsome, nor funny.",
    "The book was good.",
    "At least it isn't a horrible book.",
    "The book was only kind of good.",
    "The plot was good, but the characters are uncompelling and the dialog is not great.",
    "Today SUX!",
    "Today only kinda sux! But I'll get by, lol",
    "Make sure you :) or :D today!",
    "Catch utf-8 emoji such as \U0001F498 and \U0001F48B and \U0001F601",
    "Not bad at all",
    "Sentiment analysis has never been good.",
    "Sentiment analysis has never been this good!",
    "Most automated sentiment analysis tools are shit.",
    "With VADER, sentiment analysis is the shit!",
    "Other sentiment analysis tools can be quite bad.",
    "On the other hand, VADER is quite bad ass",
    "VADER is such a badass!",
    "Without a doubt, excellent idea.",
    "Roger Dodger is one of the most compelling variations on this theme.",
    "Roger Dodger is at least compelling as a variation on the theme.",
    "Roger Dodger is one of the least compelling variations on this theme.",
    "Not such a badass after all.",
    "Without a doubt, an excellent idea.",
    "He is angry to learn that in June Ethan Lovett (Nathan Parsons) is his half brother.",
    "He is disappointed to learn that in June Ethan Lovett is his half brother.",
    "I am so happy and grateful for your help!!",
    "Why would you do that??",
    "Why would you do that????",
    "This is no good at all.",
    "There is no problem or issue with it.",
    "I love it, but I hate it, but I love it.",
    "good good good but bad bad",
    "It was sort of nice.",
    "That movie was the bomb, yeah right.",
    "I'm scared and nervous about the exam tomorrow.",
    "What a terrible, awful, grief-stricken day.",
    "The meeting is at noon in room 4.",
    "",
    "   ",
    "!!!",
    "I absolutely HATE waiting in line.",
    "Thanks so much, this is wonderful :-)",
    "It is hardly good and barely acceptable.",
    "I'm not very happy with the results",
]


def main(path):
    analyzer = ref.SentimentIntensityAnalyzer()
    # Keep full precision.
    ref.round = lambda x, n=None: x
    with open(path, "w", encoding="utf-8", newline="\n") as out:
        out.write("# text\tneg\tneu\tpos\tcompound  (vaderSentiment 3.3.2, unrounded)\n")
        for s in SENTENCES:
            d = analyzer.polarity_scores(s)
            out.write("%s\t%.17g\t%.17g\t%.17g\t%.17g\n"
                      % (s, d["neg"], d["neu"], d["pos"], d["compound"]))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures/vader_reference.tsv")
