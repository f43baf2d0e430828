#!/usr/bin/env python3
"""Offline oracle for the metric fixtures.

Writes
  tests/fixtures/metric_cases.json   small BLEU / ROUGE-L / METEOR cases
  tests/fixtures/eval_records.jsonl  10-record evaluation input
  tests/fixtures/eval_oracle.json    expected report for eval_records.jsonl

Everything here is computed independently of the C++ code: n-grams by slicing
and Counter, LCS by enumerating subsequences, METEOR alignments by exhaustive
search over all one-to-one matchings. Corpus BLEU is cross-checked against
nltk.translate.bleu_score.corpus_bleu.
"""
import itertools
import json
import math
import re
import string
from collections import Counter

from nltk.stem.porter import PorterStemmer
from nltk.translate.bleu_score import corpus_bleu

STEM = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
PUNCT = set(string.punctuation)

RANGES = {
    "high_neg": "anger disgust grief fear sadness",
    "low_neg": "nervousness annoyance disappointment embarrassment remorse disapproval",
    "neutral": "confusion curiosity realization surprise neutral",
    "low_pos": "approval caring desire relief",
    "high_pos": "amusement excitement pride optimism gratitude joy admiration love",
}
RANGE_OF = {e: r for r, es in RANGES.items() for e in es.split()}


def tokenize(text):
    out = []
    for chunk in text.lower().split():
        out.extend(t for t in re.split(r"([%s])" % re.escape(string.punctuation), chunk) if t)
    return out


def ngrams(toks, n):
    return Counter(tuple(toks[i:i + n]) for i in range(len(toks) - n + 1))


def bleu(refs, hyps):
    match = [0] * 4
    total = [0] * 4
    r = c = 0
    for ref, hyp in zip(refs, hyps):
        r += len(ref)
        c += len(hyp)
        for n in range(1, 5):
            h = ngrams(hyp, n)
            g = ngrams(ref, n)
            match[n - 1] += sum(min(k, g[x]) for x, k in h.items())
            total[n - 1] += max(len(hyp) - n + 1, 0)
    if c == 0 or any(m == 0 for m in match):
        return 0.0
    logp = sum(math.log(m / t) for m, t in zip(match, total)) / 4
    bp = 1.0 if c > r else math.exp(1 - r / c)
    return bp * math.exp(logp)


def lcs_brute(a, b):
    best = 0
    for k in range(len(a), 0, -1):
        for idx in itertools.combinations(range(len(a)), k):
            sub = [a[i] for i in idx]
            it = iter(b)
            if all(any(x == y for y in it) for x in sub):
                return k
    return best


def rouge_l(ref, hyp):
    if not ref or not hyp:
        return 0.0
    l = lcs_brute(ref, hyp) if len(ref) <= 12 and len(hyp) <= 12 else lcs_dp(ref, hyp)
    if l == 0:
        return 0.0
    p, r = l / len(hyp), l / len(ref)
    return 2 * p * r / (p + r)


def lcs_dp(a, b):
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def all_matchings(hyp, ref, compatible):
    """Yield every one-to-one partial matching as a tuple of (h, r, kind)."""
    def rec(h, used):
        if h == len(hyp):
            yield ()
            return
        yield from rec(h + 1, used)
        for r in range(len(ref)):
            if r in used:
                continue
            kind = compatible(hyp[h], ref[r])
            if kind:
                for rest in rec(h + 1, used | {r}):
                    yield ((h, r, kind),) + rest
    yield from rec(0, frozenset())


def chunks(al):
    al = sorted(al)
    ch = 0
    prev = None
    for h, r, _ in al:
        if prev is None or not (h == prev[0] + 1 and r == prev[1] + 1):
            ch += 1
        prev = (h, r)
    return ch


def meteor_parts(ref, hyp):
    def compatible(a, b):
        if a == b:
            return "exact"
        if STEM.stem(a, to_lowercase=False) == STEM.stem(b, to_lowercase=False):
            return "stem"
        return None

    best = None
    for al in all_matchings(hyp, ref, compatible):
        exact = sum(1 for x in al if x[2] == "exact")
        key = (exact, len(al), -chunks(al))
        if best is None or key > best[0]:
            best = (key, al)
    m = len(best[1])
    return m, chunks(best[1])


def meteor(ref, hyp):
    if not ref or not hyp:
        return 0.0
    m, ch = meteor_parts(ref, hyp)
    if m == 0:
        return 0.0
    p, r = m / len(hyp), m / len(ref)
    f = 10 * p * r / (r + 9 * p)
    return f * (1 - 0.5 * (ch / m) ** 3)


SMALL = [
    ("the cat sat on the mat", "the cat sat on the mat"),
    ("the cat sat on the mat", "dogs run fast"),
    ("the cat sat on the mat", "the cat the cat on the mat"),
    ("the cat sat", "the cat ran"),
    ("the cat", "the cat"),
    ("the cat sat on mat", "on mat the cat sat"),
    ("he was very angry about the delay", "he was annoyed about the delay"),
    ("she is running to the store", "she runs to the stores"),
    ("the quick brown fox jumps over the lazy dog", "the fast brown fox jumped over the lazy dog"),
    ("a b c d e f", "f e d c b a"),
    ("the the the cat", "the cat the the"),
    ("i am so angry right now", "i am a little annoyed right now"),
]


def small_cases():
    cases = []
    for ref, hyp in SMALL:
        r, h = tokenize(ref), tokenize(hyp)
        m, ch = meteor_parts(r, h)
        ours = bleu([r], [h])
        if len(h) >= 4:
            assert abs(corpus_bleu([[r]], [h]) - ours) < 1e-12, (ref, hyp)
        cases.append({
            "reference": ref, "hypothesis": hyp,
            "bleu": ours, "rouge_l": rouge_l(r, h),
            "meteor": meteor(r, h), "meteor_matches": m, "meteor_chunks": ch,
        })
    refs = [tokenize(a) for a, _ in SMALL]
    hyps = [tokenize(b) for _, b in SMALL]
    corpus = bleu(refs, hyps)
    # nltk pads the n-gram denominator to 1 for hypotheses shorter than n, so
    # it only agrees with the standard definition when every hypothesis has
    # at least four tokens.
    long_enough = [(r, h) for r, h in zip(refs, hyps) if len(h) >= 4]
    assert abs(bleu(*zip(*long_enough)) - corpus_bleu([[r] for r, _ in long_enough],
                                                      [h for _, h in long_enough])) < 1e-12
    return {"cases": cases, "corpus_bleu_all": corpus}


EVAL = [
    ("r01", "I am annoyed that the train is late.", "I am annoyed that the train is late.", "annoyance", {"annoyance": 0.91}),
    ("r02", "He was a bit disappointed by the news.", "He was disappointed by the news.", "disappointment", {"disappointment": 0.72, "sadness": 0.2}),
    ("r03", "She is nervous about the exam.", "She feels nervous about her exam.", "nervousness", {"fear": 0.81}),
    ("r04", "That was okay I guess.", "That is a nice idea.", "approval", {"approval": 0.55}),
    ("r05", "We disagree with this plan.", "I do not approve of this plan.", "disapproval", {"annoyance": 0.62}),
    ("r06", "Thanks, this helps.", "Thank you so much for the help!", "gratitude", {"gratitude": 0.97}),
    ("r07", "Blue sky again today", "the meeting moved to friday", "caring", {"neutral": 0.88}),
    ("r08", "I regret saying that.", "I regret that I said it.", "remorse", {"remorse": 0.4}),
    ("r09", "The running dogs ran home.", "The dogs were running home.", "realization", {"realization": 0.66}),
    ("r10", "This is kind of embarrassing.", "This is embarrassing.", "embarrassment", {"embarrassment": 0.77, "remorse": 0.77}),
]

CANON = ("admiration amusement anger annoyance approval caring confusion curiosity desire "
         "disappointment disapproval disgust embarrassment excitement fear gratitude grief joy "
         "love nervousness optimism pride realization relief remorse sadness surprise neutral").split()


def dominant(scores, threshold=0.5):
    best = None
    for e in CANON:
        v = scores.get(e, 0.0)
        if best is None or v > best[1]:
            best = (e, v)
    return best[0] if best and best[1] > threshold else None


def eval_fixture():
    recs = []
    for rid, pred, ref, tgt, scores in EVAL:
        recs.append({"id": rid, "prediction": pred, "reference": ref,
                     "target_emotion": tgt, "prediction_scores": scores})
    refs = [tokenize(r["reference"]) for r in recs]
    hyps = [tokenize(r["prediction"]) for r in recs]
    fe = sr = labeled = 0
    for r in recs:
        p = dominant(r["prediction_scores"])
        if p is not None:
            labeled += 1
            fe += p == r["target_emotion"]
            sr += RANGE_OF[p] == RANGE_OF[r["target_emotion"]]
    n = len(recs)
    report = {
        "n": n, "n_labeled": labeled,
        "exact_sr": sr / n, "exact_fe": fe / n,
        "bleu": bleu(refs, hyps),
        "rouge_l": sum(rouge_l(a, b) for a, b in zip(refs, hyps)) / n,
        "meteor": sum(meteor(a, b) for a, b in zip(refs, hyps)) / n,
    }
    assert all(len(h) >= 4 for h in hyps)
    assert abs(report["bleu"] - corpus_bleu([[x] for x in refs], hyps)) < 1e-12
    return recs, report


def main():
    with open("tests/fixtures/metric_cases.json", "w") as f:
        json.dump(small_cases(), f, indent=2)
        f.write("\n")
    recs, report = eval_fixture()
    with open("tests/fixtures/eval_records.jsonl", "w") as f:
        for r in recs:
            f.write(json.dumps(r) + "\n")
    with open("tests/fixtures/eval_oracle.json", "w") as f:
        json.dump(report, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
