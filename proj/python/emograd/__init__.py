"""Python bindings for the emograd C++ library."""

import os
from pathlib import Path

# Wheels ship the lexicon next to the package.
_data = Path(__file__).with_name("data")
if "EMOGRAD_DATA_DIR" not in os.environ and (_data / "vader_lexicon.txt").is_file():
    os.environ["EMOGRAD_DATA_DIR"] = str(_data)

from ._core import (  # noqa: E402
    DataError,
    ConfigError,
    emotions,
    clusters,
    median_score,
    sentiment_range,
    lowering_targets,
    select_target,
    taxonomy_json,
    polarity_scores,
    dominant_emotion,
    tokenize,
    porter_stem,
    bleu,
    sentence_bleu,
    rouge_l,
    meteor,
    make_prefix,
    parse_prefix,
    validate_record,
    run_cli,
)

__all__ = [
    "DataError",
    "ConfigError",
    "emotions",
    "clusters",
    "median_score",
    "sentiment_range",
    "lowering_targets",
    "select_target",
    "taxonomy_json",
    "polarity_scores",
    "dominant_emotion",
    "tokenize",
    "porter_stem",
    "bleu",
    "sentence_bleu",
    "rouge_l",
    "meteor",
    "make_prefix",
    "parse_prefix",
    "validate_record",
    "run_cli",
]
