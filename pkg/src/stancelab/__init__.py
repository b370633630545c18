"""Affect-enriched shallow recurrent stance detection toolkit."""

from .affect import (AffectAnnotation, EmotionLexicon, SentimentLexicon,
                     annotate_emotion, annotate_instance, annotate_sentiment,
                     compound_score, label_from_score, load_emotion_lexicon,
                     load_sentiment_lexicon, score_text)
from .corpus import (Instance, SplitStats, TokenizedInstance, corpus_stats,
                     load_corpus, save_corpus, split_sentences, tokenize,
                     tokenize_instance)
from .embeddings import (EmbeddingRecord, EmbeddingStore, FallbackVocab,
                         read_embedding_file, write_embedding_file)
from .encoding import EncodedInstance, encode_contextual, encode_fallback
from .evaluation import (McNemarResult, Metrics, compute_metrics,
                         mcnemar_test, metrics_report, sentiment_profile)
from .explain import Engagement, engagement_scores, render_heatmap, top_tokens
from .fixtures import load_default_lexicons, make_fixture, planted_pools
from .network import (ForwardCache, ModelConfig, ModelInputs, ModelParams,
                      backward, classify_forward, consistency_penalty,
                      gradient_check, gru_step, init_params, load_checkpoint,
                      parameter_count, pool_and_assemble, run_gru,
                      save_checkpoint)
from .training import (AdamState, TrainConfig, TrainHistory, adam_update,
                       cross_entropy_loss, train)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
