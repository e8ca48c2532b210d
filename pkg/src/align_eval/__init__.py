"""Token-alignment analysis of reference-based summarization metrics.

Recasts ROUGE-1 and BERTScore as weighted token alignments, measures how
much of each score joins tokens with common SCU labels or common
linguistic categories, and exposes category-specific precision/recall as
an interpretable evaluation in its own right.
"""

from .alignment import (MetricScore, SimilarityMatrix, WeightedAlignment,
                        bert_similarity, bertscore_alignment, bertscore_score,
                        normalize_unigram, rouge1_alignment, rouge1_score,
                        scu_max_rouge_alignment)
from .categories import (CATEGORIES, CATEGORY_ORDER, CONTENT_GROUPS, Category,
                         CategoryScore, FilteredAlignment, category_pr,
                         contribution, filter_alignment, grouped_contribution,
                         select, system_comparison)
from .corpus import (AnnotatedToken, Instance, ScoreMatrix, Summary,
                     load_corpus, load_score_matrix, write_corpus,
                     write_score_matrix)
from .stats import (CorrelationReport, correlate, delta_table, pearson,
                    spearman)
from .errors import (AnalysisError, CorpusError, EmbeddingError,
                     ScoreMatrixError, ValidationError)
from .scu import Distribution, ScuProportion, distribution_summary, prop_scu, scu_filter

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
