"""Finite-blocklength simulation of superposition Shannon-strategy codes."""

from .codebook import Codebook, encode, generate_codebook, generate_codebook_counts, message_count
from .decoders import DEFAULT_DELTA, SuperpositionCode, decoding_targets
from .ensemble import EnsembleDecoderModel, run_ensemble_trials
from .jammer import JammerSpec, adversarial_family, greedy_sequence
from .prefix import IndexCode, TwoStageCode, index_code_for, prefix_concatenate
from .robust import EliminationResult, FiniteRandomCode, PermutedCode, RandomPermutationCode, eliminate
from .trials import TrialSummary, channel_outputs, run_trials, wilson

__all__ = [
    "Codebook", "encode", "generate_codebook", "generate_codebook_counts", "message_count",
    "DEFAULT_DELTA", "SuperpositionCode", "decoding_targets",
    "EnsembleDecoderModel", "run_ensemble_trials",
    "JammerSpec", "adversarial_family", "greedy_sequence",
    "IndexCode", "TwoStageCode", "index_code_for", "prefix_concatenate",
    "EliminationResult", "FiniteRandomCode", "PermutedCode", "RandomPermutationCode", "eliminate",
    "TrialSummary", "channel_outputs", "run_trials", "wilson",
]
