"""Markov-chain prediction of future deviation states."""

from .prediction_vector import PredictionVector
from .predictor import forecast_from_state, predict, predict_series

__all__ = ["forecast_from_state", "predict", "predict_series", "PredictionVector"]
