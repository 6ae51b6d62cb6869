"""Desk-scale laboratory for artifact-aware training of NLI classifiers.

Pipeline: load or generate a premise/hypothesis corpus, train a
hypothesis-only bias model, reweight training examples by the inverse of
the bias model's confidence, train the main classifier on the weighted
loss, and evaluate how much the main model still agrees with the bias
model.
"""

__version__ = "0.1.0"
