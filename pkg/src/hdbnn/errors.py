"""Exception types shared across the package.

Every error raised by library code derives from HdbnnError so callers
(and the CLI) can distinguish validation failures from genuine bugs.
"""


class HdbnnError(Exception):
    """Base class for all library errors."""


# --- tokenization ---------------------------------------------------------

class InvalidN(HdbnnError):
    """n-gram order must be a positive integer."""


class EmptyCorpus(HdbnnError):
    """Training corpus contains no usable text."""


class MissingSpecialToken(HdbnnError):
    """WordPiece vocabulary lacks a required special token."""


# --- vectors --------------------------------------------------------------

class DimMismatch(HdbnnError):
    """Operands have different dimensionality."""


class EmptyStats(HdbnnError):
    """Cannot embed empty n-gram statistics."""


class ZeroVector(HdbnnError):
    """Cannot l2-normalize an all-zero accumulator."""


# --- network --------------------------------------------------------------

class ShapeMismatch(HdbnnError):
    """Tensor shapes are inconsistent with the layer contract."""


class DegenerateBatch(HdbnnError):
    """Batch statistics need at least two samples."""


class EmptyDataset(HdbnnError):
    """Training requires a non-empty dataset."""


class LabelOutOfRange(HdbnnError):
    """A class label exceeds the configured number of classes."""


class UntrainedModel(HdbnnError):
    """Operation requires a trained model with populated statistics."""


# --- packed model file ----------------------------------------------------

class BadMagic(HdbnnError):
    """File does not start with the expected magic bytes."""


class CorruptLength(HdbnnError):
    """File is truncated or carries trailing garbage."""


class FormatVersionMismatch(HdbnnError):
    """File format version is not supported."""


# --- baselines ------------------------------------------------------------

class EmptyClass(HdbnnError):
    """Every class needs at least one sample."""


class EmptyTrain(HdbnnError):
    """Prediction requires a non-empty training set."""


# --- harness --------------------------------------------------------------

class ParseError(HdbnnError):
    """Corpus or config file failed to parse."""


class UnknownFormat(HdbnnError):
    """Unrecognized corpus format name."""


class TooFewSamples(HdbnnError):
    """Not enough samples for the requested number of folds."""


class LengthMismatch(HdbnnError):
    """Prediction and gold sequences differ in length."""
