

class QMSEError(Exception):
    pass


class NumpyArrayCheckError(QMSEError):
    pass


class GraphCheckError(QMSEError):
    pass


class SmilesParseError(QMSEError):
    def __init__(self, message, smiles=None, position=None):
        if smiles is not None and position is not None:
            message = "{} (at position {} in {!r})".format(
                message, position, smiles)
        super().__init__(message)
        self.smiles = smiles
        self.position = position


class UnbalancedParenthesesError(SmilesParseError):
    pass


class UnmatchedRingClosureError(SmilesParseError):
    pass


class UnknownAtomSymbolError(SmilesParseError):
    pass


class DirectionalBondError(SmilesParseError):
    pass


class DisconnectedSmilesError(SmilesParseError):
    pass


class UnsupportedSmilesFeatureError(SmilesParseError):
    pass


class ElementNotPresentError(QMSEError):
    pass


class DimensionMismatchError(QMSEError):
    pass


class RankError(QMSEError):
    pass


class WidthMismatchError(QMSEError):
    pass


class QubitLimitError(QMSEError):
    pass


class StalePlanError(QMSEError):
    pass


class ContractionLayerError(QMSEError):
    pass


class NonFiniteObjectiveError(QMSEError):
    pass


class SingleClassFoldError(QMSEError):
    pass


class ConstantTargetError(QMSEError):
    pass


class InsufficientStratumError(QMSEError):
    pass


class ConfigError(QMSEError):
    pass


class DatasetError(QMSEError):
    def __init__(self, message, row_errors=None):
        row_errors = list(row_errors or [])
        if row_errors:
            message = message + "\n" + "\n".join(
                "  line {}: {}".format(line, msg) for line, msg in row_errors)
        super().__init__(message)
        self.row_errors = row_errors


class UnsupportedObservableError(QMSEError):
    pass


class CircuitCheckError(QMSEError):
    pass
