"""Exception types shared across the package."""


class KpevalError(Exception):
    """Base class for all errors raised by this package."""


class LexiconError(KpevalError):
    """Lexicon file is missing or malformed."""


class ConfigError(KpevalError):
    """Extractor configuration file is invalid."""


class DatasetError(KpevalError):
    """Dataset tree, manifest, or score file is invalid."""
