"""Exception types shared across the package."""


class BinoptError(Exception):
    """Base class for every error raised by this package."""


class InvalidModel(BinoptError):
    """Market parameters violate a solvability condition."""


class NodeOutOfRange(BinoptError):
    """Lattice node address lies outside the tree."""


class ArbitrageModel(BinoptError):
    """Operation requires a no-arbitrage market but the model admits one.

    ``witness`` carries the zero-cost portfolio proving the arbitrage when
    one exists (it is None only in the degenerate d <= 0 case, where the
    model fails the price-positivity condition rather than rate dominance).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PathLengthMismatch(BinoptError):
    """Price path has the wrong number of moves for the lattice."""


class InvalidPath(BinoptError):
    """Price path contains a token other than 'u' or 'd'."""


class NegativePerturbation(BinoptError):
    """Target perturbations must be non-negative."""


class InvalidOption(BinoptError):
    """Option specification is inconsistent or unsupported for this call."""


class MissingPayoffEntry(BinoptError):
    """Custom payoff table has no entry for the requested node."""


class InvalidProbability(BinoptError):
    """Probability must lie strictly between 0 and 1."""


class NegativeWealth(BinoptError):
    """Initial wealth must be non-negative."""


class TreeTooDeep(BinoptError):
    """Exhaustive enumeration refused beyond the depth guard."""


class RequiresNonnegativeRate(BinoptError):
    """Identity checkers only run for r >= 0."""


class MalformedLattice(BinoptError):
    """Per-node lattice data is malformed or incompatible with the model."""


class DocumentError(BinoptError):
    """Input document failed to parse; the message names file and field."""
