"""Exception types shared across the package."""


class GallaiStarError(Exception):
    """Base class for all errors raised by this package."""


class BadParameter(GallaiStarError):
    """A construction or search parameter is outside its admissible range."""


class MissingEdge(GallaiStarError):
    """An edge of the host graph was left without a color."""


class DuplicateEdge(GallaiStarError):
    """The same host edge was assigned a color more than once."""


class ColorOutOfRange(GallaiStarError):
    """A color lies outside the palette 1..k."""


class EdgeNotInHost(GallaiStarError):
    """A vertex pair is not an edge of the host graph."""


class TooLarge(GallaiStarError):
    """The instance exceeds a configured exact-computation bound."""


class Disconnected(GallaiStarError):
    """Bipartition part sizes were requested for a disconnected graph."""


class NotAPartition(GallaiStarError):
    """The given blocks do not partition the host vertex set."""


class RainbowTrianglePresent(GallaiStarError):
    """The coloring contains a rainbow triangle, so no valid partition exists."""


class InvalidPartition(GallaiStarError):
    """A block pair is joined by more than one color."""


class BadInnerRule(GallaiStarError):
    """An inner-edge rule violates its color-choice or rainbow-free side condition."""


class BadInnerSpec(GallaiStarError):
    """An inner coloring violates the matching or palette conditions of a part."""


class BadCritical(GallaiStarError):
    """A supplied coloring fails its criticality check."""


class NotBipartite(GallaiStarError):
    """The target graph must be bipartite here."""


class NotNonBipartite(GallaiStarError):
    """The target graph must be non-bipartite here."""


class BipartiteInput(GallaiStarError):
    """Merge families are defined for non-bipartite graphs only."""


class ColorRangeMismatch(GallaiStarError):
    """Component colorings do not fit inside the requested common palette."""


class VerdictFailure(GallaiStarError):
    """A builder produced a coloring that fails its own verification."""


class BudgetExceeded(GallaiStarError):
    """The search node budget ran out before the question was settled.

    Carries partial statistics and, when available, a resumable frontier of
    unexplored assignment prefixes.
    """

    def __init__(self, message, stats=None, checkpoint=None):
        super().__init__(message)
        self.stats = stats
        self.checkpoint = checkpoint


class NotFoundWithinBound(GallaiStarError):
    """No value was found below the configured host-size bound."""
