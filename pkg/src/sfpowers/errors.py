"""Exception types and resource budgets shared across the package."""

import os


class SfpError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInput(SfpError):
    """No facets were supplied where at least one is required."""


class EmptyFacet(SfpError):
    """An input facet is the empty set."""


class UniverseTooLarge(SfpError):
    """More vertices than the configured universe cap."""


class UnknownVertex(SfpError):
    """A vertex id outside the complex's universe."""


class NotAFacet(SfpError):
    """The given vertex set is not a facet of the complex."""


class FacetOutsideY(SfpError):
    """A facet is not contained in the complementation vertex set."""


class NotAMatching(SfpError):
    """The given facets are not pairwise disjoint."""


class NotPure(SfpError):
    """Operation requires all facets to have equal size."""


class NotCodim1Connected(SfpError):
    """Operation requires the codimension-1 adjacency graph to be connected."""


class UniverseMismatch(SfpError):
    """Two ideals live over different vertex universes."""


class ZeroIdeal(SfpError):
    """Operation requires a nonzero ideal."""


class NotAPartialOrder(SfpError):
    """The given relation violates irreflexivity, antisymmetry or transitivity."""


class NotEquigenerated(SfpError):
    """Operation requires all generators to have the same degree."""


class NotABroomComplex(SfpError):
    """The complex does not carry broom path-complex coordinates."""


class BadParameters(SfpError):
    """Arguments outside the documented parameter range."""


class UnknownSuite(SfpError):
    """No verification suite with that name."""


class BudgetExceeded(SfpError):
    """A configured search/face/lattice budget was exhausted."""


DEFAULT_NODE_BUDGET = 10_000_000
DEFAULT_FACE_BUDGET = 1 << 22
DEFAULT_LATTICE_BUDGET = 1 << 20
DEFAULT_MAX_VERTICES = 64


def node_budget() -> int:
    return int(os.environ.get("SFP_NODE_BUDGET", DEFAULT_NODE_BUDGET))


def face_budget() -> int:
    return int(os.environ.get("SFP_FACE_BUDGET", DEFAULT_FACE_BUDGET))


def lattice_budget() -> int:
    return int(os.environ.get("SFP_LATTICE_BUDGET", DEFAULT_LATTICE_BUDGET))


def universe_cap() -> int:
    return int(os.environ.get("SFP_MAX_VERTICES", DEFAULT_MAX_VERTICES))


class Budget:
    """Countdown counter; spending past the limit raises BudgetExceeded."""

    __slots__ = ("left", "what")

    def __init__(self, limit: int, what: str = "search nodes"):
        self.left = int(limit)
        self.what = what

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded(f"budget exceeded for {self.what}")
