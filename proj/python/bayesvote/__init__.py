"""Voting rules as Bayesian estimators: Kemeny, fb1, fb2, and g."""

try:
    from ._bayesvote import *  # noqa: F401,F403  (installed layout)
    from ._bayesvote import __doc__  # noqa: F401
except ImportError:
    from _bayesvote import *  # noqa: F401,F403  (build-tree layout)
    from _bayesvote import __doc__  # noqa: F401
