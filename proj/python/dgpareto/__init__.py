"""Discrete generalized Pareto and discrete Lomax distributions.

Evaluation, sampling, two-stage maximum likelihood estimation and
goodness-of-fit testing (Pearson chi-square and the parametric-bootstrap
discrete Kolmogorov-Smirnov test), plus the bundled Spanish road-accident
blackspot datasets.
"""

try:
    from ._dgpareto import *  # noqa: F401,F403
    from ._dgpareto import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _dgpareto import *  # noqa: F401,F403
    from _dgpareto import __version__  # noqa: F401
