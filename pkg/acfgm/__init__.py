"""Auto-conditioned fast gradient method and first-order benchmark harness.

Solvers for convex composite problems Psi(x) = f(x) + h(x):
- AC-FGM (Simple, Adaptive and Hoelder stepsize policies)
- AdGD, NS-FGM, NS-PGM and NS-AGD baselines

Usage:
    python -m acfgm run configs/qp.cfg
    python -m acfgm summarize traces/
    python -m acfgm gen qp 100 200 7 -o qp.svm
"""

__version__ = "0.1.0"
