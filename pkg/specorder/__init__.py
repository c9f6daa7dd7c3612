"""
Specorder - specialization order on parabolic quotients of finite Weyl groups.
"""

__version__ = "0.1.0"
