"""Bigrassmannian permutations, the penultimate KL cell of S_n and socles of Verma cokernels."""

try:
    from ._bigrass import *  # noqa: F401,F403
except ImportError:  # in-tree build: the extension sits in the build directory
    from _bigrass import *  # type: ignore # noqa: F401,F403
