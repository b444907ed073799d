# Copyright the halftwist authors
# Licensed under the MIT license

"""
Kauffman bracket skein representations of braid groups, and certificates that
powers of half-twists normally generate infinite-index subgroups
"""

from .__version__ import __version__

__author__ = "the halftwist authors"
