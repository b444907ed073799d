# Copyright the halftwist authors
# Licensed under the MIT license

from .certify import CertifyTest
from .cyclotomic import CyclotomicTest
from .explore import ExploreTest
from .intpoly import IntegerPolynomialTest
from .laurent import LaurentTest
from .main import MainTest
from .matchings import MatchingsTest
from .mcg import MappingClassTest
from .skein import SkeinTest
