# Copyright the halftwist authors
# Licensed under the MIT license

import unittest

if __name__ == "__main__":
    unittest.main("halftwist.tests", verbosity=2)
