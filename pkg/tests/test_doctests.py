"""Keep the usage examples embedded in docstrings true."""

import doctest

import connsum.complexes
import connsum.homology
import connsum.intmat
import connsum.polytopes

MODULES = (connsum.complexes, connsum.homology, connsum.intmat,
           connsum.polytopes)


def test_docstring_examples():
    for mod in MODULES:
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
        assert result.attempted > 0, mod.__name__
