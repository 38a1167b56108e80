import doctest

import kpmod.laurent
import kpmod.modules
import kpmod.permutations
import kpmod.schubert


def test_module_doctests():
    for mod in (
        kpmod.permutations,
        kpmod.laurent,
        kpmod.schubert,
        kpmod.modules,
    ):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
