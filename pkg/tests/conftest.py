import itertools

import pytest

from nmlab import core


@pytest.fixture
def lang2():
    return core.language("p", "q")


@pytest.fixture
def lang3():
    return core.language("p", "q", "r")


def naive_models(phi, lang):
    """Independent truth-table oracle: evaluate the AST over explicit
    dict assignments, no bitmask tricks shared with the implementation."""
    sat = set()
    for values in itertools.product([False, True], repeat=lang.n):
        env = dict(zip(lang.atoms, values))
        if _eval(phi, env):
            v = sum(1 << i for i, a in enumerate(lang.atoms) if env[a])
            sat.add(v)
    return sat


def _eval(phi, env):
    if isinstance(phi, core.Atom):
        return env[phi.name]
    if isinstance(phi, core.TopF):
        return True
    if isinstance(phi, core.BotF):
        return False
    if isinstance(phi, core.Not):
        return not _eval(phi.sub, env)
    if isinstance(phi, core.And):
        return _eval(phi.left, env) and _eval(phi.right, env)
    if isinstance(phi, core.Or):
        return _eval(phi.left, env) or _eval(phi.right, env)
    if isinstance(phi, core.Implies):
        return (not _eval(phi.left, env)) or _eval(phi.right, env)
    raise TypeError(phi)


def bits_to_set(bits):
    return {v for v in range(bits.bit_length()) if bits >> v & 1}
