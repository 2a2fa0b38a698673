"""Algebraic laws over exhaustive and sampled module families."""
import pytest

import families as Fm
import properties as P


@pytest.mark.parametrize("name", list(P.SUITE))
def test_law(name):
    bad = P.SUITE[name]()
    assert bad == [], f"{name}: {bad[:3]}"


def test_normal_image_agreement_on_every_small_involutive_module():
    mods = Fm.inv_up_to(8)
    assert len(mods) == 1 + 1 + 1 + 3 + 8 + 26 + 97 + 417
    assert P.normal_image_methods_agree(mods, brute_max=6) == []


def test_families_are_deterministic():
    a = [Fm.table(M) for M in Fm.modules_sampled()]
    Fm.modules_sampled.cache_clear()
    b = [Fm.table(M) for M in Fm.modules_sampled()]
    assert a == b
