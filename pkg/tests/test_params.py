from coulombw.params import (DoubleRegion, RegionTag, WhittakerParams,
                             classify_region)


def _tag(beta, m):
    return classify_region(WhittakerParams(beta, m))


def test_generic():
    r = _tag(0.3 + 0.1j, 0.25)
    assert r.tag is RegionTag.GENERIC


def test_half_integer_without_double():
    # beta+m+1/2 = 2.5 not an integer, so only the 2m in Z condition fires
    r = _tag(1.5, 0.5)
    assert r.tag is RegionTag.DEGENERATE_HALF_INTEGER
    assert r.p == 1


def test_double_regions():
    r = _tag(1.0, 0.5)
    assert r.tag is RegionTag.DOUBLY_DEGENERATE
    assert r.region is DoubleRegion.II_PLUS
    r = _tag(-1.0, 0.5)
    assert r.region is DoubleRegion.II_MINUS
    r = _tag(0.0, 2.5)   # beta+m and -beta+m both in N+1/2
    assert r.region is DoubleRegion.I_PLUS
    r = _tag(0.0, -2.5)
    assert r.region is DoubleRegion.I_MINUS


def test_laguerre_lines():
    r = _tag(0.95, 0.25)   # beta - m - 1/2 = 0.2 -> generic
    assert r.tag is RegionTag.GENERIC
    r = _tag(0.75, 0.25)   # beta - m - 1/2 = 0 in N
    assert r.tag is RegionTag.LAGUERRE_DECAYING and r.n == 0
    r = _tag(-2.75, 0.25)  # -beta - m - 1/2 = 2
    assert r.tag is RegionTag.LAGUERRE_EXPLODING and r.n == 2


def test_snap_tolerance():
    assert _tag(1.0 + 4e-9, 0.5 - 4e-9).tag is RegionTag.DOUBLY_DEGENERATE
    assert _tag(1.0 + 5e-7, 0.5).tag is not RegionTag.DOUBLY_DEGENERATE
