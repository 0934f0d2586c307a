from lkrep.laurent import LaurentPoly, ONE, R, T, ZERO
from lkrep.matrix import RingMatrix


def mat(entries):
    return RingMatrix.from_dense(entries, ZERO)


def test_identity_and_mul():
    ident = RingMatrix.identity(2, ONE, ZERO)
    m = mat([[R, ONE], [ZERO, T]])
    assert m * ident == m
    assert ident * m == m
    sq = m * m
    assert sq.entry(0, 0) == R**2
    assert sq.entry(0, 1) == R + T
    assert sq.entry(1, 1) == T**2


def test_add_sub_scale():
    m = mat([[R, ZERO], [ONE, T]])
    assert (m + m) == m.scaled(LaurentPoly.const(2))
    assert (m - m) == RingMatrix.zeros(2, ZERO)
    assert (-m).entry(1, 0) == -ONE


def test_apply_vector():
    m = mat([[R, ONE], [ZERO, T]])
    out = m.apply([ONE, R])
    assert out == [R + R, T * R]


def test_det_2x2_and_3x3():
    m = mat([[R, ONE], [R**3, T]])
    assert m.det_fraction_free() == R * T - R**3
    # row-swap path: zero pivot
    m2 = mat([[ZERO, ONE], [ONE, ZERO]])
    assert m2.det_fraction_free() == -ONE
    m3 = mat(
        [
            [R, ZERO, ONE],
            [ONE, T, ZERO],
            [ZERO, ONE, R],
        ]
    )
    # cofactor expansion by hand: r(tr - 0) - 0 + 1(1 - 0)
    assert m3.det_fraction_free() == R**2 * T + ONE


def test_det_singular():
    m = mat([[ONE, ONE], [ONE, ONE]])
    assert m.det_fraction_free() == ZERO


def test_key_and_eq():
    a = mat([[R, ZERO], [ZERO, ONE]])
    b = mat([[R, ZERO], [ZERO, ONE]])
    assert a == b and a.key() == b.key()
    c = mat([[R, ZERO], [ZERO, R]])
    assert a != c and a.key() != c.key()


def test_map_entries_drops_zeros():
    m = mat([[R - R, ONE], [R, ZERO]])
    assert m.nnz() == 2  # the zero difference was never stored
    doubled = m.map_entries(lambda p: p + p)
    assert doubled.entry(0, 1) == LaurentPoly.const(2)
