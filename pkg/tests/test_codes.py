import pytest

from hypcolor import codes, gf2


@pytest.fixture(scope="module")
def t():
    return codes.qr_tables()


def test_table_transcription_digest():
    assert codes.tables_digest() == codes.TABLES_SHA256


def test_shapes(t):
    assert t.A.shape == (9, 17)
    assert t.B.shape == (8, 17)
    assert t.R.shape == (9, 9)
    assert gf2.rank(t.A) == 9 and gf2.rank(t.B) == 8


def test_distances_and_orthogonality(t):
    assert gf2.min_distance(t.A) == 5
    assert gf2.min_distance(t.B) == 6
    assert (t.A @ t.B.T).is_zero()


def test_columns_of_A(t):
    assert gf2.no_k_columns_dependent(t.A, 5)
    assert not gf2.no_k_columns_dependent(t.A, 6)


def test_shift_operator_and_parity_vector(t):
    assert codes.shift_operator_ok(t)
    assert gf2.vec_mat(t.w, t.A) == (1 << 17) - 1


def test_shift_operator_detects_corruption(t):
    bad = gf2.BinaryMatrix(9, 9, (t.R.data[0] ^ 1,) + t.R.data[1:])
    assert not codes.shift_operator_ok(codes.QrCodeTables(t.A, t.B, bad, t.w))


def test_classify_type():
    assert codes.classify_type(1) == "+"
    assert codes.classify_type(2) == "+"  # 6^2 = 36 = 2 mod 17
    assert codes.classify_type(3) == "-"
    assert sum(codes.classify_type(k) == "+" for k in range(1, 17)) == 8


@pytest.mark.parametrize("k", [0, 17, 34])
def test_shifted_family_rejects_non_units(k):
    with pytest.raises(ValueError):
        codes.build_shifted_family(k)


def test_shifted_family_classes_follow_type(t):
    fam = {k: codes.build_shifted_family(k, t.A) for k in range(1, 17)}
    for a in range(1, 17):
        for b in range(1, 17):
            same = codes.classify_type(a) == codes.classify_type(b)
            assert gf2.left_equivalent(fam[a], fam[b]) == same


def test_shifted_family_column_rule(t):
    inv3 = pow(3, -1, 17)
    fam = codes.build_shifted_family(3, t.A)
    assert all(fam.column(j) == t.A.column(inv3 * j % 17) for j in range(17))
    assert codes.build_shifted_family(1, t.A) == t.A


def test_short_code():
    sc = codes.find_code_13_4_6()
    assert sc.generator.shape == (4, 13)
    assert gf2.min_distance(sc.generator) == 6
    assert sc.dual.shape == (9, 13)
    assert (sc.generator @ sc.dual.T).is_zero()
    # dual columns give a valid coloring: no 5 of them dependent
    assert gf2.no_k_columns_dependent(sc.dual, 5)
    assert len(set(sc.dual.columns())) == 13
