from lu.lattice import saturation_defect, smith_normal_form


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def test_smith_normal_form_diag_and_basis():
    diag, basis = smith_normal_form([[2, 0], [0, 3]], 2)
    assert diag == [1, 6]
    assert abs(_det2(basis)) == 1
    for d, b in zip(diag, basis):
        # d * b must lie in the input lattice 2Z x 3Z
        assert d * b[0] % 2 == 0 and d * b[1] % 3 == 0


def test_smith_divisibility_chain():
    diag, _ = smith_normal_form([[4, 0], [0, 6]], 2)
    assert diag == [2, 12]
    assert diag[1] % diag[0] == 0


def test_smith_rank_deficient():
    diag, basis = smith_normal_form([[2, 2]], 2)
    assert diag == [2, 0]
    assert abs(_det2(basis)) == 1


def test_saturation_defect():
    assert saturation_defect([[1, 0], [0, 1]], 2) is None
    assert saturation_defect([[1, 1]], 2) is None
    assert saturation_defect([[2, 0]], 2) == ([1, 0], 2)
    assert saturation_defect([[2, 2]], 2) == ([1, 1], 2)
    # index 6 sublattice with cyclic quotient
    u, k = saturation_defect([[2, 0], [0, 3]], 2)
    assert k > 1
