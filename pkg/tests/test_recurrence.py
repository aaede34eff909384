import pytest

from harmsum.acceptance import G_LEADING, MULTISECTION_BLOCKS, TABLE_F, TABLE_KAPPA_THIRDS
from harmsum.recurrence import (
    CATALOG,
    F_MULTISECTION_SPEC,
    F_SPEC,
    G_SPEC,
    H_COEFFS,
    J_SPEC,
    KAPPA_LACUNARY_SPEC,
    KAPPA_MULTISECTION_COEFFS,
    KAPPA_SPEC,
    RecurrenceSpec,
    eval_exact,
    eval_mod,
    g_from_f,
    h_spec,
    j_decompose_g,
    multisection_block,
    terms_exact,
    terms_mod,
)

from conftest import primes_between


def naive_terms(coeffs, initials, count):
    a = list(initials)
    while len(a) < count:
        a.append(sum(c * a[-i] for i, c in enumerate(coeffs, 1)))
    return a[:count]


def satisfies(seq, coeffs, start):
    d = len(coeffs)
    return all(
        seq[t] == sum(c * seq[t - i] for i, c in enumerate(coeffs, 1))
        for t in range(max(start, d), len(seq))
    )


def test_spec_validation():
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (1, 1), (0,))
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (), ())
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (1,), (0, 0), step=1)
    assert RecurrenceSpec("ok", (1,), (0, 0), step=2).order == 1


@pytest.mark.parametrize("spec", list(CATALOG.values()), ids=lambda s: s.name)
def test_specs_reproduce_their_initials(spec):
    assert terms_exact(spec, len(spec.initials)) == list(spec.initials)


def test_eval_exact_examples():
    assert eval_exact(F_SPEC, 12) == -2114
    assert eval_exact(KAPPA_SPEC, 21) == 3 * 877799
    j = [0, 2, -1]
    while len(j) < 11:
        j.append(3 * j[-2] - j[-3])
    assert j[10] == -308
    assert eval_exact(J_SPEC, 11) == -308


def test_j_recurrence_starts_at_four():
    assert terms_exact(J_SPEC, 4) == [0, 2, -1, 6]


def test_published_tables():
    assert terms_exact(F_SPEC, 36) == TABLE_F
    assert [k // 3 for k in terms_exact(KAPPA_SPEC, 36)] == TABLE_KAPPA_THIRDS
    assert terms_exact(G_SPEC, 12) == G_LEADING


def test_f_recurrence_reading_of_fifth_term():
    # the printed "80(n - 5)" read as 80 f(n - 5); f(10) then matches the table
    assert eval_exact(F_SPEC, 10) == -932
    assert eval_exact(G_SPEC, 10) == -310


def test_eval_mod_examples():
    assert eval_mod(F_SPEC, 13, 13) == 0
    assert -1755 % 169 == 104
    assert eval_mod(F_SPEC, 13, 169) == 104
    assert eval_mod(J_SPEC, 1, 97) == 0
    with pytest.raises(ValueError):
        eval_mod(F_SPEC, 0, 7)
    with pytest.raises(ValueError):
        eval_mod(F_SPEC, 20, 7, method="bogus")


@pytest.mark.parametrize("spec", list(CATALOG.values()), ids=lambda s: s.name)
@pytest.mark.parametrize("m", [97, 97**2, 2**31 - 1])
def test_eval_mod_agrees_with_exact(spec, m):
    exact = terms_exact(spec, 200)
    for n in range(1, 201):
        assert eval_mod(spec, n, m) == exact[n - 1] % m
    for n in range(1, 201, 13):
        assert eval_mod(spec, n, m, method="matrix") == exact[n - 1] % m


def test_terms_mod_window():
    exact = terms_exact(J_SPEC, 60)
    assert terms_mod(J_SPEC, 40, 3, 10007) == [v % 10007 for v in exact[39:42]]
    assert terms_mod(KAPPA_LACUNARY_SPEC, 100, 2, 991) == [
        eval_exact(KAPPA_SPEC, n) % 991 for n in (100, 101)
    ]


def test_large_index_matrix_and_poly_agree():
    m = 1_000_003**2
    for spec in (F_SPEC, KAPPA_SPEC, J_SPEC):
        assert eval_mod(spec, 10**12 + 39, m) == eval_mod(spec, 10**12 + 39, m, method="matrix")


def test_fermat_sequences_vanish_at_primes():
    for p in primes_between(5, 5000):
        for spec in (F_SPEC, KAPPA_SPEC, J_SPEC):
            assert eval_mod(spec, p, p) == 0, (spec.name, p)


@pytest.mark.parametrize(
    "n, f_n, expected", [(4, -14, -4), (9, -501, -165), (7, -126, -42)]
)
def test_g_from_f_examples(n, f_n, expected):
    assert g_from_f(n, f_n) == expected


def test_g_from_f_whole_range():
    f = terms_exact(F_SPEC, 200)
    g = terms_exact(G_SPEC, 200)
    assert all(g_from_f(n, f[n - 1]) == g[n - 1] for n in range(1, 201))


def test_g_from_f_flags_bad_input():
    with pytest.raises(ArithmeticError):
        g_from_f(5, -31)


def test_j_decompose_examples():
    j = terms_exact(J_SPEC, 12)
    assert j[10] - j[9] - 2 == -517
    assert j_decompose_g(11) == -517
    assert -j[4] - j[3] + j[2] - 2 == -4
    assert j_decompose_g(4) == -4
    assert j[8] == -82
    assert j_decompose_g(9) == -165
    with pytest.raises(ValueError):
        j_decompose_g(1)


def test_j_decompose_whole_range():
    g = terms_exact(G_SPEC, 200)
    assert all(j_decompose_g(n) == g[n - 1] for n in range(2, 201))


@pytest.mark.parametrize("cls", [1, 2, 3, 4])
def test_multisection_blocks(cls):
    assert multisection_block(cls, 7) == MULTISECTION_BLOCKS[cls]
    assert multisection_block(cls, 3) == MULTISECTION_BLOCKS[cls][:3]


def test_multisection_block_arguments():
    with pytest.raises(ValueError):
        multisection_block(5, 3)
    with pytest.raises(ValueError):
        multisection_block(1, 0)


@pytest.mark.parametrize("cls", [1, 2, 3, 4])
def test_h_recurrence_beyond_seed(cls):
    block = multisection_block(cls, 7 + 25)
    assert satisfies(block, H_COEFFS, 7)
    assert terms_exact(h_spec(cls), 32) == block


@pytest.mark.parametrize("residue", range(9))
def test_f_fifth_order_multisection(residue):
    # includes the class n = 0 (mod 9), for which no claim is made
    f = terms_exact(F_SPEC, 9 * 30)
    section = f[residue::9]
    assert satisfies(section, F_MULTISECTION_SPEC.coeffs, 5)
    assert eval_exact(F_MULTISECTION_SPEC, 9 * 29 + residue + 1) == f[9 * 29 + residue]


@pytest.mark.parametrize("residue", range(18))
def test_kappa_fourth_order_multisection(residue):
    kappa = terms_exact(KAPPA_SPEC, 18 * 30)
    section = kappa[residue::18]
    assert satisfies(section, KAPPA_MULTISECTION_COEFFS, 4)


def test_kappa_multisection_sign():
    kappa = terms_exact(KAPPA_SPEC, 18 * 30)
    assert KAPPA_MULTISECTION_COEFFS[-1] == 19683
    negated = KAPPA_MULTISECTION_COEFFS[:-1] + (-19683,)
    assert not satisfies(kappa[::18], negated, 4)


def test_kappa_lacunary_72_step():
    assert terms_exact(KAPPA_LACUNARY_SPEC, 500) == terms_exact(KAPPA_SPEC, 500)


def test_naive_oracle_matches_catalog():
    for spec in (F_SPEC, G_SPEC, J_SPEC, KAPPA_SPEC):
        assert naive_terms(spec.coeffs, spec.initials, 120) == terms_exact(spec, 120)
