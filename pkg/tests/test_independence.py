import pytest

from racah_natural.independence import (
    CapLimitExceededError,
    QuadPoly,
    RankedMonomial,
    RankTieError,
    certificate_size,
    certificate_tuples,
    injectivity_certificate,
    leading_monomial,
    predicted_leading_monomial,
    solve_exponents,
    verify_independence_substitution,
    verify_leading_monomial_law,
    verify_theta_independence,
    x1,
    x2,
    ys,
)


def test_ranks():
    assert RankedMonomial(1, 0, 1, 0).rank == 8
    assert RankedMonomial(0, 1, 0, 1).rank == 3
    assert str(RankedMonomial(5, 1, 1, 1)) == "x1^5 x2 x3 x4"
    assert str(RankedMonomial(0, 0, 0, 0)) == "1"


def test_leading_monomials():
    y1, y2, y3, y4 = ys()
    assert leading_monomial(y2) == RankedMonomial(1, 0, 1, 0)
    assert leading_monomial(QuadPoly(1)) == RankedMonomial(0, 0, 0, 0)
    assert leading_monomial(y1 * y2 * y3 * y4) == RankedMonomial(5, 1, 1, 1)
    assert leading_monomial(y1**2) == RankedMonomial(4, 2, 0, 0)
    assert predicted_leading_monomial(1, 1, 1, 1) == RankedMonomial(5, 1, 1, 1)
    assert solve_exponents(RankedMonomial(5, 1, 1, 1)) == (1, 1, 1, 1)


def test_leading_monomial_errors():
    with pytest.raises(ValueError):
        leading_monomial(QuadPoly(0))
    with pytest.raises(RankTieError):
        leading_monomial(QuadPoly(x2**5 + x1))


def test_leading_monomial_law():
    report = verify_leading_monomial_law(max_exp=1, seed=3)
    assert report.passed, report.summary()
    assert len(report.checks) == 16 * 4


def test_substitution():
    report = verify_independence_substitution()
    assert report.passed, report.summary()


@pytest.mark.parametrize("degree", [0, 1])
def test_theta_independence(degree):
    report = verify_theta_independence(degree)
    assert report.passed, report.summary()
    assert len(report.checks) == 2
    assert report.checks[0].citation.endswith(f"<= {degree} are independent")


def test_certificate_small():
    certificate = injectivity_certificate((1, 1, 1, 0, 0, 0, 0))
    assert certificate.passed
    assert (certificate.rank, certificate.dimension) == (8, 8)
    assert certificate.summary() == "injectivity caps 1,1,1,0,0,0,0: rank 8 of 8 [PASS]"
    assert certificate.to_structured()["status"] == "pass"


def test_certificate_trivial():
    certificate = injectivity_certificate((0,) * 7)
    assert (certificate.rank, certificate.dimension) == (1, 1)


def test_certificate_caps():
    assert len(certificate_tuples((0, 5, 0, 0, 0, 0, 0))) == 2
    with pytest.raises(CapLimitExceededError):
        injectivity_certificate((1,) * 7, cap_limit=10)
    for caps in ((1, 1), (1, 1, 1, 1, 1, 1, -1)):
        with pytest.raises(ValueError):
            certificate_tuples(caps)


def test_certificate_dump(tmp_path):
    path = tmp_path / "matrix.txt"
    certificate = injectivity_certificate((1, 1, 0, 0, 0, 0, 0), dump=str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "# caps 1 1 0 0 0 0 0"
    assert lines[1].startswith("# rows 4 columns ")
    assert lines[1].endswith(f"rank {certificate.rank}")
    assert lines[2] == "# row 0: 0 0 0 0 0 0 0 height 0 depth 0"
    assert any(not line.startswith("#") for line in lines)


def test_cap_limit_is_checked_before_listing_tuples():
    caps = (60, 1, 60, 60, 60, 60, 60)
    assert certificate_size(caps) == 2 * 61**6
    assert certificate_size((0, 5, 0, 0, 0, 0, 0)) == 2
    with pytest.raises(CapLimitExceededError):
        injectivity_certificate(caps, cap_limit=2000)
