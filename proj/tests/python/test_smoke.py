from fractions import Fraction

import limdens


def test_classify():
    d = limdens.classify("unary", "f^3(a)=f^7(a)")
    assert d["variant"] == "RhoShape"
    assert d["chain"] == 3
    assert d["cycle"] == 4
    assert limdens.classify("bijective", "S^2(a)=a")["size"] == 2
    assert limdens.classify("abelian", "a a a")["order"] == 3
    assert limdens.classify("two-id-bijective", "S^4(a)=a", "S^6(a)=a")["size"] == 2


def test_counts():
    assert limdens.identity_count("bijective", 3) == 15
    assert limdens.identity_count("unary", 2) == 6
    assert limdens.total_presentations("bijective", 1, k=2, mode="ordered-with-rep") == 9
    assert limdens.alpha_count(1, 1) == 2
    # exact arbitrary precision survives the trip to python
    assert limdens.identity_count("bijective", 200) == 2**201 - 1


def test_residue_shares():
    shares = limdens.residue_shares(2, 60)
    assert abs(shares[0] - Fraction(2, 3)) < Fraction(1, 10**6)


def test_density_series():
    series = limdens.density_series("bijective", "BijAlpha n=1 k=1", 3, strategy="enumerate")
    assert series[3] == (3, Fraction(8, 15))
    agg = limdens.density_series("abelian", "SzBeta p=3 n=0 k=1", 300)
    assert abs(agg[-1][1] - Fraction(1, 3)) < Fraction(1, 1000)


def test_coprime_density():
    series, even_ref, odd_ref = limdens.coprime_density(200)
    assert abs(even_ref - 0.45032) < 1e-4
    assert abs(odd_ref - 0.72051) < 1e-4
    values = dict(series)
    assert values[1] == Fraction(8, 9)
    assert abs(float(values[200]) - even_ref) < 0.05
    assert abs(float(values[199]) - odd_ref) < 0.05


def test_walk():
    tv = limdens.walk_tv_distance(5, "0:1/2,1:1/4,-1:1/4", 200)
    assert tv < Fraction(1, 10**9)
    mass = limdens.walk_distribution(3, "2:1/4,-2:1/4,0:1/2", 1)
    assert mass == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]


def test_group_and_balls():
    spec = limdens.cli(["group", "--family", "bijective"])
    assert spec[0] == 0
    code_a = limdens.ball_code("bijective", "S^7(a)=a", 2)
    code_b = limdens.ball_code("bijective", "S^9(a)=a", 2)
    code_small = limdens.ball_code("bijective", "S^3(a)=a", 2)
    assert code_a == code_b  # both radius-2 balls are 5-element paths
    assert code_a != code_small


def test_eval():
    assert limdens.eval_invariant("bijective", "S^5(a)=a", "BijAlpha n=5 k=1")
    assert not limdens.eval_invariant("bijective", "S^5(a)=a", "OneCycle")
    assert limdens.eval_sentence("unary", "f^1(a)=f^3(a)",
                                 "exists x. exists y. (x != y & f(x) = f(y))")


def test_cli_roundtrip():
    code, out, err = limdens.cli(["classify", "--family", "bijective", "--identity", "S^2(a)=a"])
    assert code == 0
    assert '"variant": "Cycle"' in out
    code, out, err = limdens.cli(["verify", "--only", "mod2"])
    assert code == 0
    assert "[PASS] C4" in out
