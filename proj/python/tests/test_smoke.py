import jalg


def test_catalog_algebras_are_jordan():
    for name in ["J5", "J7", "J17", "defmap-J", "A2", "V3"]:
        ok, summary = jalg.Algebra.catalog(name).jordan_check()
        assert ok, summary


def test_parse_and_failing_identity():
    alg = jalg.Algebra.parse(
        "field Q\nbasis a b u v\nmult a a = a\nmult b b = b\n"
        "mult a u = 1/2 u\nmult b u = 1/2 u\nmult a v = 2 v\n"
    )
    assert alg.dim == 4
    ok, summary = alg.jordan_check()
    assert not ok
    assert "FAIL" in summary


def test_parse_error_is_value_error():
    try:
        jalg.Algebra.parse("field Q\nbasis a b\nmult a b = 0\nmult b a = 0\n")
    except ValueError as e:
        assert "line 4" in str(e)
    else:
        raise AssertionError("duplicate pair accepted")


def test_bicross_rebuilds_j17():
    pair = jalg.MatchedPair.catalog("J17-pair")
    assert pair.mp_check()[0]
    assert pair.bicross() == jalg.Algebra.catalog("J17")


def test_deformations_of_defmap_pair():
    pair = jalg.MatchedPair.catalog("defmap-pair")
    assert jalg.deformation_check(pair, "u -> a + b; v -> alpha b")[0]
    assert not jalg.deformation_check(pair, "u -> a; v -> b")[0]
    assert jalg.r_deform(pair, "u -> a; v -> 0") == jalg.Algebra.catalog("V3")
    f5 = pair.over("F5")
    assert len(jalg.enumerate_deformations(f5)) == 20
    report = jalg.factorization_index(f5)
    assert report["index"] == 4
    assert report["partitions_agree"]


def test_iso_and_cli():
    v = jalg.Algebra.catalog("V").over("F5")
    v3 = jalg.Algebra.catalog("V3").over("F5")
    assert jalg.iso(v, v3)[0] == "not isomorphic"
    outcome, witness = jalg.iso(jalg.Algebra.catalog("V1"), jalg.Algebra.catalog("V2-prime"), "invariants")
    assert outcome == "isomorphic"
    assert jalg.hom_check(witness, jalg.Algebra.catalog("V1"), jalg.Algebra.catalog("V2-prime"))
    code, out, _ = jalg.run_cli(["check", "catalog:J5"])
    assert code == 0 and "Jordan identity: PASS" in out
    assert "defmap-pair" in jalg.catalog_names()
