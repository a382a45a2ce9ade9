import pytest

from su21 import decomposition as dec


SAMPLES = dict(zip(dec.SAMPLE_CHARACTERS, ("I1", "II1", "II2", "I2", "III1", "III2")))


class TestChambers:
    def test_printed_samples(self):
        for (d, l), want in SAMPLES.items():
            assert dec.chamber_classify(d, l) == want

    def test_unclassified(self):
        assert dec.chamber_classify(0, 1) is None      # odd parity
        assert dec.chamber_classify(0, 0) is None      # origin
        assert dec.chamber_classify(2, 2) is None      # wall lam - d = 0
        assert dec.chamber_classify(-2, 2) is None     # wall lam + d = 0
        assert dec.chamber_classify(4, 0) is None      # lam = 0 between II1/II2

    def test_every_valid_char_classifies(self):
        for d in range(-8, 9):
            for l in range(-8, 9):
                if (l + d) % 2 or l + d == 0 or l - d == 0 or \
                        (l == 0 and (l + d) * (l - d) < 0):
                    continue
                assert dec.chamber_classify(d, l) is not None, (d, l)


class TestWeylReflections:
    def test_examples(self):
        assert dec.weyl_reflect(["a1"], 0, 4) == (-6, 2)
        assert dec.weyl_reflect(["a2"], 0, 4) == (6, 2)

    def test_involution_random(self, rng):
        for _ in range(100):
            d, l = rng.randint(-20, 20), rng.randint(-20, 20)
            assert dec.weyl_reflect(["a1", "a1"], d, l) == (d, l)
            assert dec.weyl_reflect(["a2", "a2"], d, l) == (d, l)

    def test_words_carry_samples_to_i1(self):
        for (d, l), ch in SAMPLES.items():
            assert dec.weyl_reflect(dec.CHAMBER_WORDS[ch], d, l) == (0, 4)

    def test_parity_preserved(self, rng):
        for _ in range(50):
            d = rng.randint(-10, 10)
            l = rng.randint(-10, 10)
            if (l + d) % 2:
                continue
            d2, l2 = dec.weyl_reflect(["a1", "a2"], d, l)
            assert dec.is_integral_char(d2, l2)


class TestSubquotients:
    def test_vfin_example(self):
        assert dec.subquotient_ktypes("V_fin", 0, 4, 12) == \
            {(0, 0), (1, 1), (1, -1), (2, 0)}

    def test_ii1_lowest_disc(self):
        assert dec.lowest_ktype("V_disc-", 6, 2) == (0, -6)

    def test_i1_q_lowest(self):
        assert dec.lowest_ktype("Q+", 0, 4) == (1, 3)
        assert dec.lowest_ktype("Q-", 0, 4) == (1, -3)

    def test_lowest_tables_all_samples(self):
        for (d, l) in SAMPLES:
            for tag, want in dec.lowest_ktype_table(d, l).items():
                assert dec.lowest_ktype(tag, d, l) == want, (d, l, tag)

    def test_wrong_tag_raises(self):
        with pytest.raises(ValueError):
            dec.subquotient_ktypes("V_disc+", 0, 4, 8)  # I1 has no disc piece
        with pytest.raises(ValueError):
            dec.subquotient_ktypes("V_fin", 0, 1, 8)    # unclassified

    def test_partition(self):
        for (d, l) in SAMPLES:
            assert dec.partition_ok(d, l, 16)
            total = set()
            series = dec.composition_series(d, l)
            for tag in series.tags():
                pts = dec.subquotient_ktypes(tag, d, l, 16)
                assert not (total & pts)
                total |= pts
            assert total == set(dec.lattice_points(16))


class TestCompositionSeries:
    def test_i1(self):
        cs = dec.composition_series(0, 4)
        assert cs.levels == (frozenset({"V_H"}), frozenset({"Q+", "Q-"}),
                             frozenset({"V_fin"}))
        assert cs.submodule_chain()[0] == frozenset({"V_H"})
        assert cs.submodule_chain()[-1] == cs.tags()

    def test_i2(self):
        cs = dec.composition_series(0, -4)
        assert cs.levels[0] == frozenset({"V_fin"})
        assert cs.levels[2] == frozenset({"V_H"})

    def test_iii1(self):
        cs = dec.composition_series(-6, 2)
        assert cs.levels == (frozenset({"V_H", "V_disc+"}), frozenset({"Q+"}))

    def test_ii_pair_swap(self):
        up = dec.composition_series(6, 2)
        dn = dec.composition_series(6, -2)
        assert up.levels == (frozenset({"V_H", "V_disc-"}), frozenset({"Q-"}))
        assert dn.levels == (frozenset({"Q-"}), frozenset({"V_H", "V_disc-"}))

    def test_closure_sets(self):
        cs = dec.composition_series(0, 4)
        assert cs.closure_of("V_H") == frozenset({"V_H"})
        assert cs.closure_of("Q+") == frozenset({"Q+", "V_H"})
        assert cs.closure_of("V_fin") == cs.tags()
        with pytest.raises(ValueError):
            cs.closure_of("V_disc+")

    def test_unclassified_raises(self):
        with pytest.raises(ValueError):
            dec.composition_series(0, 1)


class TestClosure:
    def test_all_samples_k12(self):
        for (d, l) in SAMPLES:
            rep = dec.verify_closure(d, l, 12)
            assert rep.ok, (d, l, rep.violations[:3])
            assert rep.sources == sum(1 for _ in dec.lattice_points(12))

    def test_violation_detection(self):
        # sabotage: pretend (0,4) has the I2 filtration; closure must fail
        rep = dec.verify_closure(0, 4, 8)
        assert rep.ok
        import su21.decomposition as d2
        orig = d2._FILTRATIONS["I1"]
        d2._FILTRATIONS["I1"] = d2._FILTRATIONS["I2"]
        try:
            bad = dec.verify_closure(0, 4, 8)
            assert not bad.ok
        finally:
            d2._FILTRATIONS["I1"] = orig


class TestIntegralCharacterSweep:
    """Every classified integral character, not just the printed samples."""

    PAIRS = [(d, l) for d in range(-8, 9) for l in range(-8, 9)
             if dec.chamber_classify(d, l)]

    def test_closure_everywhere(self):
        for (d, l) in self.PAIRS:
            rep = dec.verify_closure(d, l, 8)
            assert rep.ok, (d, l, rep.violations[:2])

    def test_partition_everywhere(self):
        for (d, l) in self.PAIRS:
            assert dec.partition_ok(d, l, 12), (d, l)

    def test_lowest_tables_everywhere(self):
        for (d, l) in self.PAIRS:
            for tag, want in dec.lowest_ktype_table(d, l).items():
                assert dec.lowest_ktype(tag, d, l) == want, (d, l, tag)

    def test_finite_dim_everywhere(self):
        for (d, l) in self.PAIRS:
            if dec.chamber_classify(d, l) in ("I1", "I2"):
                assert dec.finite_dim_check(d, l).ok, (d, l)

    def test_generated_submodule_matches_region(self):
        # the region containing the spherical K-type, intersected with the
        # socle level, is exactly the set reachable from (0, 0) by nonzero
        # ladder steps inside that level
        for (d, l) in ((1, -3), (2, -4), (0, -4), (1, 3), (3, -5)):
            series = dec.composition_series(d, l)
            socle = series.levels[0]
            src_tag = dec.region_of(d, l, 0, 0)
            if src_tag not in socle:
                continue
            region = dec.subquotient_ktypes(src_tag, d, l, 16)
            reached = {(0, 0)}
            frontier = [(0, 0)]
            while frontier:
                k, l0 = frontier.pop()
                for sign in (1, -1):
                    for j0t in (-1, 1):
                        kk, ll = k + j0t, l0 + sign
                        if kk < 0 or abs(ll) > kk or (kk, ll) in reached:
                            continue
                        from su21.action import _Q_AMPLITUDE, _kappa
                        from su21.surd import HalfInt, half
                        from fractions import Fraction
                        amp = _Q_AMPLITUDE[(j0t, sign)](HalfInt(k), HalfInt(l0))
                        lin = _kappa(j0t, sign, HalfInt(k),
                                     half(Fraction(3 * l0, 2) - d),
                                     HalfInt(l0)).eval_at(Fraction(l))
                        if not amp.is_zero() and lin != 0:
                            reached.add((kk, ll))
                            frontier.append((kk, ll))
            assert reached == region, (d, l, sorted(reached), sorted(region))


class TestFiniteDim:
    def test_examples(self):
        assert dec.finite_dim_check(0, 4).dimension == 8
        assert dec.finite_dim_check(2, 4).dimension == 6
        assert dec.finite_dim_check(0, -4).dimension == 8
        for args in ((0, 4), (2, 4), (0, -4), (4, 8), (0, -10), (2, -8)):
            assert dec.finite_dim_check(*args).ok

    def test_wrong_chamber(self):
        with pytest.raises(ValueError):
            dec.finite_dim_check(6, 2)
