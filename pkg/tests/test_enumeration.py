import collections

import pytest

from conftest import W3, W4, seq_add, seq_geometric, seq_mul, seq_one, seq_star
from stripwalks import (
    IrreducibleFactor,
    StripGeometry,
    Walk,
    classify_irreducible,
    count_bridges,
    count_bridges_by_span,
    count_half_space,
    count_irreducible,
    count_saws,
    cut_points,
    decompose_bridge,
    hw_decompose,
    hw_reflect,
    is_bridge,
    is_half_space,
    iter_walks,
    transform_irreducible_w4,
)
from stripwalks.enumeration import bridge_span_table, is_simple_factor


class TestCounts:
    def test_saw_counts_two_rows(self, saws_w2_22):
        # Hand enumeration: {RR,RU,LL,LU,UR,UL} at n=2; twice that at n=3.
        assert saws_w2_22.counts[:4] == (1, 3, 6, 12)

    def test_saw_counts_width3(self):
        assert count_saws(W3, 6).counts == (1, 4, 10, 22, 42, 90, 182)

    def test_bridge_counts_width3(self, bridges_w3_18):
        assert bridges_w3_18.counts[:8] == (1, 1, 3, 5, 9, 17, 33, 63)

    def test_half_space_counts_width3(self, half_space_w3_14):
        # At n=3 only RRR, RRU, RRD, RUR, RDR fit inside the strip.
        assert half_space_w3_14.counts[:6] == (1, 1, 3, 5, 11, 19)

    def test_bridge_counts_width4(self, bridges_w4_16):
        assert bridges_w4_16.counts[:8] == (1, 1, 3, 6, 12, 24, 50, 103)

    def test_half_space_counts_width4(self, half_space_w4_14):
        assert half_space_w4_14.counts[:6] == (1, 1, 3, 6, 14, 29)

    def test_empty_strip_cases(self):
        assert count_saws(W3, 0).counts == (1,)
        assert count_bridges(W4, 1).counts == (1, 1)

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            count_saws(W3, -1)
        with pytest.raises(ValueError):
            count_bridges_by_span(W3, -1, 0)

    def test_bridges_subset_of_half_space(self, bridges_w3_18, half_space_w3_14):
        assert all(
            b <= h for b, h in zip(bridges_w3_18.counts, half_space_w3_14.counts)
        )


class TestSpans:
    def test_span_zero_length(self):
        assert count_bridges_by_span(W3, 0, 0) == 1
        assert count_bridges_by_span(W3, 0, 1) == 0

    def test_span_length_two(self):
        assert count_bridges_by_span(W3, 2, 1) == 2  # RU, RD
        assert count_bridges_by_span(W3, 2, 2) == 1  # RR

    def test_span_sums_recover_bridge_counts(self, bridges_w3_18):
        for n in range(11):
            assert sum(bridge_span_table(W3, n).values()) == bridges_w3_18[n]

    def test_half_space_span_zero_note(self):
        # Only the single-point walk has span 0.
        for w in iter_walks(W3, 6, kind="half_space"):
            assert (w.span() == 0) == (w.length == 0)


class TestIterWalks:
    def test_kinds_are_consistent(self):
        saws = list(iter_walks(W3, 5, kind="saw"))
        halves = list(iter_walks(W3, 5, kind="half_space"))
        bridges = list(iter_walks(W3, 5, kind="bridge"))
        assert len(saws) == sum(count_saws(W3, 5).counts)
        assert len(halves) == sum(count_half_space(W3, 5).counts)
        assert len(bridges) == sum(count_bridges(W3, 5).counts)
        assert all(is_half_space(w) for w in halves)
        assert all(is_bridge(w) for w in bridges)

    def test_deterministic_visit_order(self):
        # Fixed step order R, U, D, L; prefixes come before extensions.
        got = [w.steps() for w in iter_walks(W3, 2, kind="saw")]
        assert got == [
            "", "R", "RR", "RU", "RD", "U", "UR", "UL",
            "D", "DR", "DL", "L", "LU", "LD", "LL",
        ]

    def test_every_bridge_is_half_space(self):
        for strip in (W3, W4):
            for w in iter_walks(strip, 12, kind="bridge"):
                assert is_half_space(w)

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            next(iter_walks(W3, 2, kind="nope"))


class TestDecomposition:
    def test_pure_right_run(self):
        d = decompose_bridge(Walk.from_steps("RRR"), W3)
        assert d.factors == ()
        assert d.trailing_right_run == 3

    def test_single_factor_with_trailing_run(self):
        d = decompose_bridge(Walk.from_steps("RUR"), W3)
        assert len(d.factors) == 1
        f = d.factors[0]
        assert f.walk.steps() == "RU"
        assert f.tail_length == 0
        assert f.bridge_type == "IO"
        assert d.trailing_right_run == 1

    def test_tail_merging(self):
        # Two leading right steps merge into the staircase factor as its tail.
        staircase = "RRRRRR" + "U" + "LLLLL" + "U" + "RRRRR"
        walk = Walk.from_steps("RR" + staircase)
        d = decompose_bridge(walk, StripGeometry(0, 2))
        assert len(d.factors) == 1
        assert d.factors[0].tail_length == 2
        assert d.factors[0].bridge_type == "OO"
        assert d.trailing_right_run == 0

    def test_rejects_non_bridge(self):
        with pytest.raises(ValueError):
            decompose_bridge(Walk.from_steps("UR"), W3)

    def test_cut_points_example(self):
        assert cut_points(Walk.from_steps("RUR")) == (2,)
        assert cut_points(Walk.from_steps("RRR")) == (1, 2)
        assert cut_points(Walk.from_steps("RURD")) == (2,)

    def test_reassembly_is_identity(self):
        for strip in (W3, W4):
            for walk in iter_walks(strip, 14, kind="bridge"):
                d = decompose_bridge(walk, strip)
                assert d.reassemble_steps() == walk.steps()

    def test_factors_are_irreducible_bridges(self):
        for walk in iter_walks(W3, 10, kind="bridge"):
            for f in decompose_bridge(walk, W3).factors:
                assert is_bridge(f.walk)
                inner = cut_points(f.walk)
                assert inner == tuple(range(1, f.tail_length + 1))
                assert f.walk.length - f.tail_length >= 2


class TestClassification:
    def test_classify_examples(self):
        io = IrreducibleFactor(Walk.from_steps("RU"), 0, 0)
        assert classify_irreducible(io, W3) == "IO"
        oo = IrreducibleFactor(Walk.from_steps("RDD"), 1, 0)
        assert classify_irreducible(oo, W3) == "OO"
        ii = IrreducibleFactor(Walk.from_steps("RU"), 0, 0)
        assert classify_irreducible(ii, W4) == "II"

    def test_rejects_other_widths(self):
        f = IrreducibleFactor(Walk.from_steps("RU"), 0, 0)
        with pytest.raises(ValueError):
            classify_irreducible(f, StripGeometry(0, 1))

    def test_mirror_symmetry_width3(self):
        # Bridge-ness, span and factor types are invariant under y -> -y.
        for walk in iter_walks(W3, 9, kind="bridge"):
            mirrored = Walk(tuple((x, -y) for x, y in walk.points))
            assert is_bridge(mirrored)
            assert mirrored.span() == walk.span()
            t1 = [f.bridge_type for f in decompose_bridge(walk, W3).factors]
            t2 = [f.bridge_type for f in decompose_bridge(mirrored, W3).factors]
            assert t1 == t2


class TestIrreducibleCounts:
    def test_width3_values(self):
        assert count_irreducible(W3, "OO", 6, 1).counts == (0, 0, 0, 1, 1, 1, 2)
        assert count_irreducible(W3, "IO", 4, 0).counts == (0, 0, 2, 2, 2)
        assert count_irreducible(W3, "OI", 4, 1).counts == (0, 0, 1, 1, 1)

    def test_start_line_symmetry(self):
        for t, lines in (("OO", (2, -1)), ("OI", (2, -1)), ("IO", (1, 0)), ("II", (1, 0))):
            a = count_irreducible(W4, t, 10, lines[0]).counts
            b = count_irreducible(W4, t, 10, lines[1]).counts
            assert a == b

    def test_rejects_inconsistent_start_line(self):
        with pytest.raises(ValueError):
            count_irreducible(W3, "OO", 6, 0)
        with pytest.raises(ValueError):
            count_irreducible(W3, "IO", 6, 1)

    def test_type_swap_counts_equal_width4(self):
        for tailless in (False, True):
            oi = count_irreducible(W4, "OI", 12, 2, tailless=tailless).counts
            io = count_irreducible(W4, "IO", 12, 1, tailless=tailless).counts
            assert oi == io


def _compose_by_convolution(strip, n_max):
    """Independent series-level composition of the bridge code from
    enumerated irreducible-factor tables."""
    width = strip.width
    outer, inner = strip.y_max, strip.y_max - 1
    atom = lambda t, line: count_irreducible(strip, t, n_max, line).counts
    io = atom("IO", inner)
    oi = atom("OI", outer)
    oo_star = seq_star(atom("OO", outer), n_max)
    io_oo = seq_mul(io, oo_star, n_max)
    if width == 3:
        loop = seq_mul(io_oo, oi, n_max)
        head = seq_star(loop, n_max)
        tilde = seq_add(seq_one(n_max), io_oo, n_max)
        return seq_mul(seq_mul(head, tilde, n_max), seq_geometric(n_max), n_max)
    ii_star = seq_star(atom("II", inner), n_max)
    loop = seq_mul(seq_mul(ii_star, io_oo, n_max), oi, n_max)
    head = seq_star(loop, n_max)
    tilde = seq_add(seq_one(n_max), io_oo, n_max)
    out = seq_mul(seq_mul(head, ii_star, n_max), tilde, n_max)
    return seq_mul(out, seq_geometric(n_max), n_max)


class TestCodeRegeneratesBridges:
    def test_width3(self, bridges_w3_18):
        n = 14
        assert _compose_by_convolution(W3, n) == bridges_w3_18.counts[: n + 1]

    def test_width4(self, bridges_w4_16):
        n = 14
        assert _compose_by_convolution(W4, n) == bridges_w4_16.counts[: n + 1]


class TestHWDecomposition:
    def test_bridge_is_k1(self):
        d = hw_decompose(Walk.from_steps("RRU"))
        assert d.k == 1
        assert d.spans == (2,)
        assert d.cut_indices == (3,)

    def test_two_span_example(self):
        d = hw_decompose(Walk.from_steps("RRUL"))
        assert d.spans == (2, 1)
        assert d.cut_indices == (3, 4)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            hw_decompose(Walk.from_steps(""))
        with pytest.raises(ValueError):
            hw_decompose(Walk.from_steps("RUL"))

    def test_k_bound_and_subwalk_structure(self):
        for strip, cap in ((W3, 3), (W4, 4)):
            for walk in iter_walks(strip, 10, kind="half_space"):
                if walk.length == 0:
                    continue
                d = hw_decompose(walk)
                assert d.k <= cap
                assert d.cut_indices[-1] == walk.length
                assert (d.k == 1) == is_bridge(walk)
                # each subwalk between cuts is a bridge or a reflected bridge
                bounds = (0,) + d.cut_indices
                for i in range(len(bounds) - 1):
                    seg = walk.points[bounds[i] : bounds[i + 1] + 1]
                    x0, y0 = seg[0]
                    fwd = Walk(tuple((x - x0, y - y0) for x, y in seg))
                    rev = Walk(tuple((x0 - x, y - y0) for x, y in seg))
                    assert is_bridge(fwd) or is_bridge(rev)

    def test_reflection_span_arithmetic(self):
        seen = 0
        for walk in iter_walks(W3, 10, kind="half_space"):
            if walk.length == 0:
                continue
            d = hw_decompose(walk)
            if d.k < 2:
                continue
            seen += 1
            img = hw_reflect(walk, d)
            assert is_half_space(img)
            di = hw_decompose(img)
            assert di.spans == (d.spans[0] + d.spans[1],) + d.spans[2:]
        assert seen > 0

    def test_reflection_injective_per_class(self):
        classes = collections.defaultdict(set)
        for walk in iter_walks(W3, 10, kind="half_space"):
            if walk.length == 0:
                continue
            d = hw_decompose(walk)
            if d.k < 2:
                continue
            img = hw_reflect(walk, d)
            key = (walk.length, d.spans)
            assert img.points not in classes[key]
            classes[key].add(img.points)

    def test_reflection_rejects_bridges(self):
        with pytest.raises(ValueError):
            hw_reflect(Walk.from_steps("RRU"))


class TestTransformWidth4:
    def test_staircase_example(self):
        # An outer-to-outer factor without tail and its transformed walk.
        factor = IrreducibleFactor(Walk.from_steps("RRRDRDLLULDDRRR"), 2, 0, "OO")
        out = transform_irreducible_w4(factor, W4)
        assert out.steps() == "RRRDR" + "R" + "URRDRU" + "R" + "DRRR"

    def test_rejects_simple_and_tailed_factors(self):
        simple = IrreducibleFactor(Walk.from_steps("RDD"), 2, 0, "OI")
        with pytest.raises(ValueError):
            transform_irreducible_w4(simple, W4)
        tailed = IrreducibleFactor(Walk.from_steps("RRRDRDLLULDDRRR"), 2, 1, "OO")
        with pytest.raises(ValueError):
            transform_irreducible_w4(tailed, W4)
        with pytest.raises(ValueError):
            transform_irreducible_w4(
                IrreducibleFactor(Walk.from_steps("RU"), 0, 0), W3
            )

    def test_codomain_and_injectivity(self):
        # End-line offset of the transformed walk relative to its start,
        # after normalizing to an upper start line.
        end_offset = {"OO": -1, "OI": 0, "IO": 0, "II": 1}
        added = {"OO": 2, "OI": 1, "IO": 1, "II": 0}
        images = collections.defaultdict(set)
        seen = collections.Counter()
        for start in (2, 1, 0, -1):
            shifted = W4.shift_origin(start)
            for walk in iter_walks(shifted, 12, kind="bridge"):
                if walk.length == 0:
                    continue
                cuts = cut_points(walk)
                if cuts or walk.length < 2:
                    continue
                factor = IrreducibleFactor(walk, start, 0)
                btype = classify_irreducible(factor, W4)
                if is_simple_factor(factor):
                    continue
                img = transform_irreducible_w4(factor, W4)
                seen[btype] += 1
                ys = [p[1] for p in img.points]
                assert max(ys) - min(ys) <= 1
                assert "L" not in img.steps()
                assert img.length == walk.length + added[btype]
                assert img.end[1] == end_offset[btype]
                key = (btype, start)
                assert img.points not in images[key]
                images[key].add(img.points)
        assert all(seen[t] > 0 for t in ("OO", "OI", "IO", "II"))

    def test_every_irreducible_is_simple_or_complicated(self):
        for start in (2, 1, 0, -1):
            shifted = W4.shift_origin(start)
            for walk in iter_walks(shifted, 12, kind="bridge"):
                if walk.length == 0 or cut_points(walk) or walk.length < 2:
                    continue
                factor = IrreducibleFactor(walk, start, 0)
                if not is_simple_factor(factor):
                    transform_irreducible_w4(factor, W4)  # must not raise
