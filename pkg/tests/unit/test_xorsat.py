"""Unit tests for instances, generators, classical analysis and instance files."""

import numpy as np
import pytest

from xordual.gf2 import BitVector, rank2, solve2
from xordual.xorsat import (
    brute_force_classical,
    classical_energy,
    coupling_signs,
    format_instance,
    from_assignment,
    gauge_reduce,
    generate,
    generate_closure,
    generate_tree,
    leaf_removal,
    make_couplings,
    make_instance,
    parse_instance,
    read_instance,
    relabel,
    with_couplings,
    write_instance,
)
from xordual.utils.errors import (
    BadArityError,
    ConfigError,
    DuplicateEdgeError,
    InstanceFormatError,
    InvalidGError,
    InvalidInstanceError,
    OutOfRangeError,
    TooLargeError,
)


class TestMakeInstance:
    """Tests for make_instance validation."""

    def test_single_triangle(self):
        """Test a one-edge instance with default couplings."""
        inst = make_instance(3, [(1, 2, 3)])
        assert inst.n_edges == 1
        assert inst.couplings == (1,)

    def test_triples_sorted(self):
        """Test each triple is stored ascending."""
        inst = make_instance(6, [(3, 1, 2), (6, 4, 1)])
        assert inst.edges == ((1, 2, 3), (1, 4, 6))

    def test_bad_arity(self):
        """Test repeated vertices in one triple."""
        with pytest.raises(BadArityError):
            make_instance(4, [(1, 1, 2)])

    def test_out_of_range(self):
        """Test a label above N."""
        with pytest.raises(OutOfRangeError) as exc_info:
            make_instance(3, [(1, 2, 4)])
        assert exc_info.value.spin == 4

    def test_duplicate_edge(self):
        """Test the same triple twice, in any order."""
        with pytest.raises(DuplicateEdgeError):
            make_instance(4, [(1, 2, 3), (3, 2, 1)])

    def test_no_edges(self):
        """Test an instance without edges."""
        with pytest.raises(InvalidInstanceError):
            make_instance(3, [])

    def test_bad_couplings(self):
        """Test couplings outside +-1."""
        with pytest.raises(InvalidInstanceError):
            make_instance(3, [(1, 2, 3)], [2])


class TestGenerators:
    """Tests for the tree and closure families."""

    @pytest.mark.parametrize("g", range(1, 9))
    def test_tree_counts(self, g):
        """Test N = 3(2^g - 1), M = 3 * 2^(g-1) - 2 and max degree 2."""
        inst = generate_tree(g)
        assert inst.n_spins == 3 * (2**g - 1)
        assert inst.n_edges == 3 * 2 ** (g - 1) - 2
        assert max(inst.degrees().values()) <= 2

    def test_tree_two(self, tree2):
        """Test the nine-spin tree."""
        assert (tree2.n_spins, tree2.n_edges) == (9, 4)
        assert tree2.edges == ((1, 2, 3), (1, 4, 5), (2, 6, 7), (3, 8, 9))

    def test_tree_three(self):
        """Test the third generation and its kernel dimension."""
        inst = generate_tree(3)
        assert (inst.n_spins, inst.n_edges) == (21, 10)
        assert inst.n_spins - rank2(inst.incidence()) == 11

    def test_closure_one(self, closure1):
        """Test the six-spin closure."""
        assert closure1.edges == ((1, 2, 3), (1, 4, 6), (2, 4, 5), (3, 5, 6))

    @pytest.mark.parametrize("g", range(1, 7))
    def test_closure_degrees_and_kernel(self, g):
        """Test degree 2 everywhere, rows summing to zero and q = 3 * 2^(g-1)."""
        inst = generate_closure(g)
        assert inst.n_spins == 3 * (3 * 2 ** (g - 1) - 1)
        assert 3 * inst.n_edges == 2 * inst.n_spins
        assert set(inst.degrees().values()) == {2}
        total = 0
        for row in inst.incidence().row_bits:
            total ^= row
        assert total == 0
        assert inst.n_spins - rank2(inst.incidence()) == 3 * 2 ** (g - 1)

    @pytest.mark.parametrize("g", range(1, 7))
    def test_tree_kernel(self, g):
        """Test q = 3 * 2^(g-1) - 1 for the trees."""
        inst = generate_tree(g)
        assert inst.n_spins - rank2(inst.incidence()) == 3 * 2 ** (g - 1) - 1

    def test_closure_three(self):
        """Test the third closure generation."""
        inst = generate_closure(3)
        assert (inst.n_spins, inst.n_edges) == (33, 22)

    def test_invalid_g(self):
        """Test g = 0 for both families."""
        with pytest.raises(InvalidGError):
            generate_tree(0)
        with pytest.raises(InvalidGError):
            generate_closure(0)

    def test_dispatch(self):
        """Test generate picks the family and rejects unknown names."""
        assert generate("closure", 1).family == "closure"
        with pytest.raises(ConfigError):
            generate("ring", 1)


class TestCouplings:
    """Tests for coupling specifications."""

    def test_all_plus(self, closure1):
        """Test all-plus."""
        assert make_couplings(closure1, "all-plus") == (1, 1, 1, 1)

    def test_random_is_seeded(self, tree2):
        """Test the same seed gives the same signs."""
        assert make_couplings(tree2, "random", seed=3) == make_couplings(tree2, "random", seed=3)

    def test_unsat_on_redundant_edge(self, closure1):
        """Test the single -1 sits on the redundant edge."""
        assert make_couplings(closure1, "unsat") == (1, 1, 1, -1)

    def test_unsat_without_redundancy(self, tree2):
        """Test a tree has no unsatisfiable coupling choice."""
        with pytest.raises(InvalidInstanceError):
            make_couplings(tree2, "unsat")

    def test_explicit(self, closure1):
        """Test an explicit list and a wrong-length list."""
        assert make_couplings(closure1, "explicit:+1,-1,1,-1") == (1, -1, 1, -1)
        with pytest.raises(ConfigError):
            make_couplings(closure1, "explicit:+1,-1")

    def test_unknown(self, closure1):
        """Test an unknown spec."""
        with pytest.raises(ConfigError):
            make_couplings(closure1, "bimodal")

    def test_assignment_round(self, closure1):
        """Test J = (-1)^y both ways."""
        inst = from_assignment(closure1, BitVector.from_string("1001"))
        assert inst.couplings == (-1, 1, 1, -1)
        assert coupling_signs(inst).to_string() == "1001"


class TestLeafRemoval:
    """Tests for leaf_removal."""

    def test_tree_two(self, tree2):
        """Test the nine-spin tree decimates in four steps."""
        report = leaf_removal(tree2)
        assert report.fully_decimated
        assert len(report.steps) == 4
        assert report.residual_core == ()
        removed = [v for step in report.steps for v in step.spins]
        assert sorted(removed) == list(range(1, 10))

    def test_single_triangle(self, tree1):
        """Test one step removing all three spins."""
        report = leaf_removal(tree1)
        assert len(report.steps) == 1
        assert report.steps[0].spins == (1, 2, 3)
        assert report.pair_events == 1

    @pytest.mark.parametrize("g", range(1, 5))
    def test_closure_untouched(self, g):
        """Test leaf removal removes nothing from a closure."""
        inst = generate_closure(g)
        report = leaf_removal(inst)
        assert report.steps == ()
        assert report.residual_core == tuple(range(inst.n_edges))
        assert not report.fully_decimated

    @pytest.mark.parametrize("g", range(1, 7))
    def test_tree_order_independent(self, g):
        """Test every tree decimates fully under shuffled scan orders."""
        inst = generate_tree(g)
        rng = np.random.default_rng(g)
        for _ in range(3):
            order = [int(a) for a in rng.permutation(inst.n_edges)]
            assert leaf_removal(inst, edge_order=order).fully_decimated

    def test_bad_order(self, tree2):
        """Test an edge order that is not a permutation."""
        with pytest.raises(InvalidInstanceError):
            leaf_removal(tree2, edge_order=[0, 0, 1, 2])


class TestGauge:
    """Tests for gauge_reduce."""

    def test_already_normalized(self, closure1):
        """Test all +1 needs no flips."""
        gauge = gauge_reduce(closure1)
        assert gauge.case == "i"
        assert gauge.flips.bits == 0

    def test_even_product_is_satisfiable(self, closure1):
        """Test two negative couplings can be gauged away."""
        inst = with_couplings(closure1, (-1, -1, 1, 1))
        gauge = gauge_reduce(inst)
        assert gauge.satisfiable
        assert gauge.couplings == (1, 1, 1, 1)

    def test_odd_product(self, closure1):
        """Test one negative coupling leaves a single -1 on the redundant edge."""
        inst = with_couplings(closure1, (-1, 1, 1, 1))
        gauge = gauge_reduce(inst)
        assert gauge.case == "ii"
        assert gauge.negative_edges == (3,)

    def test_flips_relate_couplings(self, tree2):
        """Test J' = J * (-1)^(H f) edge by edge."""
        inst = with_couplings(tree2, make_couplings(tree2, "random", seed=9))
        gauge = gauge_reduce(inst)
        parities = inst.incidence().apply(gauge.flips)
        for a, (j, j_new) in enumerate(zip(inst.couplings, gauge.couplings)):
            assert j_new == j * (-1 if parities[a] else 1)
        assert gauge.couplings == (1,) * inst.n_edges


class TestBruteForce:
    """Tests for brute_force_classical and classical_energy."""

    def test_tree_two(self, tree2):
        """Test E0 = 0 with 2^(N - r) = 32 ground states."""
        ground = brute_force_classical(tree2)
        assert (ground.energy, ground.degeneracy) == (0, 32)

    def test_closure_one(self, closure1):
        """Test E0 = 0 with 8 ground states."""
        ground = brute_force_classical(closure1)
        assert (ground.energy, ground.degeneracy) == (0, 8)

    def test_closure_one_unsat(self, closure1_unsat):
        """Test E0 = 2 with M * 2^(N - r) = 32 ground states, constant-free -(M - 2)."""
        ground = brute_force_classical(closure1_unsat)
        assert (ground.energy, ground.degeneracy) == (2, 32)
        assert ground.constant_free_energy == -(closure1_unsat.n_edges - 2)

    def test_degeneracy_matches_kernel(self):
        """Test satisfiable random couplings keep 2^(N - r) ground states."""
        inst = generate_tree(3)
        inst = with_couplings(inst, make_couplings(inst, "random", seed=1))
        assert solve2(inst.incidence(), inst.rhs()).satisfiable
        ground = brute_force_classical(inst)
        assert ground.energy == 0
        assert ground.degeneracy == 2 ** (inst.n_spins - rank2(inst.incidence()))

    def test_too_large(self, tree2):
        """Test the enumeration bound."""
        with pytest.raises(TooLargeError):
            brute_force_classical(tree2, max_spins=8)

    def test_energy_of_assignment(self, closure1):
        """Test the energy of all-up and of one flipped spin."""
        assert classical_energy(closure1, [1] * 6) == 0
        assert classical_energy(closure1, [-1, 1, 1, 1, 1, 1]) == 4


class TestRelabel:
    """Tests for relabel."""

    def test_reverse(self, closure1):
        """Test reversing the labels keeps edge order and couplings."""
        other = relabel(closure1, [6, 5, 4, 3, 2, 1])
        assert other.edges == ((4, 5, 6), (1, 3, 6), (2, 3, 5), (1, 2, 4))
        assert other.couplings == closure1.couplings

    def test_not_a_permutation(self, closure1):
        """Test a repeated label."""
        with pytest.raises(ConfigError):
            relabel(closure1, [1, 1, 2, 3, 4, 5])


class TestInstanceFiles:
    """Tests for the text and JSON instance formats."""

    def test_text_format(self, closure1_unsat):
        """Test the header, comment and edge lines."""
        lines = format_instance(closure1_unsat).splitlines()
        assert lines[0] == "c closure(g=1) N=6 M=4"
        assert lines[1] == "p xor3 6 4"
        assert lines[-1] == "e 3 5 6 -1"

    def test_json_detected(self, closure1):
        """Test JSON is recognized by its leading brace."""
        parsed = parse_instance(format_instance(closure1, "json"))
        assert parsed.edges == closure1.edges

    def test_file_round(self, tmp_path, closure1_unsat):
        """Test writing and reading a text file."""
        path = tmp_path / "closure.xor"
        write_instance(closure1_unsat, path)
        inst = read_instance(path)
        assert inst.couplings == closure1_unsat.couplings

    def test_edge_count_mismatch(self):
        """Test a header announcing more edges than present."""
        with pytest.raises(InstanceFormatError):
            parse_instance("p xor3 3 2\ne 1 2 3 +1\n")

    def test_bad_line_number(self):
        """Test the line number of a malformed edge."""
        with pytest.raises(InstanceFormatError) as exc_info:
            parse_instance("c comment\np xor3 3 1\ne 1 2 x +1\n")
        assert exc_info.value.line == 3

    def test_invalid_json(self):
        """Test malformed JSON."""
        with pytest.raises(InstanceFormatError):
            parse_instance('{"n_spins": 3}')
