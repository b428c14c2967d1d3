#include <doctest.h>

#include <stdexcept>

#include "revskip/gate.hpp"
#include "revskip/netlist.hpp"

using namespace revskip;

// Frozen truth tables, computed by hand from the gate equations before
// the implementation existed.  Word order: A1 is the MSB.
namespace {
const std::vector<std::uint32_t> kNotTable = {1, 0};
const std::vector<std::uint32_t> kFeynmanTable = {0, 1, 3, 2};
const std::vector<std::uint32_t> kToffoliTable = {0, 1, 2, 3, 4, 5, 7, 6};
const std::vector<std::uint32_t> kFredkinTable = {0, 1, 2, 3, 4, 6, 5, 7};
const std::vector<std::uint32_t> kPeresTable = {0, 1, 2, 3, 6, 7, 5, 4};
}  // namespace

TEST_CASE("builtin gate identities") {
    const Gate nt = make_named_gate("not");
    CHECK(nt.width() == 1);
    CHECK(nt.kind() == GateKind::Inverter);
    CHECK(gate_truth_table(nt).entries == kNotTable);

    const Gate feynman = make_named_gate("feynman");
    CHECK(feynman.width() == 2);
    CHECK(gate_truth_table(feynman).entries == kFeynmanTable);

    const Gate toffoli = make_named_gate("toffoli");
    CHECK(gate_truth_table(toffoli).entries == kToffoliTable);

    const Gate fredkin = make_named_gate("fredkin");
    CHECK(gate_truth_table(fredkin).entries == kFredkinTable);

    const Gate peres = make_named_gate("peres");
    CHECK(gate_truth_table(peres).entries == kPeresTable);
}

TEST_CASE("single evaluations") {
    const Gate peres = make_named_gate("peres");
    // (A,B,C) = (1,1,0) -> (P,Q,R) = (1,0,1)
    CHECK(peres.eval(0b110) == 0b101);
    const Gate fredkin = make_named_gate("fredkin");
    // (1,0,1): control set, so B and C swap -> (1,1,0)
    CHECK(fredkin.eval(0b101) == 0b110);
    const Gate toffoli = make_named_gate("toffoli");
    CHECK(toffoli.eval(0b110) == 0b111);
    CHECK_THROWS_AS(peres.eval(8), std::invalid_argument);
}

TEST_CASE("quantum and classical costs") {
    CHECK(make_named_gate("not").quantum_cost() == 0);
    CHECK(make_named_gate("feynman").quantum_cost() == 1);
    CHECK(make_named_gate("toffoli").quantum_cost() == 5);
    CHECK(make_named_gate("fredkin").quantum_cost() == 5);
    CHECK(make_named_gate("peres").quantum_cost() == 4);

    CHECK(make_named_gate("not").classical_cost() == ClassicalCost{0, 0, 1});
    CHECK(make_named_gate("feynman").classical_cost() == ClassicalCost{1, 0, 0});
    CHECK(make_named_gate("toffoli").classical_cost() == ClassicalCost{1, 1, 0});
    CHECK(make_named_gate("peres").classical_cost() == ClassicalCost{2, 1, 0});
    CHECK(make_named_gate("fredkin").classical_cost() == ClassicalCost{2, 4, 1});
}

TEST_CASE("output supports") {
    const Gate peres = make_named_gate("peres");
    CHECK(peres.support(0) == 0b001u);
    CHECK(peres.support(1) == 0b011u);
    CHECK(peres.support(2) == 0b111u);
    const Gate fredkin = make_named_gate("fredkin");
    CHECK(fredkin.support(0) == 0b001u);
    CHECK(fredkin.support(1) == 0b111u);
    CHECK(fredkin.support(2) == 0b111u);
    const Gate feynman = make_named_gate("feynman");
    CHECK(feynman.support(0) == 0b01u);
    CHECK(feynman.support(1) == 0b11u);
    CHECK_THROWS_AS(peres.support(3), std::invalid_argument);
}

TEST_CASE("unknown gate name") {
    CHECK_THROWS_WITH_AS(make_named_gate("xyz"), "unknown gate name 'xyz'",
                         std::invalid_argument);
}

TEST_CASE("generalized gate semantics") {
    // f_low = A1, f_high = A1 xor A2: P2 = A2^A1, P3 = A3^A1^A2.
    const Gate g = make_generalized_gate({3, "01", "0110"}, "mix");
    CHECK(g.width() == 3);
    CHECK(g.eval(0b110) == 0b100);
    CHECK(g.eval(0b000) == 0b000);
    CHECK(g.eval(0b100) == 0b111);
    CHECK(gate_truth_table(g).is_permutation());
    CHECK_FALSE(g.quantum_cost().has_value());
    CHECK_FALSE(g.classical_cost().has_value());
    // Support of P3 includes every input; support of P2 is {A1, A2}.
    CHECK(g.support(1) == 0b011u);
    CHECK(g.support(2) == 0b111u);
}

TEST_CASE("generalized gate matching a builtin adopts its costs") {
    // P2 = A2^A1, P3 = A3^(A1*A2): the peres table.
    const Gate as_peres = make_generalized_gate({3, "01", "0001"}, "p3");
    CHECK(gate_truth_table(as_peres).entries == kPeresTable);
    CHECK(as_peres.quantum_cost() == 4);
    CHECK(as_peres.classical_cost() == ClassicalCost{2, 1, 0});

    const Gate as_toffoli = make_generalized_gate({3, "00", "0001"}, "t3");
    CHECK(gate_truth_table(as_toffoli).entries == kToffoliTable);
    CHECK(as_toffoli.quantum_cost() == 5);

    const Gate as_feynman = make_generalized_gate({2, "0", "01"}, "f2");
    CHECK(gate_truth_table(as_feynman).entries == kFeynmanTable);
    CHECK(as_feynman.quantum_cost() == 1);
}

TEST_CASE("generalized spec validation") {
    CHECK_THROWS_AS(make_generalized_gate({1, "", ""}), std::invalid_argument);
    CHECK_THROWS_AS(make_generalized_gate({3, "0", "0000"}), std::invalid_argument);
    CHECK_THROWS_AS(make_generalized_gate({3, "00", "000"}), std::invalid_argument);
    CHECK_THROWS_AS(make_generalized_gate({3, "0x", "0000"}), std::invalid_argument);
    CHECK_THROWS_AS(make_generalized_gate({21, "", ""}), std::invalid_argument);
}

TEST_CASE("every generalized gate is a permutation") {
    // The two defining tables only ever XOR onto the low lines, so the
    // map must be bijective for any table contents.
    Lcg64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 2 + static_cast<int>(rng.next_word(2));  // 2..5
        GeneralizedSpec spec;
        spec.width = k;
        for (int i = 0; i < (1 << (k - 2)); ++i) {
            spec.f_low.push_back(rng.next_word(1) ? '1' : '0');
        }
        for (int i = 0; i < (1 << (k - 1)); ++i) {
            spec.f_high.push_back(rng.next_word(1) ? '1' : '0');
        }
        const Gate g = make_generalized_gate(spec);
        const TruthTable table = gate_truth_table(g);
        CHECK(table.is_permutation());

        // Pass-through lines never change; each output respects its support.
        for (std::uint32_t w = 0; w < table.entries.size(); ++w) {
            const std::uint32_t out = table.entries[w];
            for (int p = 0; p + 2 < k; ++p) {
                const std::uint32_t bit = 1u << (k - 1 - p);
                CHECK((w & bit) == (out & bit));
            }
        }
        for (int p = 0; p < k; ++p) {
            const std::uint32_t mask = g.support(p);
            for (int q = 0; q < k; ++q) {
                if ((mask >> q) & 1u) continue;
                const std::uint32_t flip = 1u << (k - 1 - q);
                const std::uint32_t out_bit = 1u << (k - 1 - p);
                for (std::uint32_t w = 0; w < table.entries.size(); ++w) {
                    CHECK((table.entries[w] & out_bit) ==
                          (table.entries[w ^ flip] & out_bit));
                }
            }
        }
    }
}

TEST_CASE("is_permutation rejects non-bijections") {
    TruthTable t;
    t.width = 1;
    t.entries = {0, 0};
    CHECK_FALSE(t.is_permutation());
    t.entries = {0, 2};
    CHECK_FALSE(t.is_permutation());
    t.entries = {1, 0};
    CHECK(t.is_permutation());
}
