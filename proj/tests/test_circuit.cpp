#include <cmath>
#include <cstdint>

#include <gtest/gtest.h>

#include "quidsim/circuit.hpp"
#include "quidsim/sampling.hpp"

using quidsim::CircuitProgram;
using quidsim::Gate;
using quidsim::NoiseConfig;
using quidsim::RandomSource;

TEST(CircuitProgram, ValidateCatchesStructuralErrors) {
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 1;

    CircuitProgram bad = prog;
    bad.gate(Gate::H, 2);
    EXPECT_THROW(bad.validate(), std::out_of_range);

    bad = prog;
    bad.controlled(Gate::X, 1, 1);
    EXPECT_THROW(bad.validate(), std::invalid_argument);

    bad = prog;
    bad.measure_into(0, 3);
    EXPECT_THROW(bad.validate(), std::out_of_range);

    bad = prog;
    bad.conditional(Gate::Z, 0, 5);
    EXPECT_THROW(bad.validate(), std::out_of_range);

    bad = prog;
    bad.prepare(0, {0.2, 0.0}, {0.2, 0.0});
    EXPECT_THROW(bad.validate(), quidsim::NotNormalized);

    bad = prog;
    bad.clbit_names = {"a", "b"};
    EXPECT_THROW(bad.validate(), std::invalid_argument);

    CircuitProgram empty;
    EXPECT_THROW(empty.validate(), std::invalid_argument);
}

TEST(Execute, BellPairOutcomesAlwaysAgree) {
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 2;
    prog.gate(Gate::H, 0);
    prog.controlled(Gate::X, 0, 1);
    prog.measure_into(0, 0);
    prog.measure_into(1, 1);

    RandomSource parent(77);
    int ones = 0;
    for (int s = 0; s < 400; ++s) {
        RandomSource rng = parent.substream(static_cast<std::uint64_t>(s));
        quidsim::ShotResult shot = quidsim::execute(prog, rng);
        ASSERT_EQ(shot.classical.size(), 2u);
        EXPECT_EQ(shot.classical[0], shot.classical[1]);
        ones += shot.classical[0];
    }
    EXPECT_GT(ones, 100);
    EXPECT_LT(ones, 300);
}

TEST(Execute, PrepareActsAsDocumentedUnitary) {
    // On a target already in |1> the preparation applies its second column.
    CircuitProgram prog;
    prog.num_qubits = 1;
    prog.gate(Gate::X, 0);
    prog.prepare(0, {0.6, 0.0}, {0.0, 0.8});
    RandomSource rng(1);
    quidsim::ShotResult shot = quidsim::execute(prog, rng);
    EXPECT_NEAR(shot.state[0].real(), 0.0, 1e-12);
    EXPECT_NEAR(shot.state[0].imag(), 0.8, 1e-12);
    EXPECT_NEAR(shot.state[1].real(), 0.6, 1e-12);
    EXPECT_NEAR(shot.state[1].imag(), 0.0, 1e-12);
}

TEST(Execute, ConditionalGateFiresOnlyOnSetBit) {
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 2;
    prog.prepare(0, {0.0, 0.0}, {1.0, 0.0});
    prog.measure_into(0, 0);
    prog.conditional(Gate::X, 1, 0);
    prog.measure_into(1, 1);

    RandomSource rng(3);
    quidsim::ShotResult shot = quidsim::execute(prog, rng);
    EXPECT_EQ(shot.classical[0], 1);
    EXPECT_EQ(shot.classical[1], 1);

    CircuitProgram off = prog;
    off.instructions[0] = quidsim::PrepareOp{0, {1.0, 0.0}, {0.0, 0.0}};
    RandomSource rng2(3);
    shot = quidsim::execute(off, rng2);
    EXPECT_EQ(shot.classical[0], 0);
    EXPECT_EQ(shot.classical[1], 0);
}

TEST(Execute, FeedForwardReadsTrueOutcomesNotReportedOnes) {
    // With readout_flip_p = 1 every reported bit is inverted, but the
    // conditional correction must still see the true outcome: the X fires,
    // both true bits are 1, and the report shows both flipped to 0.
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 2;
    prog.prepare(0, {0.0, 0.0}, {1.0, 0.0});
    prog.measure_into(0, 0);
    prog.conditional(Gate::X, 1, 0);
    prog.measure_into(1, 1);

    NoiseConfig noise{1.0, 0.0, true};
    RandomSource rng(9);
    quidsim::ShotResult shot = quidsim::execute(prog, rng, noise);
    EXPECT_EQ(shot.records[0].outcome, 1);
    EXPECT_EQ(shot.records[1].outcome, 1);
    EXPECT_EQ(shot.classical[0], 0);
    EXPECT_EQ(shot.classical[1], 0);
}

TEST(Execute, ReadoutNoiseOnlyTouchesMeasuredBits) {
    CircuitProgram prog;
    prog.num_qubits = 1;
    prog.num_clbits = 3;
    prog.prepare(0, {0.0, 0.0}, {1.0, 0.0});
    prog.measure_into(0, 1);

    NoiseConfig noise{1.0, 0.0, true};
    RandomSource rng(10);
    quidsim::ShotResult shot = quidsim::execute(prog, rng, noise);
    EXPECT_EQ(shot.classical[0], 0);
    EXPECT_EQ(shot.classical[1], 0); // measured 1, then flipped
    EXPECT_EQ(shot.classical[2], 0);
    EXPECT_EQ(shot.records[0].outcome, 1);
}

TEST(Execute, ForcedOutcomesReplayABranch) {
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 2;
    prog.gate(Gate::H, 0);
    prog.controlled(Gate::X, 0, 1);
    prog.measure_into(0, 0);
    prog.measure_into(1, 1);

    RandomSource rng(0);
    quidsim::ShotResult shot = quidsim::execute(prog, rng, NoiseConfig{}, {{0, 1}});
    EXPECT_EQ(shot.classical[0], 1);
    EXPECT_EQ(shot.classical[1], 1);
    EXPECT_NEAR(shot.records[0].probability, 0.5, 1e-12);
    EXPECT_NEAR(shot.records[1].probability, 1.0, 1e-12);

    // Forcing an impossible branch is an error.
    CircuitProgram fixed;
    fixed.num_qubits = 1;
    fixed.num_clbits = 1;
    fixed.measure_into(0, 0);
    RandomSource rng2(0);
    EXPECT_THROW(quidsim::execute(fixed, rng2, NoiseConfig{}, {{0, 1}}),
                 quidsim::ImpossibleOutcome);
}

TEST(Execute, SkippedConditionalConsumesNoRandomness) {
    // Identical seeds; one program carries a conditional gate that never
    // fires. With gate noise on, final states must still match exactly.
    CircuitProgram with_skipped;
    with_skipped.num_qubits = 2;
    with_skipped.num_clbits = 1;
    with_skipped.conditional(Gate::X, 1, 0);
    with_skipped.gate(Gate::H, 0);

    CircuitProgram plain;
    plain.num_qubits = 2;
    plain.num_clbits = 1;
    plain.gate(Gate::H, 0);

    NoiseConfig noise{0.0, 0.4, true};
    RandomSource rng_a(21);
    RandomSource rng_b(21);
    quidsim::ShotResult a = quidsim::execute(with_skipped, rng_a, noise);
    quidsim::ShotResult b = quidsim::execute(plain, rng_b, noise);
    for (std::size_t i = 0; i < a.state.size(); ++i) EXPECT_EQ(a.state[i], b.state[i]);
    EXPECT_EQ(rng_a.next_u64(), rng_b.next_u64());
}

TEST(Execute, DisabledNoiseIsBitIdenticalToZeroProbabilities) {
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 2;
    prog.gate(Gate::H, 0);
    prog.controlled(Gate::X, 0, 1);
    prog.measure_into(0, 0);
    prog.measure_into(1, 1);

    RandomSource rng_a(31);
    RandomSource rng_b(31);
    quidsim::Counts disabled = quidsim::sample_counts(prog, 500, rng_a, NoiseConfig{});
    quidsim::Counts zeroed = quidsim::sample_counts(prog, 500, rng_b, NoiseConfig{0.0, 0.0, true});
    EXPECT_EQ(disabled.table(), zeroed.table());
}

TEST(Counts, ValidatesAndAccumulates) {
    quidsim::Counts counts(3);
    counts.add("010");
    counts.add("010");
    counts.add("111", 3);
    EXPECT_EQ(counts.total(), 5u);
    EXPECT_EQ(counts.at("010"), 2u);
    EXPECT_EQ(counts.at("111"), 3u);
    EXPECT_EQ(counts.at("000"), 0u);
    EXPECT_EQ(counts.width(), 3u);
    EXPECT_THROW(counts.add("01"), std::invalid_argument);
    EXPECT_THROW(counts.add("01x"), std::invalid_argument);
    EXPECT_THROW(quidsim::Counts(0), std::invalid_argument);
}

TEST(Counts, KeyRendersHighClbitLeftmost) {
    EXPECT_EQ(quidsim::bits_to_key({1, 0, 0}), "001");
    EXPECT_EQ(quidsim::bits_to_key({0, 1, 1}), "110");
    EXPECT_EQ(quidsim::bits_to_key({1, 1, 0}), "011");
}

TEST(SampleCounts, DeterministicGivenSeedAndBalanced) {
    CircuitProgram prog;
    prog.num_qubits = 2;
    prog.num_clbits = 2;
    prog.gate(Gate::H, 0);
    prog.controlled(Gate::X, 0, 1);
    prog.measure_into(0, 0);
    prog.measure_into(1, 1);

    RandomSource rng_a(55);
    RandomSource rng_b(55);
    quidsim::Counts a = quidsim::sample_counts(prog, 2000, rng_a);
    quidsim::Counts b = quidsim::sample_counts(prog, 2000, rng_b);
    EXPECT_EQ(a.table(), b.table());
    EXPECT_EQ(a.total(), 2000u);
    EXPECT_EQ(a.at("00") + a.at("11"), 2000u);
    const double sigma = std::sqrt(0.5 * 0.5 / 2000.0);
    EXPECT_NEAR(a.at("00") / 2000.0, 0.5, 4.0 * sigma);
}

TEST(SampleCounts, RejectsZeroShotsAndNoClbits) {
    CircuitProgram prog;
    prog.num_qubits = 1;
    prog.num_clbits = 1;
    prog.measure_into(0, 0);
    RandomSource rng(1);
    EXPECT_THROW(quidsim::sample_counts(prog, 0, rng), std::invalid_argument);

    CircuitProgram no_clbits;
    no_clbits.num_qubits = 1;
    no_clbits.gate(Gate::H, 0);
    EXPECT_THROW(quidsim::sample_counts(no_clbits, 10, rng), std::invalid_argument);
}
