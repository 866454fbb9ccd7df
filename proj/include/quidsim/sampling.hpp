#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "quidsim/circuit.hpp"

namespace quidsim {

/// Renders classical bits as a key string with the highest-index bit
/// leftmost, so clbit 0 is the rightmost character.
inline std::string bits_to_key(const std::vector<int>& bits) {
    std::string key(bits.size(), '0');
    for (std::size_t c = 0; c < bits.size(); ++c)
        key[bits.size() - 1 - c] = static_cast<char>('0' + (bits[c] & 1));
    return key;
}

/// Histogram of fixed-width outcome bitstrings, ordered lexicographically.
class Counts {
  public:
    explicit Counts(std::size_t width) : width_(width) {
        if (width == 0) throw std::invalid_argument("bitstring width must be positive");
    }

    void add(const std::string& bitstring, std::uint64_t n = 1) {
        if (bitstring.size() != width_)
            throw std::invalid_argument("bitstring '" + bitstring + "' does not have width " +
                                        std::to_string(width_));
        for (char ch : bitstring)
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("bitstring '" + bitstring + "' has non-binary digits");
        table_[bitstring] += n;
        total_ += n;
    }

    std::size_t width() const { return width_; }
    std::uint64_t total() const { return total_; }

    /// Count for one bitstring, zero when never seen.
    std::uint64_t at(const std::string& bitstring) const {
        auto it = table_.find(bitstring);
        return it == table_.end() ? 0 : it->second;
    }

    const std::map<std::string, std::uint64_t>& table() const { return table_; }

  private:
    std::size_t width_;
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t> table_;
};

/// Runs `shots` independent trajectories of `program` and tallies the
/// reported classical bits. Shot s uses rng.substream(s), so the histogram
/// depends only on (program, shots, seed, noise) and any prefix of the shots
/// can be reproduced in isolation.
inline Counts sample_counts(const CircuitProgram& program, std::uint64_t shots,
                            RandomSource& rng, const NoiseConfig& noise = NoiseConfig{}) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    program.validate();
    if (program.num_clbits == 0)
        throw std::invalid_argument("sampling requires at least one classical bit");
    Counts counts(program.num_clbits);
    for (std::uint64_t s = 0; s < shots; ++s) {
        RandomSource shot_rng = rng.substream(s);
        ShotResult shot = execute(program, shot_rng, noise);
        counts.add(bits_to_key(shot.classical));
    }
    return counts;
}

} // namespace quidsim
