// Command-line front end: every experiment the library supports, emitted as
// JSON (or CSV for histograms) with explicit seeds so runs can be replayed.

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quidsim/quidsim.hpp"

namespace {

using nlohmann::json;
using quidsim::Complex;

double parse_double_strict(const std::string& text) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number '" + text + "'");
    }
    if (pos != text.size() || !std::isfinite(value))
        throw std::invalid_argument("malformed number '" + text + "'");
    return value;
}

/// Accepts sign-explicit literals like "-0.57659+0.24170i", "1", "0.5i",
/// "-i", "1e-3-2.5e-4i". At most one real and one imaginary term.
Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2)
        throw std::invalid_argument("malformed complex literal '" + raw + "'");

    double re = 0.0, im = 0.0;
    bool re_seen = false, im_seen = false;
    for (std::string term : terms) {
        const bool imaginary = term.back() == 'i' || term.back() == 'I';
        if (imaginary) {
            term.pop_back();
            if (term.empty() || term == "+" || term == "-") term += "1";
        }
        double value = 0.0;
        try {
            value = parse_double_strict(term);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed complex literal '" + raw + "'");
        }
        bool& seen = imaginary ? im_seen : re_seen;
        if (seen)
            throw std::invalid_argument("malformed complex literal '" + raw + "'");
        seen = true;
        (imaginary ? im : re) = value;
    }
    return {re, im};
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json statevector_to_json(const quidsim::StateVector& sv) {
    json arr = json::array();
    for (std::size_t i = 0; i < sv.size(); ++i) arr.push_back(complex_to_json(sv[i]));
    return arr;
}

json counts_to_json(const quidsim::Counts& counts) {
    json obj = json::object();
    for (const auto& [key, n] : counts.table()) obj[key] = n;
    return obj;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, bool& generated) {
    if (flag) {
        generated = false;
        return *flag;
    }
    generated = true;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void print_json(const json& out) { std::cout << out.dump(2) << "\n"; }

struct TeleportStatevectorOpts {
    std::string alpha;
    std::string beta;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> branch;
};

void run_teleport_statevector_cmd(const TeleportStatevectorOpts& opt) {
    quidsim::QuID psi(parse_complex(opt.alpha), parse_complex(opt.beta));
    json out;
    quidsim::TeleportResult result = [&] {
        if (opt.branch) {
            const std::string& b = *opt.branch;
            if (b.size() != 2 || (b[0] != '0' && b[0] != '1') || (b[1] != '0' && b[1] != '1'))
                throw std::invalid_argument("--branch must be two bits, e.g. \"10\" for "
                                            "m_psi=1, m_a=0");
            return quidsim::run_teleport_forced(psi, b[0] - '0', b[1] - '0');
        }
        bool generated = false;
        const std::uint64_t seed = resolve_seed(opt.seed, generated);
        out["seed"] = seed;
        quidsim::RandomSource rng(seed);
        return quidsim::run_teleport_statevector(psi, rng);
    }();
    out["prepared"] = json::array({complex_to_json(psi.alpha()), complex_to_json(psi.beta())});
    out["branch"] = json::array({result.m_psi, result.m_a});
    out["corrections"] = result.corrections;
    out["statevector"] = statevector_to_json(result.state);
    out["bob"] = json::array(
        {complex_to_json(result.receiver.first), complex_to_json(result.receiver.second)});
    print_json(out);
}

struct TeleportCountsOpts {
    int prep_bit = 0;
    std::uint64_t shots = 1024;
    std::optional<std::uint64_t> seed;
    double readout_flip_p = 0.0;
    double depolarizing_p = 0.0;
    std::string format = "json";
};

void run_teleport_counts_cmd(const TeleportCountsOpts& opt) {
    quidsim::NoiseConfig noise{opt.readout_flip_p, opt.depolarizing_p,
                               opt.readout_flip_p > 0.0 || opt.depolarizing_p > 0.0};
    bool generated = false;
    const std::uint64_t seed = resolve_seed(opt.seed, generated);
    quidsim::RandomSource rng(seed);
    quidsim::ExperimentResult result =
        quidsim::run_teleport_experiment(opt.prep_bit, opt.shots, rng, noise);
    if (opt.format == "csv") {
        if (generated) std::cerr << "seed " << seed << "\n";
        std::cout << "bitstring,count\n";
        for (const auto& [key, n] : result.counts.table()) std::cout << key << "," << n << "\n";
        return;
    }
    json out;
    out["counts"] = counts_to_json(result.counts);
    out["shots"] = opt.shots;
    out["bob_error_rate"] = result.receiver_error_rate;
    out["seed"] = seed;
    print_json(out);
}

struct PairOpts {
    std::string alpha;
    std::string beta;
};

void run_bloch_cmd(const PairOpts& opt) {
    quidsim::BlochVector v =
        quidsim::bloch_coords(parse_complex(opt.alpha), parse_complex(opt.beta));
    json out;
    out["x"] = v.x;
    out["y"] = v.y;
    out["z"] = v.z;
    print_json(out);
}

struct BellOpts {
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
};

void run_bell_cmd(const BellOpts& opt) {
    quidsim::CircuitProgram prog;
    prog.num_qubits = 2;
    prog.gate(quidsim::Gate::H, 0);
    prog.controlled(quidsim::Gate::X, 0, 1);
    quidsim::RandomSource no_draws(0);
    quidsim::ShotResult pair = quidsim::execute(prog, no_draws);
    json out;
    out["statevector"] = statevector_to_json(pair.state);
    if (opt.shots) {
        quidsim::CircuitProgram sampled = prog;
        sampled.num_clbits = 2;
        sampled.measure_into(0, 0);
        sampled.measure_into(1, 1);
        bool generated = false;
        const std::uint64_t seed = resolve_seed(opt.seed, generated);
        quidsim::RandomSource rng(seed);
        out["counts"] = counts_to_json(quidsim::sample_counts(sampled, *opt.shots, rng));
        out["shots"] = *opt.shots;
        out["seed"] = seed;
    }
    print_json(out);
}

struct RemoteEntangleOpts {
    std::string alpha_a = "1";
    std::string beta_a = "0";
    std::string alpha_b = "0";
    std::string beta_b = "1";
    double resolution = 0.0;
    double tol = 1e-6;
    bool decoy = false;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
};

void run_remote_entangle_cmd(const RemoteEntangleOpts& opt) {
    quidsim::QuID local_id(parse_complex(opt.alpha_a), parse_complex(opt.beta_a));
    quidsim::QuID peer_id(parse_complex(opt.alpha_b), parse_complex(opt.beta_b));
    quidsim::QuidRegistry registry;
    const quidsim::QubitHandle local{1}, peer{2}, decoy_handle{3};
    registry.register_qubit(local, local_id);
    registry.register_qubit(peer, peer_id);
    if (opt.decoy) registry.register_qubit(decoy_handle, peer_id);

    quidsim::QuID observed = registry.tomography(peer, opt.resolution);
    quidsim::StateVector state = registry.remote_entangle(local, observed, opt.tol);

    json out;
    out["local_quid"] =
        json::array({complex_to_json(local_id.alpha()), complex_to_json(local_id.beta())});
    out["peer_quid_observed"] =
        json::array({complex_to_json(observed.alpha()), complex_to_json(observed.beta())});
    out["statevector"] = statevector_to_json(state);
    if (opt.shots) {
        bool generated = false;
        const std::uint64_t seed = resolve_seed(opt.seed, generated);
        quidsim::RandomSource rng(seed);
        quidsim::Counts counts(2);
        for (std::uint64_t s = 0; s < *opt.shots; ++s) {
            quidsim::StateVector copy = state;
            quidsim::RandomSource shot_rng = rng.substream(s);
            const int m0 = quidsim::measure(copy, 0, shot_rng).outcome;
            const int m1 = quidsim::measure(copy, 1, shot_rng).outcome;
            counts.add(quidsim::bits_to_key({m0, m1}));
        }
        out["counts"] = counts_to_json(counts);
        out["shots"] = *opt.shots;
        out["seed"] = seed;
    }
    print_json(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statevector simulator for identity-addressed qubits: teleportation, "
                 "Bell pairs, and sampled experiments with reproducible seeds"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI-style file (flags win)");

    TeleportStatevectorOpts tsv;
    auto* sv_cmd = app.add_subcommand(
        "teleport-statevector", "Teleport one qubit state and print the final 3-qubit state");
    sv_cmd->add_option("--alpha", tsv.alpha, "Message amplitude for |0>, e.g. \"-0.57659+0.24170i\"")
        ->required();
    sv_cmd->add_option("--beta", tsv.beta, "Message amplitude for |1>")->required();
    sv_cmd->add_option("--seed", tsv.seed, "Seed for the sampled measurements")
        ->envname("QUIDSIM_SEED");
    sv_cmd->add_option("--branch", tsv.branch,
                       "Replay a fixed branch \"<m_psi><m_a>\" instead of sampling");
    sv_cmd->callback([&tsv] { run_teleport_statevector_cmd(tsv); });

    TeleportCountsOpts tc;
    auto* tc_cmd = app.add_subcommand(
        "teleport-counts", "Sample the end-to-end teleport check circuit into a histogram");
    tc_cmd->add_option("--prep-bit", tc.prep_bit, "Classical bit to send (0 or 1)")
        ->required()
        ->check(CLI::Range(0, 1));
    tc_cmd->add_option("--shots", tc.shots, "Number of shots")
        ->default_val(std::uint64_t{1024})
        ->check(CLI::PositiveNumber);
    tc_cmd->add_option("--seed", tc.seed, "Seed for the sampler")->envname("QUIDSIM_SEED");
    tc_cmd->add_option("--readout-flip-p", tc.readout_flip_p,
                       "Probability a recorded bit is flipped")
        ->check(CLI::Range(0.0, 1.0));
    tc_cmd->add_option("--depolarizing-p", tc.depolarizing_p,
                       "Per-gate probability of a uniform X/Y/Z error")
        ->check(CLI::Range(0.0, 1.0));
    tc_cmd->add_option("--format", tc.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    tc_cmd->callback([&tc] { run_teleport_counts_cmd(tc); });

    PairOpts bloch;
    auto* bloch_cmd =
        app.add_subcommand("bloch", "Bloch-sphere coordinates of alpha|0> + beta|1>");
    bloch_cmd->add_option("--alpha", bloch.alpha, "Amplitude for |0>")->required();
    bloch_cmd->add_option("--beta", bloch.beta, "Amplitude for |1>")->required();
    bloch_cmd->callback([&bloch] { run_bloch_cmd(bloch); });

    BellOpts bell;
    auto* bell_cmd =
        app.add_subcommand("bell", "Prepare the Bell pair (|00>+|11>)/sqrt(2), optionally sample it");
    bell_cmd->add_option("--shots", bell.shots, "Also measure both qubits this many times")
        ->check(CLI::PositiveNumber);
    bell_cmd->add_option("--seed", bell.seed, "Seed for the sampler")->envname("QUIDSIM_SEED");
    bell_cmd->callback([&bell] { run_bell_cmd(bell); });

    RemoteEntangleOpts re;
    auto* re_cmd = app.add_subcommand(
        "remote-entangle-demo",
        "Register two identity-tagged qubits, match the peer by identity, entangle them");
    re_cmd->add_option("--alpha-a", re.alpha_a, "Local qubit identity, |0> amplitude");
    re_cmd->add_option("--beta-a", re.beta_a, "Local qubit identity, |1> amplitude");
    re_cmd->add_option("--alpha-b", re.alpha_b, "Peer qubit identity, |0> amplitude");
    re_cmd->add_option("--beta-b", re.beta_b, "Peer qubit identity, |1> amplitude");
    re_cmd->add_option("--resolution", re.resolution,
                       "Identity readout resolution (components rounded to this step)")
        ->check(CLI::NonNegativeNumber);
    re_cmd->add_option("--tol", re.tol, "Component-wise matching tolerance")
        ->check(CLI::NonNegativeNumber);
    re_cmd->add_flag("--decoy", re.decoy,
                     "Register a third qubit with the peer's identity to force ambiguity");
    re_cmd->add_option("--shots", re.shots, "Measure the entangled pair this many times")
        ->check(CLI::PositiveNumber);
    re_cmd->add_option("--seed", re.seed, "Seed for the sampler")->envname("QUIDSIM_SEED");
    re_cmd->callback([&re] { run_remote_entangle_cmd(re); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const quidsim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
