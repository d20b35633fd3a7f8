#include "hc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hc/compress.hpp"
#include "hc/lazy.hpp"
#include "hc/polyhedral.hpp"

namespace hc::cli {

namespace {

std::string fmt_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string vector_json(const CVec& z) {
    std::ostringstream os;
    os << "\"re\": [";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) os << ", ";
        os << fmt_double(z[i].real());
    }
    os << "], \"im\": [";
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) os << ", ";
        os << fmt_double(z[i].imag());
    }
    os << "]";
    return os.str();
}

std::string result_json(const PathResult& r) {
    std::ostringstream os;
    os << "{" << vector_json(r.solution) << ", \"status\": \"" << to_string(r.status)
       << "\", \"residual\": " << fmt_double(r.residual) << "}";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PolySystem load_system(const std::string& path) { return parse_system(read_file(path)); }

// JSON-lines solutions, lazily; lines whose status is present and not
// "success" are skipped so solver output can be piped straight in.
Seq<CVec> solutions_from_jsonl(const std::string& path) {
    return Seq<CVec>([path] {
        auto in = std::make_shared<std::ifstream>(path);
        if (!*in) throw std::runtime_error("cannot open file: " + path);
        return [in]() mutable -> std::optional<CVec> {
            std::string line;
            while (std::getline(*in, line)) {
                if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
                nlohmann::json j = nlohmann::json::parse(line);
                if (j.contains("status") && j["status"].get<std::string>() != "success") continue;
                const auto& re = j.at("re");
                const auto& im = j.at("im");
                if (re.size() != im.size())
                    throw std::runtime_error("solution line: re/im length mismatch");
                CVec z(re.size());
                for (std::size_t i = 0; i < z.size(); ++i)
                    z[i] = Complex(re[i].get<double>(), im[i].get<double>());
                return z;
            }
            return std::nullopt;
        };
    });
}

struct Session {
    std::uint64_t seed = 0;
    std::string gamma_text;
    double newton_tol = 1e-10;
    unsigned max_steps = 10000;
    std::string start_system = "total_degree";
    bool stats = false;

    Complex gamma() const {
        if (gamma_text.empty()) return random_unit_gamma(seed);
        const auto comma = gamma_text.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--gamma", "expected re,im");
        try {
            const double re = std::stod(gamma_text.substr(0, comma));
            const double im = std::stod(gamma_text.substr(comma + 1));
            if (re == 0.0 && im == 0.0)
                throw CLI::ValidationError("--gamma", "gamma must be nonzero");
            return Complex(re, im);
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--gamma", "expected re,im");
        }
    }

    TrackOptions track_options() const {
        TrackOptions t;
        t.newton_tol = newton_tol;
        t.max_steps = max_steps;
        return t;
    }

    ResultIterator solve_iter(const PolySystem& F) const {
        if (start_system != "total_degree")
            throw CLI::ValidationError("--start-system", "only total_degree is supported");
        return solve_total_degree(F, gamma(), track_options());
    }

    void print_stats(std::ostream& err, const Instrumentation& ins) const {
        if (stats)
            err << "stats: paths_tracked=" << ins.paths_tracked()
                << " peak_live_results=" << ins.peak_live_results() << "\n";
    }
};

int cmd_solve(const Session& s, const std::string& path, std::ostream& out, std::ostream& err) {
    const PolySystem F = load_system(path);
    ResultIterator it = s.solve_iter(F);
    it.stats()->reset();
    for (auto cur = it.results().cursor();;) {
        auto r = cur();
        if (!r) break;
        out << result_json(*r) << "\n";
    }
    s.print_stats(err, *it.stats());
    return 0;
}

int cmd_count(const Session& s, const std::string& path, std::ostream& out, std::ostream& err) {
    const PolySystem F = load_system(path);
    ResultIterator it = s.solve_iter(F);
    it.stats()->reset();
    const double real_tol = s.track_options().real_tol;
    const double singular_cond = s.track_options().singular_cond;
    struct Counts {
        std::size_t total = 0, success = 0, real = 0, nonsingular = 0;
    };
    const Counts c = accumulate(
        [&](Counts acc, const PathResult& r) {
            ++acc.total;
            if (is_success(r)) ++acc.success;
            if (is_success(r) && is_real(r, real_tol)) ++acc.real;
            if (is_nonsingular(r, singular_cond)) ++acc.nonsingular;
            return acc;
        },
        it.results(), Counts{});
    out << "total " << c.total << ", success " << c.success << ", real " << c.real
        << ", nonsingular " << c.nonsingular << "\n";
    s.print_stats(err, *it.stats());
    return 0;
}

int cmd_first_real(const Session& s, const std::string& path, std::ostream& out,
                   std::ostream& err) {
    const PolySystem F = load_system(path);
    ResultIterator it = s.solve_iter(F);
    it.stats()->reset();
    const double real_tol = s.track_options().real_tol;
    const auto hit = first_where(
        [&](const PathResult& r) { return is_success(r) && is_real(r, real_tol); }, it.results());
    if (hit) {
        out << result_json(*hit) << "\n";
    } else {
        out << "no real solution found\n";
    }
    s.print_stats(err, *it.stats());
    return 0;
}

int cmd_any_nonreal(const Session& s, const std::string& path, std::ostream& out,
                    std::ostream& err) {
    const PolySystem F = load_system(path);
    ResultIterator it = s.solve_iter(F);
    it.stats()->reset();
    const double real_tol = s.track_options().real_tol;
    const bool found = any_lazy(
        [&](const PathResult& r) { return is_success(r) && !is_real(r, real_tol); }, it.results());
    out << (found ? "found a non-real solution\n" : "all successful solutions are real\n");
    s.print_stats(err, *it.stats());
    return found ? 0 : 1;
}

int cmd_trace(const Session& s, const std::string& path, std::ostream& out, std::ostream& err) {
    const PolySystem F = load_system(path);
    ResultIterator it = s.solve_iter(F);
    it.stats()->reset();
    const CVec trace = sum_vectors(map_lazy([](const PathResult& r) { return r.solution; },
                                            filter_lazy([](const PathResult& r) { return is_success(r); },
                                                        it.results())));
    out << "{" << vector_json(trace.empty() ? CVec(F.variable_count(), Complex(0.0)) : trace)
        << "}\n";
    s.print_stats(err, *it.stats());
    return 0;
}

int cmd_compress(const Session& s, const std::string& sys_path, const std::string& sols_path,
                 const std::string& out_path, std::ostream& out, std::ostream&) {
    const PolySystem F = load_system(sys_path);
    const CompressedSolutions C =
        compress(F, solutions_from_jsonl(sols_path), s.gamma(), s.track_options());
    write_compressed_file(C, out_path);
    out << "compressed " << C.bitmask.popcount() << " solutions to " << out_path << " ("
        << C.bitmask.size() << " mask bits)\n";
    return 0;
}

int cmd_decompress(const Session& s, const std::string& in_path, std::ostream& out,
                   std::ostream& err) {
    const CompressedSolutions C = read_compressed_file(in_path);
    ResultIterator it = decompress(C, s.track_options());
    it.stats()->reset();
    for (auto cur = it.results().cursor();;) {
        auto r = cur();
        if (!r) break;
        out << result_json(*r) << "\n";
    }
    s.print_stats(err, *it.stats());
    return 0;
}

int cmd_bkk(unsigned n, std::ostream& out) {
    out << "bkk_stretched(" << n << ") = " << bkk_stretched(n) << "\n";
    std::map<std::uint64_t, std::size_t> volumes;
    std::size_t cells = 0;
    for (auto cur = mixed_cell_iter(n).cursor();;) {
        auto c = cur();
        if (!c) break;
        ++cells;
        ++volumes[c->volume];
    }
    out << "cells: " << cells << "\n";
    out << "volumes:";
    for (const auto& [vol, cnt] : volumes) out << " " << vol << " x" << cnt;
    out << "\n";
    return 0;
}

int cmd_necklace_demo(const Session& s, unsigned d1, unsigned d2, const std::string& target,
                      std::ostream& out, std::ostream& err) {
    const unsigned d = d1 + d2;
    const PolySystem F = polynomial_interpolants(d1, d2);
    out << "necklace_count(" << d1 << ", " << d2 << ") = " << necklace_count(d1, d2) << "\n";

    CVec germ(d);
    for (unsigned i = 1; i <= d; ++i) germ[i - 1] = (i % 2 == 0) ? 1.0 : -1.0;

    std::mt19937_64 rng(s.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVec generic(d);
    for (Complex& z : generic) z = Complex(gauss(rng), gauss(rng));

    CVec final_params(d);
    if (target == "random") {
        for (Complex& z : final_params) z = Complex(gauss(rng), 0.0);
    } else {
        nlohmann::json j = nlohmann::json::parse(read_file(target));
        if (!j.is_array() || j.size() != d)
            throw std::runtime_error("target parameters: expected an array of " +
                                     std::to_string(d) + " numbers");
        for (unsigned i = 0; i < d; ++i) final_params[i] = j[i].get<double>();
    }

    Seq<CVec> starts = map_lazy([](const Necklace& N) { return solution_from_necklace(N); },
                                necklaces_iter(d1, d2));

    const TrackOptions topts = s.track_options();
    ResultIterator stage1 = solve_parameter(F, germ, generic, starts, topts);
    ResultIterator stage2 = compose_parameter(F, stage1, generic, final_params, topts);
    stage2.stats()->reset();

    std::size_t total = 0;
    std::size_t successes = 0;
    for (auto cur = stage2.results().cursor();;) {
        auto r = cur();
        if (!r) break;
        ++total;
        if (is_success(*r)) ++successes;
        out << result_json(*r) << "\n";
    }
    out << "successes: " << successes << " of " << total << "\n";
    s.print_stats(err, *stage2.stats());
    return successes == total ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hciter: stream solutions of polynomial systems through homotopy iterators"};
    app.require_subcommand(1);

    Session s;
    app.add_option("--seed", s.seed, "seed for gamma and all randomness");
    app.add_option("--gamma", s.gamma_text, "gamma as re,im (default: random on the unit circle)");
    app.add_option("--newton-tol", s.newton_tol, "Newton corrector tolerance");
    app.add_option("--max-steps", s.max_steps, "maximum tracker steps per path");
    app.add_option("--start-system", s.start_system, "start system kind (total_degree)");
    app.add_flag("--stats", s.stats, "print instrumentation counters to stderr");

    std::string sys_path, sols_path, out_path, in_path, target = "random";
    unsigned bkk_n = 0, d1 = 0, d2 = 0;

    auto* solve_cmd = app.add_subcommand("solve", "track all paths, print solutions as JSON lines");
    solve_cmd->add_option("system", sys_path, "system JSON file")->required();

    auto* count_cmd = app.add_subcommand("count", "streaming solution counts");
    count_cmd->add_option("system", sys_path, "system JSON file")->required();

    auto* first_real_cmd = app.add_subcommand("first-real", "short-circuit search for a real solution");
    first_real_cmd->add_option("system", sys_path, "system JSON file")->required();

    auto* any_nonreal_cmd =
        app.add_subcommand("any-nonreal", "exit 0 iff a non-real solution exists");
    any_nonreal_cmd->add_option("system", sys_path, "system JSON file")->required();

    auto* trace_cmd = app.add_subcommand("trace", "coordinate-wise sum of the solutions");
    trace_cmd->add_option("system", sys_path, "system JSON file")->required();

    auto* compress_cmd = app.add_subcommand("compress", "compress solutions to an HCIT archive");
    compress_cmd->add_option("system", sys_path, "system JSON file")->required();
    compress_cmd->add_option("solutions", sols_path, "solutions JSON-lines file")->required();
    compress_cmd->add_option("-o,--output", out_path, "output archive path")->required();

    auto* decompress_cmd = app.add_subcommand("decompress", "unpack an HCIT archive");
    decompress_cmd->add_option("archive", in_path, "HCIT archive path")->required();

    auto* bkk_cmd = app.add_subcommand("bkk", "BKK bound of the stretched-cube family");
    bkk_cmd->add_option("--stretched", bkk_n, "dimension n")->required();

    auto* necklace_cmd = app.add_subcommand("necklace-demo", "necklace start solutions end to end");
    necklace_cmd->add_option("d1", d1, "white bead count")->required();
    necklace_cmd->add_option("d2", d2, "black bead count")->required();
    necklace_cmd->add_option("--target", target, "random or a parameters JSON file");

    std::vector<const char*> argv;
    argv.push_back("hciter");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!s.gamma_text.empty()) (void)s.gamma();  // validate the flag up front
        if (solve_cmd->parsed()) return cmd_solve(s, sys_path, out, err);
        if (count_cmd->parsed()) return cmd_count(s, sys_path, out, err);
        if (first_real_cmd->parsed()) return cmd_first_real(s, sys_path, out, err);
        if (any_nonreal_cmd->parsed()) return cmd_any_nonreal(s, sys_path, out, err);
        if (trace_cmd->parsed()) return cmd_trace(s, sys_path, out, err);
        if (compress_cmd->parsed()) return cmd_compress(s, sys_path, sols_path, out_path, out, err);
        if (decompress_cmd->parsed()) return cmd_decompress(s, in_path, out, err);
        if (bkk_cmd->parsed()) return cmd_bkk(bkk_n, out);
        if (necklace_cmd->parsed()) return cmd_necklace_demo(s, d1, d2, target, out, err);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace hc::cli
