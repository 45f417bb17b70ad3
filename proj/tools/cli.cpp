#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "slgen/certify.hpp"
#include "slgen/construct.hpp"
#include "slgen/error.hpp"

namespace slgen::cli {

using arith::Natural;

namespace {

struct CliConfig {
    unsigned n = 0;
    std::string q;
    std::string q_max;
    std::string out;
    std::string path;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool verbose = false;
};

// Thrown for invalid (n, q) after argument parsing succeeded.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural parse_q(const std::string& text) {
    Natural q;
    try {
        q = Natural::from_string(text);
    } catch (const Error&) {
        throw UsageError("'" + text + "' is not a nonnegative integer");
    }
    try {
        arith::prime_power_decompose(q);
    } catch (const NotPrimePower&) {
        throw UsageError(q.to_string() + " is not a prime power");
    }
    return q;
}

void check_n(unsigned n) {
    if (n != 9 && n != 10 && n != 11) throw UsageError("n must be 9, 10 or 11, got " + std::to_string(n));
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string matrix_text(const matrix::Mat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) os << (j ? " " : "") << m(i, j).to_string();
        os << '\n';
    }
    return os.str();
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
    check_n(cfg.n);
    const Natural q = parse_q(cfg.q);
    construct::GenPair g;
    try {
        g = construct::build(cfg.n, q);
    } catch (const InvalidPrime& e) {
        throw UsageError(e.what());
    }
    std::string text;
    if (cfg.format == "json") {
        nlohmann::json j{{"n", std::to_string(cfg.n)},
                         {"q", q.to_string()},
                         {"construction", construct::tag_name(g.tag)},
                         {"field", certify::field_to_json(g.field)},
                         {"matrices", {{"x", certify::matrix_to_json(g.x)}, {"y", certify::matrix_to_json(g.y)}}}};
        text = j.dump(2) + "\n";
    } else {
        text = "SL " + std::to_string(cfg.n) + " " + q.to_string() + " field=" + g.field->describe() + "\n";
        text += "x\n" + matrix_text(g.x) + "y\n" + matrix_text(g.y);
    }
    write_output(cfg.out, text, out);
    return kOk;
}

int cmd_certify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    check_n(cfg.n);
    const Natural q = parse_q(cfg.q);
    const auto cert = certify::certify(cfg.n, q, cfg.seed);
    write_output(cfg.out, certify::serialize(cert), out);
    if (cfg.verbose) err << "certified SL_" << cfg.n << "(" << q.to_string() << ")\n";
    return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    const std::string text = read_file(cfg.path);
    certify::Certificate cert;
    try {
        cert = certify::parse(text);
    } catch (const MalformedCertificate& e) {
        out << "FAIL " << e.what() << '\n';
        return kVerifyFailed;
    }
    const auto report = certify::verify(cert);
    if (report.ok) {
        out << "OK all claims reproduce\n";
        return kOk;
    }
    out << "FAIL " << report.first_failure << '\n';
    return kVerifyFailed;
}

std::string variants_text(const certify::MaxSubEntry& e) {
    if (e.variants.empty()) return "-";
    std::string s;
    for (const auto& v : e.variants) {
        if (!s.empty()) s += "; ";
        if (v.q0) s += "q0=" + v.q0->to_string() + ": ";
        s += v.order.to_string();
    }
    return s;
}

int cmd_maxsub(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const Natural q = parse_q(cfg.q);
    const auto r = certify::q_divisibility_scan_unchecked(q);
    out << "SL_11(" << q.to_string() << ")  Q = " << r.Q.to_string() << '\n';
    out << std::left << std::setw(5) << "case" << std::setw(38) << "structure" << std::setw(11) << "applicable"
        << std::setw(11) << "Q|order" << "order\n";
    for (const auto& row : r.rows) {
        const auto& e = row.entry;
        out << std::left << std::setw(5) << e.case_id << std::setw(38) << e.label << std::setw(11)
            << (e.applicable ? "yes" : "no") << std::setw(11) << (row.divisible ? "DIVISIBLE" : "-")
            << variants_text(e);
        if (!e.applicable) out << "  (" << e.reason << ")";
        out << '\n';
    }
    std::string cases;
    for (unsigned c : r.divisible_cases) cases += (cases.empty() ? "" : ", ") + std::to_string(c);
    out << "divisible cases: {" << cases << "}\n";
    if (r.divisible_cases != std::vector<unsigned>{7}) {
        err << "error: expected exactly case 7 to be divisible by Q\n";
        return kVerifyFailed;
    }
    return kOk;
}

struct SweepLine {
    bool pass = false;
    std::string text;
};

SweepLine sweep_one(unsigned n, const Natural& q, std::uint64_t seed) {
    std::ostringstream os;
    os << "SL_" << n << "(" << q.to_string() << ") ";
    try {
        const auto cert = certify::certify(n, q, seed);
        const auto report = certify::verify(cert);
        if (!report.ok) {
            os << "FAIL " << report.first_failure;
            return {false, os.str()};
        }
        os << "PASS construction=" << cert["construction"].get<std::string>()
           << " ord(z)=" << cert["orders"]["z"].get<std::string>();
        return {true, os.str()};
    } catch (const std::exception& e) {
        os << "FAIL " << e.what();
        return {false, os.str()};
    }
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out) {
    check_n(cfg.n);
    Natural q_max;
    try {
        q_max = Natural::from_string(cfg.q_max);
    } catch (const Error&) {
        throw UsageError("'" + cfg.q_max + "' is not a nonnegative integer");
    }
    if (!q_max.fits_u64()) throw UsageError("--q-max is too large");
    std::vector<Natural> qs;
    for (std::uint64_t v = 2; v <= q_max.to_u64(); ++v) {
        const auto f = arith::factor(Natural(v));
        if (f.factors.size() == 1) qs.emplace_back(v);
    }

    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SweepLine> lines(qs.size());
    for (std::size_t start = 0; start < qs.size(); start += workers) {
        std::vector<std::future<SweepLine>> batch;
        const std::size_t stop = std::min(qs.size(), start + workers);
        for (std::size_t i = start; i < stop; ++i)
            batch.push_back(std::async(std::launch::async, sweep_one, cfg.n, qs[i], cfg.seed));
        for (std::size_t i = start; i < stop; ++i) lines[i] = batch[i - start].get();
    }

    std::size_t passed = 0;
    for (const auto& l : lines) {
        out << l.text << '\n';
        passed += l.pass;
    }
    out << "summary n=" << cfg.n << " q<=" << q_max.to_string() << ": " << passed << "/" << lines.size() << " PASS\n";
    return passed == lines.size() ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Explicit (2,3)-generators for SL_n(q), n = 9, 10, 11, with checkable certificates", "slgen"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", cfg.verbose, "Progress messages on stderr");

    auto* gen = app.add_subcommand("gen", "Print the generator pair x, y");
    gen->add_option("--n", cfg.n, "Dimension (9, 10 or 11)")->required();
    gen->add_option("--q", cfg.q, "Field size (prime power)")->required();
    gen->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--out", cfg.out, "Output path (default stdout)");

    auto* cert = app.add_subcommand("certify", "Write a JSON certificate");
    cert->add_option("--n", cfg.n, "Dimension (9, 10 or 11)")->required();
    cert->add_option("--q", cfg.q, "Field size (prime power)")->required();
    cert->add_option("--out", cfg.out, "Output path (default stdout)");
    cert->add_option("--seed", cfg.seed, "MeatAxe seed")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Recheck every claim of a certificate");
    ver->add_option("path", cfg.path, "Certificate file")->required();

    auto* maxsub = app.add_subcommand("maxsub", "Maximal-subgroup orders of SL_11(q) and the Q-divisibility scan");
    maxsub->add_option("--q", cfg.q, "Field size (prime power)")->required();

    auto* sweep = app.add_subcommand("sweep", "Certify and verify every prime power q <= q-max");
    sweep->add_option("--n", cfg.n, "Dimension (9, 10 or 11)")->required();
    sweep->add_option("--q-max", cfg.q_max, "Largest q")->required();
    sweep->add_option("--seed", cfg.seed, "MeatAxe seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*gen) return cmd_gen(cfg, out);
        if (*cert) return cmd_certify(cfg, out, err);
        if (*ver) return cmd_verify(cfg, out);
        if (*maxsub) return cmd_maxsub(cfg, out, err);
        return cmd_sweep(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
}

}  // namespace slgen::cli
