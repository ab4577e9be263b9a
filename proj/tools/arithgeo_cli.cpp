// Command-line front end: construct-fields, census, surface-demo, recover.
//
// Data goes to --out (or stdout); the run manifest goes to <out>.manifest.json
// (or stderr). Exit codes: 0 ok, 2 usage, 3 verification failure, 4 bounds
// too small to produce output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arithgeo/errors.hpp"
#include "arithgeo/geodesics.hpp"
#include "arithgeo/pipelines.hpp"
#include "arithgeo/version.hpp"

using namespace arithgeo;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitStarved = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Accepts plain integers and exact scientific notation such as 1e8.
u64 parse_count(const std::string& text, const char* what) {
    std::size_t used = 0;
    try {
        if (text.find_first_not_of("0123456789") == std::string::npos && !text.empty()) {
            const u64 v = std::stoull(text, &used);
            if (used == text.size()) return v;
        }
        const double d = std::stod(text, &used);
        if (used == text.size() && d >= 0 && d <= 9.007199254740992e15 && std::floor(d) == d)
            return static_cast<u64>(d);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(what) + ": not a non-negative integer: " + text);
}

std::vector<u64> parse_count_list(const std::string& text, const char* what) {
    std::vector<u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_count(item, what));
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << csv_field(cells[i]);
        os_ << "\n";
    }

private:
    std::ostream& os_;
};

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

ojson json_int(i128 v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return to_string(v);
}

// Where a command writes its data and its manifest.
class Output {
public:
    explicit Output(const std::string& path) : path_(path) {
        if (!path_.empty()) {
            file_ = std::make_unique<std::ofstream>(path_);
            if (!*file_) throw UsageError("cannot open " + path_ + " for writing");
        }
    }

    std::ostream& data() { return file_ ? *file_ : std::cout; }

    void manifest(const ojson& m) {
        if (path_.empty()) {
            std::cerr << "manifest: " << m.dump() << "\n";
            return;
        }
        std::ofstream mf(path_ + ".manifest.json");
        mf << m.dump(2) << "\n";
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
};

ojson manifest_base(const std::string& command) {
    ojson m;
    m["tool"] = "arithgeo";
    m["version"] = kVersion;
    m["command"] = command;
    return m;
}

std::string ram_string(const QuatAlgQ& b) {
    std::vector<std::string> parts;
    for (u64 p : b.ram_finite()) parts.push_back(std::to_string(p));
    return join(parts, " ");
}

// ---------------------------------------------------------------- commands

struct ConstructOpts {
    i64 delta = 0;
    std::size_t n = 0;
    bool json = false;
    bool csv = false;
    std::string out;
};

int cmd_construct_fields(const ConstructOpts& o) {
    if (o.json && o.csv) throw UsageError("--json and --csv are exclusive");
    if (!is_fundamental_discriminant(o.delta) || o.delta >= 0)
        throw UsageError(std::to_string(o.delta) + " is not a negative fundamental discriminant");
    if (o.n == 0) throw UsageError("--n must be at least 1");

    const auto fc = construct_fields(o.delta, o.n);
    Output out(o.out);
    const std::vector<std::string> columns{"i", "p", "x", "r", "t", "minimal_polynomial", "disc_bound",
                                           "disc_bound_over_n8", "galois", "witness"};
    auto witness = [&](std::size_t i) {
        const auto& w = fc.compositum.witnesses[i];
        return w ? to_string(*w) : std::string();
    };

    if (o.json) {
        ojson doc;
        doc["delta_k"] = fc.delta_k;
        doc["n"] = fc.n;
        doc["certified"] = fc.certified();
        doc["non_galois_certified"] = fc.non_galois_certified;
        doc["compositum_verdict"] = to_string(fc.compositum.verdict);
        doc["split_prime_ratio"] = fc.split_prime_ratio;
        doc["fields"] = ojson::array();
        for (std::size_t i = 0; i < fc.fields.size(); ++i) {
            const auto& f = fc.fields[i];
            ojson row;
            row["i"] = i + 1;
            row["p"] = f.p;
            row["x"] = f.ext.x();
            row["r"] = f.shift.r;
            row["t"] = f.shift.t;
            row["minimal_polynomial"] = to_string(minimal_polynomial(f.ext));
            row["disc_bound"] = json_int(f.disc_bound);
            row["disc_bound_over_n8"] = f.disc_ratio_n8;
            row["galois"] = f.galois;
            row["witness"] = witness(i);
            doc["fields"].push_back(row);
        }
        out.data() << doc.dump(2) << "\n";
    } else {
        CsvWriter csv(out.data());
        csv.row(columns);
        for (std::size_t i = 0; i < fc.fields.size(); ++i) {
            const auto& f = fc.fields[i];
            csv.row({std::to_string(i + 1), std::to_string(f.p), std::to_string(f.ext.x()),
                     std::to_string(f.shift.r), std::to_string(f.shift.t), to_string(minimal_polynomial(f.ext)),
                     to_string(f.disc_bound), fmt(f.disc_ratio_n8), f.galois ? "true" : "false", witness(i)});
        }
    }

    auto m = manifest_base("construct-fields");
    m["delta"] = o.delta;
    m["n"] = o.n;
    m["format"] = o.json ? "json" : "csv";
    m["columns"] = join(columns, ",");
    m["certified"] = fc.certified();
    out.manifest(m);
    return 0;
}

struct CensusOpts {
    i64 delta = -4;
    std::size_t n = 1;
    std::string x;
    std::string checkpoints;
    unsigned shards = 1;
    std::string algebras;
    std::string out;
    bool quiet = false;
};

int cmd_census(const CensusOpts& o) {
    if (!is_fundamental_discriminant(o.delta) || o.delta >= 0)
        throw UsageError(std::to_string(o.delta) + " is not a negative fundamental discriminant");
    const u64 x = parse_count(o.x, "--x");
    if (x < 2) throw UsageError("--x must be at least 2");
    if (x > 0xffffffffULL) throw UsageError("--x above 2^32 is not supported");
    if (o.shards == 0 || o.shards > 256) throw UsageError("--shards must lie in [1, 256]");
    auto cps = parse_count_list(o.checkpoints, "--checkpoints");
    for (u64 c : cps)
        if (c < 2 || c > x) throw UsageError("checkpoints must lie in [2, x]");

    Progress progress;
    if (!o.quiet) progress = [](const std::string& msg) { std::cerr << "[census] " << msg << "\n"; };
    const auto run = run_census(o.delta, o.n, x, cps, o.shards, progress);
    const double tau = std::ldexp(1.0, -static_cast<int>(2 * o.n + 1));

    Output out(o.out);
    const std::vector<std::string> columns{"checkpoint",        "prime_count",    "density_ratio",
                                           "expected_density",  "squarefree_count", "normalized_count",
                                           "algebra_count"};
    CsvWriter csv(out.data());
    csv.row(columns);
    for (std::size_t i = 0; i < run.checkpoints.size(); ++i) {
        const u64 c = run.checkpoints[i];
        const double cd = static_cast<double>(c);
        const double normalized = static_cast<double>(run.squarefree[i]) / (cd * std::pow(std::log(cd), tau - 1.0));
        // algebras with |disc_f| = d^2 < c
        u64 algebras = 0;
        for (u64 d : run.algebras.supports)
            if (d * d < c) ++algebras;
        csv.row({std::to_string(c), std::to_string(run.density[i].count), fmt(run.density[i].ratio), fmt(tau),
                 std::to_string(run.squarefree[i]), fmt(normalized), std::to_string(algebras)});
    }

    if (!o.algebras.empty()) {
        std::ofstream af(o.algebras);
        if (!af) throw UsageError("cannot open " + o.algebras + " for writing");
        CsvWriter acsv(af);
        acsv.row({"d", "disc_f_norm", "ramified_primes"});
        for (std::size_t i = 0; i < run.algebras.algebras.size(); ++i) {
            const u64 d = run.algebras.supports[i];
            acsv.row({std::to_string(d), std::to_string(d * d), to_string(run.algebras.algebras[i])});
        }
    }

    auto m = manifest_base("census");
    m["delta"] = o.delta;
    m["n"] = o.n;
    m["x"] = x;
    m["checkpoints"] = join([&] {
        std::vector<std::string> s;
        for (u64 c : run.checkpoints) s.push_back(std::to_string(c));
        return s;
    }(), ",");
    m["shards"] = o.shards;
    m["columns"] = join(columns, ",");
    m["tau"] = tau;
    if (run.fields)
        m["shifts"] = join([&] {
            std::vector<std::string> s;
            for (const auto& f : run.fields->fields) s.push_back(std::to_string(f.ext.x()));
            return s;
        }(), ",");
    m["algebra_count"] = run.algebras.count;
    if (run.fit) {
        m["fit_constant"] = run.fit->constant;
        m["fit_max_drift"] = run.fit->max_successive_drift;
        m["fit_from_checkpoint"] = run.checkpoints[run.fit_offset];
    }
    out.manifest(m);
    return 0;
}

struct DemoOpts {
    std::size_t n = 0;
    std::string disc_bound = "100000";
    bool linnik = false;
    bool json = false;
    std::string out;
};

int cmd_surface_demo(const DemoOpts& o, const std::string& name) {
    if (o.n == 0) throw UsageError("--n must be at least 1");
    const u64 disc_bound = parse_count(o.disc_bound, "--disc-bound");
    if (disc_bound < 3) throw UsageError("--disc-bound must be at least 3");
    const auto demo = run_surface_demo(o.n, disc_bound, o.linnik);

    auto embeds_row = [&](std::size_t i) {
        std::vector<std::string> cells;
        for (bool b : demo.embedding[i]) cells.push_back(b ? "1" : "0");
        return join(cells, ",");
    };
    const u64 q_last = demo.selection.q.back();

    Output out(o.out);
    std::vector<std::string> columns{"i",     "p",      "q",            "q_common", "ramified",     "coarea_exact",
                                     "coarea", "length", "length_ratio", "embeds"};
    if (o.linnik) columns.push_back("linnik_ratio");

    if (o.json) {
        ojson doc;
        doc["n"] = demo.n;
        doc["p"] = demo.selection.p;
        doc["q"] = demo.selection.q;
        doc["max_q"] = demo.selection.max_q;
        doc["q_exponent_fit"] = demo.selection.exponent_fit;
        doc["length_scale"] = demo.length_scale;
        doc["max_length_ratio"] = demo.max_length_ratio;
        doc["embedding"] = demo.embedding;
        doc["rows"] = ojson::array();
        for (std::size_t i = 0; i < demo.rows.size(); ++i) {
            const auto& r = demo.rows[i];
            ojson row;
            row["i"] = r.index;
            row["p"] = r.p;
            row["q"] = r.q;
            row["ramified"] = ram_string(r.algebra);
            row["coarea_exact"] = r.coarea.to_string();
            row["coarea"] = r.coarea.value();
            row["length"] = r.length;
            row["length_ratio"] = r.length_ratio;
            if (o.linnik) row["linnik_ratio"] = demo.linnik[i].linnik_ratio;
            doc["rows"].push_back(row);
        }
        doc["wood_count"] = demo.wood.count;
        doc["wood_predicted"] = demo.wood.predicted;
        doc["wood_ratio"] = demo.wood.ratio;
        out.data() << doc.dump(2) << "\n";
    } else {
        CsvWriter csv(out.data());
        csv.row(columns);
        for (std::size_t i = 0; i < demo.rows.size(); ++i) {
            const auto& r = demo.rows[i];
            std::vector<std::string> cells{std::to_string(r.index), std::to_string(r.p), std::to_string(r.q),
                                           std::to_string(q_last), ram_string(r.algebra), r.coarea.to_string(),
                                           fmt(r.coarea.value()), fmt(r.length), fmt(r.length_ratio),
                                           embeds_row(i)};
            if (o.linnik) cells.push_back(fmt(demo.linnik[i].linnik_ratio));
            csv.row(cells);
        }
    }

    auto m = manifest_base(name);
    m["n"] = o.n;
    m["disc_bound"] = disc_bound;
    m["linnik_report"] = o.linnik;
    m["format"] = o.json ? "json" : "csv";
    m["columns"] = join(columns, ",");
    m["max_q"] = demo.selection.max_q;
    m["q_exponent_fit"] = demo.selection.exponent_fit;
    m["length_scale"] = demo.length_scale;
    m["max_length_ratio"] = demo.max_length_ratio;
    m["wood_count"] = demo.wood.count;
    m["wood_predicted"] = demo.wood.predicted;
    m["wood_ratio"] = demo.wood.ratio;
    out.manifest(m);
    return 0;
}

struct RecoverOpts {
    i64 delta = -4;
    std::vector<u64> pairs;
    std::string d_bound;
    std::string p_bound = "100";
    bool json = false;
    std::string out;
};

int cmd_recover(const RecoverOpts& o) {
    if (!is_fundamental_discriminant(o.delta) || o.delta >= 0)
        throw UsageError(std::to_string(o.delta) + " is not a negative fundamental discriminant");
    if (o.pairs.empty()) throw UsageError("--pairs needs at least one prime");
    const u64 d_bound = parse_count(o.d_bound, "--d-bound");
    const u64 p_bound = parse_count(o.p_bound, "--p-bound");
    const QuadraticField k(o.delta);
    for (u64 p : o.pairs)
        if (p == 2 || !is_prime(p) || splitting(k, p) != SplitType::Split)
            throw UsageError(std::to_string(p) + " is not an odd prime split in k");

    const auto run = run_recovery(o.delta, o.pairs, d_bound, p_bound);
    const auto& r = run.result;
    auto list = [](const auto& range) {
        std::vector<std::string> s;
        for (u64 p : range) s.push_back(std::to_string(p));
        return join(s, " ");
    };

    Output out(o.out);
    const std::vector<std::string> columns{"pairing", "recovered", "contains_pairing", "equals_pairing",
                                           "fields_used"};
    if (o.json) {
        ojson doc;
        doc["pairing"] = r.pairing;
        doc["recovered"] = std::vector<u64>(r.recovered.begin(), r.recovered.end());
        doc["contains_pairing"] = r.contains_pairing;
        doc["equals_pairing"] = r.equals_pairing;
        doc["fields_used"] = r.fields.size();
        out.data() << doc.dump(2) << "\n";
    } else {
        CsvWriter csv(out.data());
        csv.row(columns);
        csv.row({list(r.pairing), list(r.recovered), r.contains_pairing ? "true" : "false",
                 r.equals_pairing ? "true" : "false", std::to_string(r.fields.size())});
    }

    auto m = manifest_base("recover");
    m["delta"] = o.delta;
    m["pairs"] = list(o.pairs);
    m["d_bound"] = d_bound;
    m["p_bound"] = p_bound;
    m["format"] = o.json ? "json" : "csv";
    m["columns"] = join(columns, ",");
    out.manifest(m);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic hyperbolic geometry experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    ConstructOpts co;
    auto* construct = app.add_subcommand("construct-fields", "Build n certified relative quadratic extensions of k");
    construct->add_option("--delta", co.delta, "Fundamental discriminant of k (negative)")->required();
    construct->add_option("--n", co.n, "Number of extensions")->required();
    construct->add_flag("--json", co.json, "JSON output");
    construct->add_flag("--csv", co.csv, "CSV output (default)");
    construct->add_option("--out", co.out, "Data file; manifest goes to <out>.manifest.json");

    CensusOpts cen;
    auto* census = app.add_subcommand("census", "Count the prime set, squarefree supports and quaternion algebras");
    census->add_option("--delta", cen.delta, "Fundamental discriminant of k")->capture_default_str();
    census->add_option("--n", cen.n, "Number of extensions (0 for none)")->capture_default_str();
    census->add_option("--x", cen.x, "Bound; scientific notation such as 1e8 accepted")->required();
    census->add_option("--checkpoints", cen.checkpoints, "Comma-separated checkpoints (default: powers of 10)");
    census->add_option("--shards", cen.shards, "Sieve shards run in parallel")->capture_default_str();
    census->add_option("--algebras", cen.algebras, "Also write the algebra list to this CSV file");
    census->add_option("--out", cen.out, "Data file; manifest goes to <out>.manifest.json");
    census->add_flag("--quiet", cen.quiet, "No progress messages");

    DemoOpts demo_opts;
    auto* demo = app.add_subcommand("surface-demo", "Quaternion algebras over Q with prescribed real quadratic subfields");
    demo->alias("theorem2-demo");
    demo->add_option("--n", demo_opts.n, "Number of algebras")->required();
    demo->add_option("--disc-bound", demo_opts.disc_bound, "Bound for the splitting statistics")
        ->capture_default_str();
    demo->add_flag("--linnik-report", demo_opts.linnik, "Report p_i / (i log 2i)");
    demo->add_flag("--json", demo_opts.json, "JSON output");
    demo->add_option("--out", demo_opts.out, "Data file; manifest goes to <out>.manifest.json");

    RecoverOpts rec;
    auto* recover = app.add_subcommand("recover", "Recover the ramification of a base-change algebra");
    recover->add_option("--delta", rec.delta, "Fundamental discriminant of k")->capture_default_str();
    recover->add_option("--pairs", rec.pairs, "Rational primes p with both primes above p ramified")
        ->required()
        ->delimiter(',');
    recover->add_option("--d-bound", rec.d_bound, "Bound on |D| for the quadratic fields used")->required();
    recover->add_option("--p-bound", rec.p_bound, "Bound on the primes tested")->capture_default_str();
    recover->add_flag("--json", rec.json, "JSON output");
    recover->add_option("--out", rec.out, "Data file; manifest goes to <out>.manifest.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*construct) return cmd_construct_fields(co);
        if (*census) return cmd_census(cen);
        if (*demo) return cmd_surface_demo(demo_opts, demo->get_name());
        if (*recover) return cmd_recover(rec);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BoundStarvation& e) {
        std::cerr << "bounds too small: " << e.what() << "\n";
        return kExitStarved;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
