/*
   Copyright 2026 The gop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gop/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "gop/cli/parser.hpp"
#include "gop/cli/report.hpp"
#include "gop/integers.hpp"

namespace gop::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string source;
    std::string catalog;
    std::string point;
    std::string primes = "2..50";
    std::string series_file;
    std::uint32_t prime = 0;
    int s = 40;
    int galochkin_s = 30;
    std::uint32_t P = 43;
    double slack = 0.3;
    double c = 0.0;
    int N = -1, M = -1, trunc = -1;
};

// The system, operator and label the numeric commands work on.
struct Subject {
    std::string label;
    CatalogEntry entry;
};

Subject resolve(const Options& o) {
    if (!o.catalog.empty() && !o.source.empty()) throw UsageError("give either an operator or --catalog, not both");
    if (!o.catalog.empty()) {
        try {
            return {o.catalog, catalog_get(o.catalog)};
        } catch (const InvalidParameters& e) {
            throw UsageError(e.what());
        }
    }
    if (o.source.empty()) throw UsageError("an operator expression or --catalog is required");
    Subject s;
    s.label = o.source;
    s.entry.id = o.source;
    s.entry.op = parse_operator(o.source);
    if (s.entry.op.order() < 1) throw UsageError("the operator must have order at least 1");
    s.entry.system = companion(s.entry.op);
    s.entry.system_is_companion = true;
    return s;
}

std::pair<std::uint32_t, std::uint32_t> parse_primes(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--primes expects a..b");
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        long lo = std::stol(a, &p1), hi = std::stol(b, &p2);
        if (p1 != a.size() || p2 != b.size() || lo < 0 || hi < lo) throw UsageError("--primes expects a..b with a <= b");
        if (hi >= 32768) throw UnsupportedParameters("primes above 32767 are not supported");
        return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
    } catch (const std::logic_error&) {
        throw UsageError("--primes expects a..b");
    }
}

std::uint32_t require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw UsageError("--prime must be a prime number");
    if (p >= 32768) throw UnsupportedParameters("primes above 32767 are not supported");
    return p;
}

Json subject_input(const Options& o) {
    Json in;
    in["operator"] = o.source.empty() ? Json(nullptr) : Json(o.source);
    in["catalog"] = o.catalog.empty() ? Json(nullptr) : Json(o.catalog);
    return in;
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const BadPrime*>(&e)) return "BadPrime";
    if (dynamic_cast<const IrregularPoint*>(&e)) return "IrregularPoint";
    if (dynamic_cast<const NotOrdinaryPoint*>(&e)) return "NotOrdinaryPoint";
    if (dynamic_cast<const PoleAtOrigin*>(&e)) return "PoleAtOrigin";
    if (dynamic_cast<const DivisionByZeroOperator*>(&e)) return "DivisionByZeroOperator";
    if (dynamic_cast<const InvalidParameters*>(&e)) return "InvalidParameters";
    if (dynamic_cast<const UnsupportedParameters*>(&e)) return "UnsupportedParameters";
    if (dynamic_cast<const NoSolution*>(&e)) return "NoSolution";
    if (dynamic_cast<const InsufficientTruncation*>(&e)) return "InsufficientTruncation";
    if (dynamic_cast<const MixedBasisError*>(&e)) return "MixedBasisError";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
    return "InternalError";
}

// --- command bodies: each fills `input` and returns the result payload ---

Json cmd_classify(const Options& o, Json& input) {
    input = subject_input(o);
    return to_json(classify_operator(resolve(o).entry.op));
}

Json cmd_exponents(const Options& o, Json& input) {
    input = subject_input(o);
    input["point"] = o.point;
    Point pt;
    if (o.point == "inf" || o.point == "infinity") {
        pt = Point::infinity();
    } else {
        try {
            pt = Point::at(parse_rational(o.point));
        } catch (const std::invalid_argument&) {
            throw UsageError("--point expects a rational number or inf");
        }
    }
    const DiffOp L = resolve(o).entry.op;
    Poly phi = indicial_polynomial(L, pt);
    return to_json(split_rational(phi), phi, pt);
}

Json cmd_pcurv(const Options& o, Json& input) {
    input = subject_input(o);
    input["prime"] = o.prime;
    const std::uint32_t p = require_prime(o.prime);
    Subject s = resolve(o);
    PCurvatureReport rep = pcurvature_report(s.entry.system, s.entry.system_is_companion ? &s.entry.op : nullptr, p);
    if (rep.status == PStatus::BadPrime) throw BadPrime(p, "the system does not reduce modulo this prime");
    Json j = to_json(rep);
    j["p_curvature"] = p_curvature(s.entry.system, p).to_string();
    return j;
}

Json cmd_scan(const Options& o, Json& input) {
    input = subject_input(o);
    input["primes"] = o.primes;
    auto [lo, hi] = parse_primes(o.primes);
    Subject s = resolve(o);
    return to_json(global_scan(s.label, s.entry.system, s.entry.system_is_companion ? &s.entry.op : nullptr, lo, hi));
}

Json cmd_galochkin(const Options& o, Json& input) {
    input = subject_input(o);
    input["s"] = o.galochkin_s;
    if (o.galochkin_s < 1) throw UsageError("--s must be positive");
    return to_json(galochkin_trace(resolve(o).entry.system, o.galochkin_s));
}

Json cmd_size(const Options& o, Json& input) {
    input = subject_input(o);
    input["s"] = o.s;
    input["P"] = o.P;
    if (o.s < 1) throw UsageError("--s must be positive");
    const RatMat G = resolve(o).entry.system;
    ScaledSequence seq = scaled_sequence(G, o.s);
    Json j = to_json(size_estimate(seq, o.s, o.P));
    auto [plus, minus] = h_plus_minus(minimal_T(G), o.P);
    j["h_plus_T"] = decimal(plus);
    j["h_minus_T"] = decimal(minus);
    return j;
}

Json cmd_radius(const Options& o, Json& input) {
    input = subject_input(o);
    input["prime"] = o.prime;
    input["s"] = o.s;
    const std::uint32_t p = require_prime(o.prime);
    const RatMat G = resolve(o).entry.system;
    const int s_max = std::max(o.s, static_cast<int>(G.dim()));
    ScaledSequence seq = scaled_sequence(G, s_max);
    Json j;
    j["prime"] = p;
    j["s_max"] = s_max;
    j["radius"] = to_json(radius_estimate(seq, p, s_max));
    j["radius_corrected"] = to_json(radius_estimate_corrected(seq, p, s_max));
    std::vector<bool> dr = dwork_robba_check(seq, p, s_max);
    j["dwork_robba_holds"] = std::all_of(dr.begin(), dr.end(), [](bool b) { return b; });
    Json failures = Json::array();
    for (std::size_t i = 0; i < dr.size(); ++i)
        if (!dr[i]) failures.push_back(i + 1);
    j["dwork_robba_failures"] = failures;
    return j;
}

Json cmd_bombieri(const Options& o, Json& input) {
    input = subject_input(o);
    input["s"] = o.s;
    input["P"] = o.P;
    input["slack"] = decimal(o.slack);
    input["c"] = decimal(o.c);
    if (o.s < 1) throw UsageError("--s must be positive");
    return to_json(bombieri_report(resolve(o).entry.system, o.s, o.P, o.slack, o.c));
}

Json cmd_pade(const Options& o, Json& input) {
    input["series"] = o.series_file.empty() ? Json(nullptr) : Json(o.series_file);
    input["catalog"] = o.catalog.empty() ? Json(nullptr) : Json(o.catalog);
    input["N"] = o.N;
    input["M"] = o.M;
    if (o.N < 0 || o.M < 1) throw UsageError("--N >= 0 and --M >= 1 are required");
    if (o.series_file.empty() == o.catalog.empty()) throw UsageError("give exactly one of --series or --catalog");
    if (!o.series_file.empty()) {
        std::ifstream in(o.series_file);
        if (!in) throw UsageError("cannot open " + o.series_file);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("series file: ") + e.what());
        }
        std::vector<TruncatedSeries> f;
        try {
            f = series_from_json(doc);
        } catch (const std::exception& e) {
            throw UsageError(std::string("series file: ") + e.what());
        }
        PadeApproximant a = pade_type2(f, o.N, o.M);
        return to_json(a, residual_order(a.Q, a.P, f));
    }
    const int trunc = o.trunc > 0 ? o.trunc : o.N + o.M + 1;
    input["trunc"] = trunc;
    Options only_catalog;
    only_catalog.catalog = o.catalog;
    Subject s = resolve(only_catalog);
    std::vector<TruncatedSeries> f = system_solution(s.entry, trunc);
    if (f.empty()) throw UsageError("catalog entry " + o.catalog + " has no power-series solution");
    return to_json(build_pade_system(f, s.entry.system, o.N, o.M));
}

Json cmd_catalog_list(Json& input) {
    input = Json::object();
    Json out = Json::array();
    for (const auto& e : catalog_all()) {
        Json x;
        x["id"] = e.id;
        x["description"] = e.description;
        x["operator"] = e.op.to_string();
        out.push_back(x);
    }
    Json j;
    j["entries"] = out;
    return j;
}

Json cmd_catalog_get(const std::string& id, Json& input) {
    input["id"] = id;
    try {
        return to_json(catalog_get(id));
    } catch (const InvalidParameters& e) {
        throw UsageError(e.what());
    }
}

void add_subject(CLI::App* sub, Options& o) {
    sub->add_option("operator", o.source, "Operator expression, e.g. \"(1-z)*D^2 - D\"");
    sub->add_option("--catalog", o.catalog, "Catalog id instead of an expression");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact experiments with linear differential operators over Q(z)", "gop"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.set_version_flag("--version", kToolVersion);

    auto* classify = app.add_subcommand("classify", "Singular points, Fuchs test and exponents");
    add_subject(classify, o);
    auto* exps = app.add_subcommand("exponents", "Indicial polynomial and exponents at a point");
    add_subject(exps, o);
    exps->add_option("--point", o.point, "Rational number or inf")->required();
    auto* pcurv = app.add_subcommand("pcurv", "p-curvature at one prime");
    add_subject(pcurv, o);
    pcurv->add_option("--prime", o.prime)->required();
    auto* scan = app.add_subcommand("scan", "p-curvature over a range of primes");
    add_subject(scan, o);
    scan->add_option("--primes", o.primes, "Inclusive range a..b")->capture_default_str();
    auto* galochkin = app.add_subcommand("galochkin", "Common denominators q_s");
    add_subject(galochkin, o);
    galochkin->add_option("--s", o.galochkin_s, "Largest s")->capture_default_str();
    auto* size = app.add_subcommand("size", "Truncated size estimate");
    add_subject(size, o);
    size->add_option("--s", o.s, "")->capture_default_str();
    size->add_option("--P", o.P, "Largest prime")->capture_default_str();
    auto* radius = app.add_subcommand("radius", "Truncated generic radius and Dwork-Robba check at one prime");
    add_subject(radius, o);
    radius->add_option("--prime", o.prime)->required();
    radius->add_option("--s", o.s, "")->capture_default_str();
    auto* bombieri = app.add_subcommand("bombieri", "Size against radius sandwich report");
    add_subject(bombieri, o);
    bombieri->add_option("--s", o.s, "")->capture_default_str();
    bombieri->add_option("--P", o.P, "")->capture_default_str();
    bombieri->add_option("--slack", o.slack, "")->capture_default_str();
    bombieri->add_option("--c", o.c, "")->capture_default_str();
    auto* pade = app.add_subcommand("pade", "Type II Pade approximants");
    pade->add_option("--series", o.series_file, "JSON series file");
    pade->add_option("--catalog", o.catalog, "Catalog system");
    pade->add_option("--N", o.N)->required();
    pade->add_option("--M", o.M)->required();
    pade->add_option("--trunc", o.trunc, "Series truncation for catalog input");
    auto* catalog = app.add_subcommand("catalog", "Built-in examples");
    catalog->require_subcommand(1);
    auto* clist = catalog->add_subcommand("list", "List catalog ids");
    auto* cget = catalog->add_subcommand("get", "Show one entry");
    std::string get_id;
    cget->add_option("id", get_id)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "gop: " << e.what() << "\n";
        return 1;
    }

    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    if (command == "catalog") command += std::string(" ") + (clist->parsed() ? "list" : "get");

    const auto start = std::chrono::steady_clock::now();
    Json input = Json::object();
    try {
        Json result;
        if (classify->parsed()) result = cmd_classify(o, input);
        else if (exps->parsed()) result = cmd_exponents(o, input);
        else if (pcurv->parsed()) result = cmd_pcurv(o, input);
        else if (scan->parsed()) result = cmd_scan(o, input);
        else if (galochkin->parsed()) result = cmd_galochkin(o, input);
        else if (size->parsed()) result = cmd_size(o, input);
        else if (radius->parsed()) result = cmd_radius(o, input);
        else if (bombieri->parsed()) result = cmd_bombieri(o, input);
        else if (pade->parsed()) result = cmd_pade(o, input);
        else if (clist->parsed()) result = cmd_catalog_list(input);
        else result = cmd_catalog_get(get_id, input);

        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        Json env;
        env["tool"] = "gop";
        env["version"] = kToolVersion;
        env["command"] = command;
        env["input"] = input;
        env["result"] = result;
        env["timing"] = Json{{"elapsed_ms", ms}};
        if (o.format == "text") {
            out << "gop " << command << "\n" << render_text(result);
        } else {
            out << env.dump(2) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        Json env;
        env["tool"] = "gop";
        env["version"] = kToolVersion;
        env["command"] = command;
        Json detail;
        detail["kind"] = error_kind(e);
        detail["message"] = e.what();
        if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
            detail["line"] = pe->line();
            detail["column"] = pe->column();
        }
        if (const auto* bp = dynamic_cast<const BadPrime*>(&e)) detail["prime"] = bp->prime();
        env["error"] = detail;
        err << env.dump(2) << "\n";
        return dynamic_cast<const DomainError*>(&e) ? 2 : 1;
    }
}

}  // namespace gop::cli
