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

#include "gop/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gop::cli {

std::string decimal(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    if (x == 0) x = 0;  // drop a negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

Json to_json(const BigRat& q) { return q.get_str(); }

Json to_json(const Poly& p) { return p.to_string("z"); }

Json to_json(const RatMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const LogTerm& t) {
    Json j;
    j["prime"] = t.prime;
    j["exponent"] = t.exponent.get_str();
    j["value"] = decimal(t.value());
    return j;
}

namespace {

Json exponent_list(const std::vector<std::pair<BigRat, int>>& e) {
    Json out = Json::array();
    for (const auto& [v, m] : e) {
        Json x;
        x["value"] = v.get_str();
        x["multiplicity"] = m;
        out.push_back(x);
    }
    return out;
}

Json poly_list(const std::vector<Poly>& ps, const std::string& var) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string(var));
    return out;
}

Json location_json(const Location& l) {
    Json j;
    switch (l.kind) {
        case LocationKind::Finite:
            j["kind"] = "finite";
            j["value"] = l.a.get_str();
            break;
        case LocationKind::Infinity: j["kind"] = "infinity"; break;
        case LocationKind::AlgebraicClass:
            j["kind"] = "algebraic";
            j["minimal_polynomial"] = l.f.to_string("z");
            break;
    }
    return j;
}

Json status_json(const PCurvatureReport& r) {
    Json j;
    j["prime"] = r.prime;
    j["status"] = to_string(r.status);
    j["nilpotence_index"] = r.nilpotence_index ? Json(*r.nilpotence_index) : Json(nullptr);
    j["division_checked"] = r.division_checked;
    j["method_agreement"] = r.method_agreement;
    j["note"] = r.note;
    return j;
}

Json log_terms(const std::vector<LogTerm>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) out.push_back(to_json(t));
    return out;
}

}  // namespace

Json to_json(const IndicialData& d) {
    Json j;
    j["location"] = location_json(d.point.location);
    j["regular"] = d.point.regular;
    Json prof = Json::array();
    for (const auto& e : d.point.pole_profile) {
        Json x;
        x["j"] = e.j;
        x["pole_order"] = e.pole_order;
        x["bound"] = e.bound;
        prof.push_back(x);
    }
    j["pole_profile"] = prof;
    if (!d.point.regular) {
        j["ordinary"] = false;
        j["indicial_polynomial"] = nullptr;
        j["exponents"] = Json::array();
        j["nonrational_factors"] = Json::array();
        j["apparent_candidate"] = false;
        return j;
    }
    j["ordinary"] = d.ordinary;
    j["indicial_polynomial"] = d.phi.to_string("x");
    j["exponents"] = exponent_list(d.rational_exponents);
    j["nonrational_factors"] = poly_list(d.nonrational_factors, "x");
    j["apparent_candidate"] = d.apparent_candidate;
    return j;
}

Json to_json(const OperatorProfile& p) {
    Json j;
    j["operator"] = p.op.to_string();
    j["order"] = p.op.order();
    j["fuchsian"] = p.fuchsian;
    j["all_exponents_rational"] = p.all_exponents_rational;
    j["katz_consistent"] = p.katz_consistent;
    Json pts = Json::array();
    for (const auto& d : p.points) pts.push_back(to_json(d));
    j["points"] = pts;
    return j;
}

Json to_json(const ExponentSplit& e, const Poly& phi, const Point& pt) {
    Json j;
    j["point"] = pt.to_string();
    j["indicial_polynomial"] = phi.to_string("x");
    j["exponents"] = exponent_list(e.rational);
    j["nonrational_factors"] = poly_list(e.nonrational, "x");
    return j;
}

Json to_json(const PCurvatureReport& r) { return status_json(r); }

Json to_json(const GlobalScan& s) {
    Json j;
    j["id"] = s.id;
    j["primes"] = std::to_string(s.lo) + ".." + std::to_string(s.hi);
    j["verdict"] = to_string(s.verdict);
    Json bad = Json::array();
    for (const auto& r : s.reports)
        if (r.status == PStatus::BadPrime) bad.push_back(r.prime);
    j["bad_primes"] = bad;
    Json reps = Json::array();
    for (const auto& r : s.reports) reps.push_back(status_json(r));
    j["reports"] = reps;
    return j;
}

Json to_json(const GalochkinTrace& t) {
    Json j;
    j["T"] = t.T.to_string("z");
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.s.size(); ++i) {
        Json x;
        x["s"] = t.s[i];
        x["q"] = t.q[i].get_str();
        x["log_q_over_s"] = decimal(t.log_q_over_s[i]);
        rows.push_back(x);
    }
    j["trace"] = rows;
    return j;
}

Json to_json(const SizeEstimate& e) {
    Json j;
    j["s"] = e.s;
    j["P"] = e.P;
    j["sigma_hat"] = decimal(e.sigma_hat);
    j["terms"] = log_terms(e.terms);
    return j;
}

Json to_json(const SizeRadiusReport& r) {
    Json j;
    j["n"] = r.n;
    j["s"] = r.s;
    j["P"] = r.P;
    j["slack"] = decimal(r.slack);
    j["log_coefficient"] = decimal(r.log_coefficient);
    j["sigma_hat"] = decimal(r.sigma_hat);
    j["rho_hat"] = decimal(r.rho_hat);
    j["rho_hat_corrected"] = decimal(r.rho_hat_corrected);
    j["lower_ok"] = r.lower_ok;
    j["upper_ok"] = r.upper_ok;
    j["sandwich_ok"] = r.sandwich_ok;
    Json bad = Json::array();
    for (auto p : r.bad_primes) bad.push_back(p);
    j["bad_primes"] = bad;
    j["h_terms"] = log_terms(r.h_terms);
    j["rho_terms"] = log_terms(r.rho_terms);
    j["rho_corrected_terms"] = log_terms(r.rho_corrected_terms);
    return j;
}

Json to_json(const PadeApproximant& a, const ResidualOrder& r) {
    Json j;
    j["Q"] = a.Q.to_string("z");
    j["P"] = poly_list(a.P, "z");
    j["scale"] = a.scale.get_str();
    j["equations"] = a.equations;
    j["unknowns"] = a.unknowns;
    j["kernel_dimension"] = a.kernel_dimension;
    j["log_siegel_bound"] = decimal(a.log_siegel_bound);
    j["log_height_Q"] = decimal(a.log_height_Q);
    j["residual_order"] = r.order;
    j["residual_reached_horizon"] = r.reached_horizon;
    return j;
}

Json to_json(const PadeSystem& s) {
    Json j;
    j["N"] = s.N;
    j["M"] = s.M;
    j["approximant"] = to_json(s.approx, s.residual);
    j["T"] = s.T.to_string("z");
    j["t"] = s.t;
    Json tower = Json::array();
    for (const auto& el : s.tower) tower.push_back(poly_list(el, "z"));
    j["tower"] = tower;
    j["degree_bound_ok"] = s.degree_bound_ok;
    j["delta"] = s.shidlovskii.delta.to_string("z");
    j["delta_vanishes"] = s.shidlovskii.delta.is_zero();
    return j;
}

Json to_json(const CatalogEntry& e) {
    Json j;
    j["id"] = e.id;
    j["description"] = e.description;
    j["operator"] = e.op.to_string();
    j["basis"] = e.op.basis() == Basis::D ? "D" : "theta";
    j["order"] = e.op.order();
    j["system_is_companion"] = e.system_is_companion;
    j["system"] = to_json(e.system);
    if (e.series) {
        j["series_rule"] = e.series->rule();
        Json c = Json::array();
        for (const auto& x : e.series->coefficients(8)) c.push_back(x.get_str());
        j["series_head"] = c;
    } else {
        j["series_rule"] = nullptr;
        j["series_head"] = Json::array();
    }
    return j;
}

std::vector<TruncatedSeries> series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("trunc_order") || !j.contains("components"))
        throw std::invalid_argument("series file needs trunc_order and components");
    const int N = j.at("trunc_order").get<int>();
    if (N < 1) throw std::invalid_argument("trunc_order must be positive");
    std::vector<TruncatedSeries> out;
    for (const auto& comp : j.at("components")) {
        if (!comp.is_array() || static_cast<int>(comp.size()) != N)
            throw std::invalid_argument("each component needs trunc_order coefficient pairs");
        TruncatedSeries s;
        for (const auto& pair : comp) {
            if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("coefficients are [num, den] pairs");
            BigInt num(pair[0].get<std::string>()), den(pair[1].get<std::string>());
            if (den == 0) throw std::invalid_argument("zero denominator in series file");
            BigRat q(num, den);
            q.canonicalize();
            s.coeffs.push_back(q);
        }
        out.push_back(std::move(s));
    }
    if (out.empty()) throw std::invalid_argument("series file has no components");
    return out;
}

namespace {

void render(const Json& j, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return std::string("-");
        return v.dump();
    };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (v.is_structured() && !v.empty()) {
                bool flat = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
                if (flat) {
                    os << pad << it.key() << ":";
                    for (const auto& x : v) os << " " << scalar(x);
                    os << "\n";
                } else {
                    os << pad << it.key() << ":\n";
                    render(v, indent + 2, os);
                }
            } else {
                os << pad << it.key() << ": " << (v.is_structured() ? std::string("(none)") : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_primitive()) {
                os << pad << "- " << scalar(v) << "\n";
            } else {
                os << pad << "-\n";
                render(v, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, 0, os);
    return os.str();
}

}  // namespace gop::cli
