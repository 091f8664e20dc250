#include "srg/report.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace srg::report {
namespace {

Json exact_json(const QuadNum& x) {
    Json j;
    j["exact"] = x.to_string();
    j["float"] = x.to_double();
    return j;
}

Json params_json(const SrgParams& params) {
    Json j;
    j["n"] = params.n;
    j["p"] = params.p;
    j["a"] = params.a;
    j["c"] = params.c;
    return j;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string overall_label(const FeasibilityVerdict& verdict) {
    return verdict.feasible ? "feasible-so-far" : "infeasible";
}

Json verdict_json(const FeasibilityVerdict& verdict) {
    Json j;
    j["params"] = params_json(verdict.params);
    if (verdict.valid) {
        const Spectrum sp = spectrum(verdict.params);
        j["discriminant"] = sp.d;
        j["spectrum"] = Json{{"p", verdict.params.p}, {"r", exact_json(sp.r)}, {"s", exact_json(sp.s)}};
    } else {
        j["discriminant"] = nullptr;
        j["spectrum"] = nullptr;
    }
    Json conditions = Json::array();
    for (const ConditionResult& r : verdict.results) {
        Json c;
        c["id"] = r.id;
        c["value_exact"] = r.value.to_string();
        c["value_float"] = r.value.to_double();
        c["satisfied"] = r.satisfied;
        c["source"] = to_string(r.source);
        if (!r.note.empty()) c["note"] = r.note;
        conditions.push_back(std::move(c));
    }
    j["conditions"] = std::move(conditions);
    j["overall"] = overall_label(verdict);
    j["first_failure"] = verdict.first_failure ? Json(*verdict.first_failure) : Json(nullptr);
    return j;
}

std::string verdict_table(const FeasibilityVerdict& verdict) {
    std::ostringstream os;
    os << "params " << to_string(verdict.params);
    if (verdict.valid) {
        const Spectrum sp = spectrum(verdict.params);
        os << "  d=" << sp.d << "  r=" << sp.r << " (" << format_double(sp.r.to_double()) << ")"
           << "  s=" << sp.s << " (" << format_double(sp.s.to_double()) << ")";
    }
    os << '\n';
    std::size_t width = 2;
    for (const ConditionResult& r : verdict.results) width = std::max(width, r.id.size());
    for (const ConditionResult& r : verdict.results) {
        os << (r.satisfied ? "  ok   " : "  FAIL ") << std::left << std::setw(static_cast<int>(width)) << r.id
           << "  " << std::setw(16) << to_string(r.source) << "  " << r.value;
        if (!r.value.is_rational()) os << " (" << format_double(r.value.to_double()) << ")";
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << '\n';
    }
    os << "overall: " << overall_label(verdict);
    if (verdict.first_failure) os << "  first failure: " << *verdict.first_failure;
    os << '\n';
    return os.str();
}

Json krein_json(const SrgParams& params, const ProductSpec& spec, const KreinTriple& value) {
    Json j;
    j["params"] = params_json(params);
    j["discriminant"] = params.discriminant();
    j["spec"] = label(spec);
    j["convention"] = "unnormalized Jordan-frame coefficients";
    j["q"] = Json::array({exact_json(value.q1), exact_json(value.q2), exact_json(value.q3)});
    return j;
}

std::string krein_text(const SrgParams& params, const ProductSpec& spec, const KreinTriple& value) {
    std::ostringstream os;
    os << "params " << to_string(params) << "  d=" << params.discriminant() << "  spec " << label(spec)
       << "  (unnormalized Jordan-frame coefficients)\n";
    os << "q = " << value.q1 << ", " << value.q2 << ", " << value.q3 << '\n';
    for (int i = 1; i <= 3; ++i) {
        os << "q" << i << " = " << value[i] << "  ~ " << format_double(value[i].to_double()) << '\n';
    }
    return os.str();
}

Json abs_power_json(const SrgParams& params, const AbsPowerCoords& coords) {
    Json j;
    j["params"] = params_json(params);
    j["x"] = coords.x;
    j["basis"] = "I, A, E1";
    j["alpha"] = coords.alpha;
    j["beta"] = coords.beta;
    j["gamma"] = coords.gamma;
    return j;
}

Json suite_json(const oracle::SuiteReport& report) {
    Json j;
    j["graph"] = report.graph;
    j["params"] = params_json(report.params);
    Json checks = Json::array();
    for (const oracle::CheckResult& c : report.checks) {
        checks.push_back(Json{{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass();
    j["seconds"] = report.seconds;
    return j;
}

std::string suite_text(const oracle::SuiteReport& report) {
    std::ostringstream os;
    os << "graph " << report.graph << "  params " << to_string(report.params) << '\n';
    std::size_t width = 4;
    for (const oracle::CheckResult& c : report.checks) width = std::max(width, c.name.size());
    std::size_t failed = 0;
    for (const oracle::CheckResult& c : report.checks) {
        failed += !c.pass;
        os << (c.pass ? "  ok   " : "  FAIL ") << std::left << std::setw(static_cast<int>(width)) << c.name
           << "  residual " << std::scientific << std::setprecision(3) << c.residual << "  tol " << c.tol
           << std::defaultfloat << '\n';
    }
    os << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                       : std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " checks failed")
       << " in " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
    return os.str();
}

std::string csv_header() { return "n,p,a,c,d,r_float,s_float,verdict,first_failure"; }

std::string csv_row(const FeasibilityVerdict& verdict) {
    const SrgParams& q = verdict.params;
    std::ostringstream os;
    os << q.n << ',' << q.p << ',' << q.a << ',' << q.c << ',';
    if (verdict.valid) {
        const Spectrum sp = spectrum(q);
        os << sp.d << ',' << format_double(sp.r.to_double()) << ',' << format_double(sp.s.to_double());
    } else {
        os << ",,";
    }
    os << ',' << overall_label(verdict) << ',';
    // Condition ids may contain commas, so quote them.
    if (verdict.first_failure) os << '"' << *verdict.first_failure << '"';
    return os.str();
}

Json scan_row_json(const FeasibilityVerdict& verdict) {
    Json j;
    j["n"] = verdict.params.n;
    j["p"] = verdict.params.p;
    j["a"] = verdict.params.a;
    j["c"] = verdict.params.c;
    if (verdict.valid) {
        const Spectrum sp = spectrum(verdict.params);
        j["d"] = sp.d;
        j["r_float"] = sp.r.to_double();
        j["s_float"] = sp.s.to_double();
    } else {
        j["d"] = nullptr;
        j["r_float"] = nullptr;
        j["s_float"] = nullptr;
    }
    j["verdict"] = overall_label(verdict);
    j["first_failure"] = verdict.first_failure ? Json(*verdict.first_failure) : Json(nullptr);
    return j;
}

}  // namespace srg::report
