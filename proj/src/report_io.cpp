#include "specpol/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace specpol {

Json rational_json(const Rational& r) {
    return Json::array({r.num().get_str(), r.den().get_str()});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw std::invalid_argument("rational JSON must be [\"num\", \"den\"]");
    return Rational::from_string(j[0].get<std::string>() + "/" + j[1].get<std::string>());
}

Json poly_json(const Poly& p) {
    Json coeffs = Json::array();
    if (p.is_zero()) {
        coeffs.push_back(rational_json(Rational(0)));
    } else {
        for (const Rational& c : p.coeffs()) coeffs.push_back(rational_json(c));
    }
    Json j;
    j["variable"] = "x";
    j["coeffs"] = std::move(coeffs);
    return j;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("variable") || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial JSON needs variable and coeffs");
    if (j["variable"] != "x")
        throw std::invalid_argument("polynomial JSON variable must be \"x\"");
    if (!j["coeffs"].is_array() || j["coeffs"].empty())
        throw std::invalid_argument("polynomial JSON coeffs must be a nonempty array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const Json& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

Json ratfun_json(const RationalFunction& y) {
    Json j;
    j["num"] = poly_json(y.num());
    j["den"] = poly_json(y.den());
    return j;
}

namespace {

Json step_failure_json(const StepFailure& fail) {
    Json j;
    j["n"] = fail.n;
    j["remainder"] = poly_json(fail.remainder);
    j["divisor"] = poly_json(fail.divisor);
    return j;
}

}  // namespace

Json sequence_json(const SequenceReport& report) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        Json e;
        e["n"] = i;
        if (report.degrees[i])
            e["degree"] = *report.degrees[i];
        else
            e["degree"] = nullptr;
        e["coprime_with_next"] = i < report.coprime_with_next.size()
                                     ? Json(static_cast<bool>(report.coprime_with_next[i]))
                                     : Json(nullptr);
        e["squarefree"] = static_cast<bool>(report.squarefree[i]);
        if (i < report.reconstruction.size() + 2 && i >= 2)
            e["reconstruction"] = static_cast<bool>(report.reconstruction[i - 2]);
        e["poly"] = poly_json(report.entries[i]);
        entries.push_back(std::move(e));
    }
    Json j;
    j["entries"] = std::move(entries);
    j["clean"] = report.clean();
    j["failure"] = report.failure ? step_failure_json(*report.failure) : Json(nullptr);
    return j;
}

Json somos_json(const SomosSpec& spec, const std::vector<Rational>& terms) {
    Json jterms = Json::array();
    bool all_integer = true;
    Json first_noninteger = nullptr;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        jterms.push_back(rational_json(terms[i]));
        if (all_integer && !terms[i].is_integer()) {
            all_integer = false;
            Json f;
            f["index"] = i;
            f["value"] = rational_json(terms[i]);
            first_noninteger = std::move(f);
        }
    }
    Json j;
    j["k"] = spec.k;
    j["horizon"] = spec.horizon;
    j["terms"] = std::move(jterms);
    j["all_integer"] = all_integer;
    j["first_noninteger"] = std::move(first_noninteger);
    return j;
}

Json residual_json(const Poly& f, const Poly& g, const ResidualReport& report) {
    Json j;
    j["f"] = poly_json(f);
    j["g"] = poly_json(g);
    j["beta"] = rational_json(report.beta);
    j["satisfied"] = report.satisfied;
    j["residual"] = poly_json(report.residual);
    return j;
}

Json riccati_json(const Poly& f, const Rational& beta, const RiccatiSolutionSet& set) {
    Json solutions = Json::array();
    for (const Poly& u : set.solutions) {
        Json s;
        s["u"] = poly_json(u);
        s["g"] = poly_json(g_from_u(u, f));
        solutions.push_back(std::move(s));
    }
    Json contradictions = Json::array();
    for (const ContradictionTrace& t : set.contradictions) {
        Json c;
        c["branch"] = t.branch;
        c["coefficient_index"] = t.coefficient_index;
        contradictions.push_back(std::move(c));
    }
    Json j;
    j["f"] = poly_json(f);
    j["beta"] = rational_json(beta);
    j["solutions"] = std::move(solutions);
    j["contradictions"] = std::move(contradictions);
    return j;
}

Json search_json(const SearchReport& report) {
    Json degrees = Json::array();
    for (const SearchDegreeReport& d : report.degrees) {
        Json pairs = Json::array();
        for (const auto& [f, g] : d.pairs) {
            Json p;
            p["f"] = poly_json(f);
            p["g"] = poly_json(g);
            pairs.push_back(std::move(p));
        }
        Json jd;
        jd["degree"] = d.degree;
        jd["random_candidates"] = d.random_candidates;
        jd["structured_candidates"] = d.structured_candidates;
        jd["with_solutions"] = d.with_solutions;
        jd["contradictions"] = d.contradictions;
        jd["pairs"] = std::move(pairs);
        degrees.push_back(std::move(jd));
    }
    Json j;
    j["deg_min"] = report.deg_min;
    j["deg_max"] = report.deg_max;
    j["trials"] = report.trials;
    j["rng_seed"] = report.rng_seed;
    j["total_with_solutions"] = report.total_with_solutions();
    j["degrees"] = std::move(degrees);
    return j;
}

Json ode_json(const OdeCheck& check) {
    Json j;
    j["n"] = check.n;
    j["c"] = rational_json(check.c);
    j["a"] = rational_json(check.a);
    j["b"] = rational_json(check.b);
    j["y"] = ratfun_json(check.y);
    j["residual"] = ratfun_json(check.residual);
    j["pass"] = check.pass;
    return j;
}

std::string sequence_csv(const SequenceReport& report) {
    std::ostringstream os;
    os << "n,degree,coprime_with_next,squarefree,entry\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        os << i << ',';
        if (report.degrees[i]) os << *report.degrees[i];
        os << ',';
        if (i < report.coprime_with_next.size())
            os << (report.coprime_with_next[i] ? "true" : "false");
        os << ',' << (report.squarefree[i] ? "true" : "false") << ','
           << report.entries[i].str() << '\n';
    }
    return os.str();
}

std::string somos_csv(const std::vector<Rational>& terms) {
    std::ostringstream os;
    os << "index,value\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
        os << i << ',' << terms[i].str() << '\n';
    return os.str();
}

namespace {

void latex_coeff(std::ostringstream& os, const Rational& c) {
    if (c.is_integer()) {
        os << c.num().get_str();
    } else {
        os << "\\frac{" << c.num().get_str() << "}{" << c.den().get_str() << "}";
    }
}

}  // namespace

std::string poly_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = *p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.is_negative() ? " - " : " + ");
        else if (c.is_negative()) os << '-';
        first = false;
        const Rational a = c.abs();
        if (k == 0) {
            latex_coeff(os, a);
            continue;
        }
        if (!a.is_one()) latex_coeff(os, a);
        os << 'x';
        if (k > 1) os << "^{" << k << "}";
    }
    return os.str();
}

std::string sequence_latex(const SequenceReport& report) {
    std::ostringstream os;
    os << "\\begin{aligned}\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i)
        os << "P_{" << i << "} &= " << poly_latex(report.entries[i]) << " \\\\\n";
    os << "\\end{aligned}\n";
    return os.str();
}

}  // namespace specpol
