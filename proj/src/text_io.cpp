#include "frieze/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Split a sum into signed terms; '+'/'-' inside parentheses do not split.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && depth == 0 && i > 0 && s[i - 1] != '*' && s[i - 1] != '/' &&
            s[i - 1] != '+' && s[i - 1] != '-') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

Rat parse_signed_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::string t = s;
    bool neg = false;
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        if (t[0] == '-') neg = !neg;
        t.erase(t.begin());
    }
    if (t.empty() || t.find_first_not_of("0123456789/") != std::string::npos)
        throw std::invalid_argument("bad rational: '" + s + "'");
    Rat q(t);
    q.canonicalize();
    return neg ? Rat(-q) : q;
}

}  // namespace

Rat parse_rat(const std::string& s) { return parse_signed_rat(strip_spaces(s)); }

QuadRat parse_quadrat(const std::string& raw, FieldTag tag) {
    std::string s = strip_spaces(raw);
    if (s.empty()) throw std::invalid_argument("parse_quadrat: empty input");
    QuadRat acc = QuadRat::zero(tag);
    for (std::string term : split_terms(s)) {
        bool neg = false;
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            if (term[0] == '-') neg = !neg;
            term.erase(term.begin());
        }
        if (term.empty()) throw std::invalid_argument("parse_quadrat: dangling sign");

        Rat coeff(1);
        std::string sym = term;
        auto star = term.find('*');
        if (star != std::string::npos && term.compare(0, 5, "sqrt(") != 0) {
            coeff = parse_signed_rat(term.substr(0, star));
            sym = term.substr(star + 1);
        }

        QuadRat base = QuadRat::one(tag);
        if (sym == "w") {
            base = QuadRat::omega(tag);
        } else if (sym == "wbar") {
            base = QuadRat::omega(tag).conj();
        } else if (sym.compare(0, 5, "sqrt(") == 0 && sym.back() == ')') {
            long dd = std::stol(sym.substr(5, sym.size() - 6));
            if (dd != tag.d())
                throw std::invalid_argument("parse_quadrat: sqrt argument does not match d");
            base = QuadRat::sqrt_d(tag);
        } else {
            coeff = parse_signed_rat(sym);
        }
        QuadRat piece = QuadRat::from_rational(tag, coeff) * base;
        acc = neg ? acc - piece : acc + piece;
    }
    return acc;
}

QuadInt parse_quadint(const std::string& s, FieldTag tag) {
    auto z = is_integral(parse_quadrat(s, tag));
    if (!z) throw std::invalid_argument("parse_quadint: not integral: '" + s + "'");
    return *z;
}

QuiddityCycle parse_cycle(const std::string& s, FieldTag tag) {
    std::vector<QuadRat> entries;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) entries.push_back(parse_quadrat(cur, tag));
    if (entries.empty()) throw std::invalid_argument("parse_cycle: no entries");
    return QuiddityCycle(tag, std::move(entries));
}

Json json_of(const QuadInt& z) { return Json::array({to_decimal(z.a()), to_decimal(z.b())}); }
Json json_of(const QuadRat& z) { return Json::array({to_decimal(z.x()), to_decimal(z.y())}); }

QuadInt quadint_from_json(const Json& j, FieldTag tag) {
    return QuadInt(tag, Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()));
}

QuadRat quadrat_from_json(const Json& j, FieldTag tag) {
    return QuadRat(tag, parse_rat(j.at(0).get<std::string>()), parse_rat(j.at(1).get<std::string>()));
}

Json json_of_cycle(const QuiddityCycle& cycle) {
    bool integral = std::all_of(cycle.entries.begin(), cycle.entries.end(),
                                [](const QuadRat& z) { return is_integral(z).has_value(); });
    Json entries = Json::array();
    for (const auto& e : cycle.entries)
        entries.push_back(integral ? json_of(*is_integral(e)) : json_of(e));
    return Json{{"d", cycle.tag.d()}, {"basis", integral ? "omega" : "sqrt"}, {"entries", entries}};
}

QuiddityCycle cycle_from_json(const Json& j) {
    FieldTag tag(j.at("d").get<long>());
    bool omega_basis = j.at("basis").get<std::string>() == "omega";
    std::vector<QuadRat> entries;
    for (const auto& e : j.at("entries"))
        entries.push_back(omega_basis ? quadint_from_json(e, tag).embed() : quadrat_from_json(e, tag));
    return QuiddityCycle(tag, std::move(entries));
}

Json json_of_frieze(const FriezePattern& f, const Classification& cls) {
    QuiddityCycle cycle = extract_quiddity(f);
    Json j = json_of_cycle(cycle);
    Json out{{"ring", f.ring().is_integers() ? Json("Z") : Json(f.tag().d())},
             {"d", f.tag().d()},
             {"height", f.height()},
             {"basis", j.at("basis")},
             {"quiddity", j.at("entries")},
             {"class", class_name(cls.cls)}};
    if (cls.untwist_parity) out["untwist_parity"] = *cls.untwist_parity;
    return out;
}

std::pair<FriezePattern, Classification> frieze_from_json(const Json& j) {
    FieldTag tag(j.at("d").get<long>());
    Ring ring = j.at("ring").is_string() ? Ring::integers() : Ring::quadratic(tag);
    Json jc{{"d", j.at("d")}, {"basis", j.at("basis")}, {"entries", j.at("quiddity")}};
    QuiddityCycle cycle = cycle_from_json(jc);
    FriezePattern f = from_quiddity(cycle, ring);
    Classification cls = classify(f);
    if (class_name(cls.cls) != j.at("class").get<std::string>())
        throw std::invalid_argument("frieze_from_json: recorded class mismatch");
    return {std::move(f), cls};
}

Json json_of_census(const CensusResult& census) {
    Json counts = Json::object();
    for (const auto& rec : census.friezes) {
        std::string k = class_name(rec.cls.cls);
        counts[k] = counts.value(k, 0) + 1;
    }
    Json friezes = Json::array();
    for (const auto& rec : census.friezes) friezes.push_back(json_of_frieze(rec.pattern, rec.cls));
    return Json{{"ring", census.ring.is_integers() ? Json("Z") : Json(census.ring.tag().d())},
                {"height", census.height},
                {"bound_sq", to_decimal(census.bound_sq)},
                {"positivity", census.positivity == Positivity::PositiveOnly ? "positive" : "all"},
                {"complete", census.complete},
                {"completeness_note", census.completeness_note},
                {"counts", counts},
                {"friezes", friezes}};
}

Json json_of_trace(const ReductionTrace& trace) {
    auto cycle_strings = [](const QuiddityCycle& c) {
        Json a = Json::array();
        for (const auto& e : c.entries) a.push_back(display_entry(e));
        return a;
    };
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        steps.push_back(Json{{"rule", rule_name(s.rule)},
                             {"position", s.position},
                             {"sign_flip", s.sign_flip},
                             {"before", cycle_strings(s.before)},
                             {"after", cycle_strings(s.after)}});
    }
    return Json{{"d", trace.initial.tag.d()},
                {"status", trace.terminated() ? "terminal" : "stuck"},
                {"initial", cycle_strings(trace.initial)},
                {"terminal", cycle_strings(trace.terminal)},
                {"sign_flips", trace.sign_flips()},
                {"steps", steps}};
}

Json json_of_certificate(const UnitCertificate& cert) {
    auto coeffs = [](const std::vector<Int>& cs) {
        Json a = Json::array();
        for (const auto& c : cs) a.push_back(to_decimal(c));
        return a;
    };
    return Json{{"d", cert.alpha.tag().d()},
                {"alpha", json_of(cert.alpha)},
                {"h", cert.h},
                {"gamma1", json_of(cert.gamma1)},
                {"gamma2", json_of(cert.gamma2)},
                {"k", cert.k},
                {"unit", json_of(cert.unit)},
                {"unit_inverse", json_of(cert.unit_inverse)},
                {"unit_coeffs", coeffs(cert.unit_coeffs)},
                {"inverse_coeffs", coeffs(cert.inverse_coeffs)},
                {"unit_norm", to_decimal(cert.unit_norm)}};
}

Json json_of_unit_result(const UnitSearchResult& result) {
    switch (result.status) {
        case UnitSearchResult::Status::Found: {
            Json j = json_of_certificate(*result.certificate);
            j["status"] = "found";
            return j;
        }
        case UnitSearchResult::Status::NoDenominator:
            return Json{{"status", "no-denominator"}, {"detail", result.detail}};
        case UnitSearchResult::Status::BudgetExceeded:
            return Json{{"status", "budget-exceeded"}, {"detail", result.detail}};
    }
    return Json();
}

std::string census_csv(const CensusResult& census) {
    std::ostringstream os;
    os << "d,height,quiddity,class\n";
    for (const auto& rec : census.friezes) {
        QuiddityCycle cycle = extract_quiddity(rec.pattern);
        os << census.ring.label() << "," << census.height << ",";
        for (std::size_t i = 0; i < cycle.entries.size(); ++i) {
            if (i) os << " ";
            os << display_entry(cycle.entries[i]);
        }
        os << "," << class_name(rec.cls.cls) << "\n";
    }
    return os.str();
}

}  // namespace frieze
