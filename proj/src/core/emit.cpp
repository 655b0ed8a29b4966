#include "core/emit.hpp"

#include "core/version.hpp"

#include <cassert>
#include <cstdio>

namespace csforge {
namespace {

// Every potential term has odd degree, hence at least one W factor; rotate
// a W to the front (sign-free at odd degree) minimizing the remainder's
// value, and present the term as that leading W wedged with the remainder.
Word presentationRemainder(const Word& w)
{
    assert(w.totalDegree() % 2 == 1);
    Word best;
    bool have = false;
    for (int r = 0; r < w.length(); ++r) {
        if (w.factor(r) != Factor::W)
            continue;
        Word rot = w.rotated(r);
        if (!have || rot.bits() < best.bits()) {
            best = rot;
            have = true;
        }
    }
    assert(have);
    // Drop the leading W.
    if (best.length() == 1)
        return Word(); // bare w term: empty remainder
    std::string s = best.str();
    return Word::fromString(s.substr(1));
}

struct Tokens {
    const char* dSingle;
    const char* dPower; // printf-style with %d
    const char* wSingle;
    const char* wPower;
    const char* wedge;
    const char* fracOpen; // coefficient p/q rendering
    const char* fracMid;
    const char* fracClose;
    const char* coeffSep; // between a coefficient and its term
};

std::string renderRuns(const Word& w, const Tokens& t)
{
    if (w.empty())
        return "";
    std::string out;
    bool first = true;
    int i = 0;
    while (i < w.length()) {
        Factor f = w.factor(i);
        int run = 1;
        while (i + run < w.length() && w.factor(i + run) == f)
            ++run;
        if (!first)
            out += t.wedge;
        char buf[64];
        if (f == Factor::D) {
            if (run == 1)
                out += t.dSingle;
            else {
                std::snprintf(buf, sizeof buf, t.dPower, run);
                out += buf;
            }
        } else {
            if (run == 1)
                out += t.wSingle;
            else {
                std::snprintf(buf, sizeof buf, t.wPower, run);
                out += buf;
            }
        }
        first = false;
        i += run;
    }
    return out;
}

std::string renderCoeff(const Rational& mag, const Tokens& t)
{
    if (mag == 1)
        return "";
    if (mag.get_den() == 1)
        return mag.get_num().get_str() + t.coeffSep;
    return t.fracOpen + mag.get_num().get_str() + t.fracMid + mag.get_den().get_str() +
           t.fracClose + t.coeffSep;
}

std::string renderFactored(const FormSum& sum, const Tokens& t, const std::string& open,
                           const std::string& close, const std::string& omega)
{
    if (sum.empty())
        return "0";
    std::string inner;
    bool first = true;
    for (const auto& [w, c] : sum) {
        if (first) {
            if (c < 0)
                inner += "-";
        } else {
            inner += (c < 0) ? " - " : " + ";
        }
        first = false;
        inner += renderCoeff(abs(c), t);
        std::string runs = renderRuns(presentationRemainder(w), t);
        inner += runs.empty() ? "1" : runs;
    }
    return omega + open + inner + close;
}

} // namespace

std::string renderText(const FormSum& sum)
{
    static const Tokens t{"(dw)", "(dw)^%d", "w", "w^%d", " ", "", "/", "", " "};
    return renderFactored(sum, t, "( ", " )", "w ");
}

std::string renderLatex(const FormSum& sum)
{
    static const Tokens t{"(\\mathrm{d}\\omega)", "(\\mathrm{d}\\omega)^%d",
                          "\\omega",              "\\omega^%d",
                          "\\wedge",              "\\tfrac{",
                          "}{",                   "}",
                          ""};
    return renderFactored(sum, t, "\\big(", "\\big)", "\\omega\\wedge");
}

OutputDocument documentFor(const CsPotential& pot, std::optional<bool> verified)
{
    OutputDocument doc;
    doc.dimension = 2 * pot.n;
    doc.terms = pot.terms;
    doc.verified = verified.value_or(false);
    doc.toolVersion = kToolVersion;
    for (const auto& sol : pot.partitions) {
        nlohmann::ordered_json p;
        p["a"] = sol.a;
        p["k"] = toString(sol.k);
        auto kap = nlohmann::ordered_json::array();
        for (const auto& c : sol.kappa)
            kap.push_back(toString(c));
        p["kappa"] = kap;
        p["rawEquations"] = sol.rawCount;
        p["distinctDterms"] = sol.distinctDterms;
        p["rankStacked"] = sol.rankStacked;
        p["independent"] = sol.independent;
        auto rels = nlohmann::ordered_json::array();
        for (const auto& rel : sol.relations) {
            auto one = nlohmann::ordered_json::array();
            for (const auto& [w, c] : rel)
                one.push_back({{"coeff", toString(c)}, {"word", w.str()}});
            rels.push_back(one);
        }
        p["relations"] = rels;
        doc.provenance.push_back(p);
    }
    return doc;
}

std::string renderJson(const OutputDocument& doc)
{
    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    j["dimension"] = doc.dimension;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : doc.terms)
        terms.push_back({{"coeff", toString(c)}, {"word", w.str()}});
    j["terms"] = terms;
    j["verified"] = doc.verified;
    j["provenance"] = doc.provenance;
    j["toolVersion"] = doc.toolVersion;
    return j.dump(2);
}

OutputDocument parseJson(const std::string& text)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("top level must be an object");
    if (j.contains("schemaVersion") && j["schemaVersion"] != 1)
        throw ParseError("unsupported schemaVersion");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw ParseError("missing integer 'dimension'");

    OutputDocument doc;
    doc.dimension = j["dimension"].get<int>();
    if (doc.dimension < 4 || doc.dimension % 2 != 0)
        throw ParseError("'dimension' must be an even integer >= 4");
    if (doc.dimension > Word::kMaxFactors)
        throw ParseError("'dimension' exceeds word capacity (62)");

    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("missing array 'terms'");
    std::size_t idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string at = "terms[" + std::to_string(idx) + "]";
        if (!t.is_object() || !t.contains("coeff") || !t.contains("word") ||
            !t["coeff"].is_string() || !t["word"].is_string())
            throw ParseError(at + ": expected {\"coeff\": string, \"word\": string}");
        Rational c;
        Word w;
        try {
            c = rationalFromString(t["coeff"].get<std::string>());
            w = Word::fromString(t["word"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(at + ": " + e.what());
        }
        if (w.totalDegree() != doc.dimension - 1)
            throw ParseError(at + ": word degree " + std::to_string(w.totalDegree()) +
                             " does not match dimension - 1");
        Canonical canon = canonicalize(w);
        if (!canon.vanishes())
            doc.terms.add(c * canon.sign, canon.word);
        ++idx;
    }

    doc.verified = j.contains("verified") && j["verified"].is_boolean() &&
                   j["verified"].get<bool>();
    if (j.contains("provenance"))
        doc.provenance = j["provenance"];
    doc.toolVersion =
        j.contains("toolVersion") && j["toolVersion"].is_string()
            ? j["toolVersion"].get<std::string>()
            : std::string(kToolVersion);
    return doc;
}

} // namespace csforge
