#include "csforge.h"

#include "core/assemble.hpp"
#include "core/emit.hpp"
#include "core/fixture.hpp"
#include "core/tables.hpp"
#include "core/version.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

struct csf_potential {
    csforge::OutputDocument doc;
    std::vector<std::pair<std::string, std::string>> cachedTerms; ///< (coeff, word)
    std::string residualText;
};

namespace {

char* dupString(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void rebuildTerms(csf_potential& p)
{
    p.cachedTerms.clear();
    for (const auto& [word, coeff] : p.doc.terms)
        p.cachedTerms.emplace_back(csforge::toString(coeff), word.str());
}

bool validDimension(int dimension)
{
    return dimension >= 4 && dimension <= 62 && dimension % 2 == 0;
}

/// Copy a string to the caller, translating allocation failure to a status.
csf_status yieldString(const std::string& s, char** out)
{
    if (out == nullptr)
        return CSF_ERROR_INVALID_ARGUMENT;
    *out = dupString(s);
    return *out != nullptr ? CSF_OK : CSF_ERROR_COMPUTE;
}

} // namespace

extern "C" {

const char* csf_version(void)
{
    return csforge::kToolVersion;
}

const char* csf_status_message(csf_status status)
{
    switch (status) {
    case CSF_OK:
        return "ok";
    case CSF_ERROR_INVALID_ARGUMENT:
        return "invalid argument";
    case CSF_ERROR_PARSE:
        return "parse error";
    case CSF_ERROR_COMPUTE:
        return "computation failed";
    }
    return "unknown status";
}

csf_status csf_compute(int dimension, int jobs, csf_potential** out)
{
    if (out == nullptr)
        return CSF_ERROR_INVALID_ARGUMENT;
    *out = nullptr;
    if (!validDimension(dimension))
        return CSF_ERROR_INVALID_ARGUMENT;
    try {
        const csforge::CsPotential pot = csforge::assemble(dimension / 2, jobs);
        auto p = std::make_unique<csf_potential>();
        p->doc = csforge::documentFor(pot, std::nullopt);
        rebuildTerms(*p);
        *out = p.release();
        return CSF_OK;
    } catch (...) {
        return CSF_ERROR_COMPUTE;
    }
}

csf_status csf_potential_parse_json(const char* json, csf_potential** out,
                                    char** error_message)
{
    if (error_message != nullptr)
        *error_message = nullptr;
    if (json == nullptr || out == nullptr)
        return CSF_ERROR_INVALID_ARGUMENT;
    *out = nullptr;
    try {
        auto p = std::make_unique<csf_potential>();
        p->doc = csforge::parseJson(json);
        rebuildTerms(*p);
        *out = p.release();
        return CSF_OK;
    } catch (const csforge::ParseError& e) {
        if (error_message != nullptr)
            *error_message = dupString(e.what());
        return CSF_ERROR_PARSE;
    } catch (...) {
        return CSF_ERROR_COMPUTE;
    }
}

void csf_potential_free(csf_potential* p)
{
    delete p;
}

int csf_potential_dimension(const csf_potential* p)
{
    return p != nullptr ? p->doc.dimension : 0;
}

size_t csf_potential_term_count(const csf_potential* p)
{
    return p != nullptr ? p->cachedTerms.size() : 0;
}

csf_status csf_potential_term(const csf_potential* p, size_t index,
                              const char** coeff, const char** word)
{
    if (p == nullptr || index >= p->cachedTerms.size())
        return CSF_ERROR_INVALID_ARGUMENT;
    if (coeff != nullptr)
        *coeff = p->cachedTerms[index].first.c_str();
    if (word != nullptr)
        *word = p->cachedTerms[index].second.c_str();
    return CSF_OK;
}

csf_status csf_potential_render(const csf_potential* p, csf_format format, char** out)
{
    if (p == nullptr)
        return CSF_ERROR_INVALID_ARGUMENT;
    try {
        switch (format) {
        case CSF_FORMAT_TEXT:
            return yieldString(csforge::renderText(p->doc.terms), out);
        case CSF_FORMAT_LATEX:
            return yieldString(csforge::renderLatex(p->doc.terms), out);
        case CSF_FORMAT_JSON:
            return yieldString(csforge::renderJson(p->doc), out);
        }
        return CSF_ERROR_INVALID_ARGUMENT;
    } catch (...) {
        return CSF_ERROR_COMPUTE;
    }
}

csf_status csf_potential_verify(csf_potential* p, int* passed)
{
    if (p == nullptr || passed == nullptr)
        return CSF_ERROR_INVALID_ARGUMENT;
    try {
        const csforge::VerifyResult res =
            csforge::verify(p->doc.dimension / 2, p->doc.terms);
        p->doc.verified = res.pass;
        p->residualText = res.pass ? std::string() : res.residual.str();
        *passed = res.pass ? 1 : 0;
        return CSF_OK;
    } catch (...) {
        return CSF_ERROR_COMPUTE;
    }
}

csf_status csf_potential_residual(const csf_potential* p, char** out)
{
    if (p == nullptr)
        return CSF_ERROR_INVALID_ARGUMENT;
    return yieldString(p->residualText, out);
}

csf_status csf_render_table(csf_table table, int dim_max, char** out)
{
    try {
        switch (table) {
        case CSF_TABLE_COEFFS:
            return yieldString(csforge::renderCoeffTable(dim_max), out);
        case CSF_TABLE_MCOUNTS:
            return yieldString(csforge::renderMcountsTable(dim_max), out);
        case CSF_TABLE_EQCOUNTS:
            return yieldString(csforge::renderEqcountsTable(dim_max), out);
        }
        return CSF_ERROR_INVALID_ARGUMENT;
    } catch (const std::invalid_argument&) {
        return CSF_ERROR_INVALID_ARGUMENT;
    } catch (...) {
        return CSF_ERROR_COMPUTE;
    }
}

csf_status csf_render_fixture(char** out)
{
    try {
        return yieldString(csforge::renderFixtureReport(), out);
    } catch (...) {
        return CSF_ERROR_COMPUTE;
    }
}

void csf_string_free(char* s)
{
    std::free(s);
}

} // extern "C"
