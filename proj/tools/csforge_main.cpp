// csforge command line tool: a thin shell over the shared library's C API.
// All mathematical output goes to stdout; diagnostics go to stderr. Exit
// codes: 0 success / verification pass, 1 verification failure, 2 usage or
// input errors.
#include "csforge.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { csf_string_free(value); }
};

struct PotentialGuard {
    csf_potential* value = nullptr;
    ~PotentialGuard() { csf_potential_free(value); }
};

int usageError(const std::string& message)
{
    std::cerr << "error: " << message << '\n';
    return 2;
}

int toolError(csf_status status)
{
    std::cerr << "error: " << csf_status_message(status) << '\n';
    return status == CSF_ERROR_INVALID_ARGUMENT ? 2 : 1;
}

/// Shared gate for --dim / --dim-max: even, within [minDim, 62], and beyond
/// 32 only when the caller opted in.
int checkDimension(int dim, int minDim, bool allowLarge, const std::string& label)
{
    if (dim % 2 != 0 || dim < minDim)
        return usageError(label + " must be even and at least " + std::to_string(minDim));
    if (dim > 62)
        return usageError(label + " exceeds the 62-factor word limit");
    if (dim > 32 && !allowLarge)
        return usageError(label + " above 32 requires --allow-large");
    return 0;
}

/// --jobs beats the CSFORGE_JOBS environment variable; 0 means "let the
/// library pick".
int resolveJobs(bool jobsGiven, int jobsFlag)
{
    if (jobsGiven)
        return jobsFlag;
    if (const char* env = std::getenv("CSFORGE_JOBS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0 && parsed <= 4096)
            return static_cast<int>(parsed);
        std::cerr << "warning: ignoring CSFORGE_JOBS value \"" << env << "\"\n";
    }
    return 0;
}

int runCompute(int dim, int jobs, const std::string& emit, bool doVerify, bool allowLarge)
{
    if (const int rc = checkDimension(dim, 4, allowLarge, "--dim"))
        return rc;
    PotentialGuard pot;
    csf_status st = csf_compute(dim, jobs, &pot.value);
    if (st != CSF_OK)
        return toolError(st);
    if (doVerify) {
        int passed = 0;
        st = csf_potential_verify(pot.value, &passed);
        if (st != CSF_OK)
            return toolError(st);
        if (passed == 0) {
            StringGuard residual;
            csf_potential_residual(pot.value, &residual.value);
            std::cerr << "error: verification failed, residual "
                      << (residual.value != nullptr ? residual.value : "?") << '\n';
            return 1;
        }
        std::cerr << "verified: d(potential) matches the density\n";
    }
    const csf_format format = emit == "latex"  ? CSF_FORMAT_LATEX
                              : emit == "json" ? CSF_FORMAT_JSON
                                               : CSF_FORMAT_TEXT;
    StringGuard text;
    st = csf_potential_render(pot.value, format, &text.value);
    if (st != CSF_OK)
        return toolError(st);
    std::cout << text.value << '\n';
    return 0;
}

int runTables(const std::string& which, int dimMax, bool allowLarge)
{
    const csf_table table = which == "coeffs"    ? CSF_TABLE_COEFFS
                            : which == "mcounts" ? CSF_TABLE_MCOUNTS
                                                 : CSF_TABLE_EQCOUNTS;
    const int minDim = table == CSF_TABLE_EQCOUNTS ? 14 : 4;
    if (const int rc = checkDimension(dimMax, minDim, allowLarge, "--dim-max"))
        return rc;
    StringGuard text;
    const csf_status st = csf_render_table(table, dimMax, &text.value);
    if (st != CSF_OK)
        return toolError(st);
    std::cout << text.value;
    return 0;
}

int runVerify(int dim, const std::string& file, int jobs, bool allowLarge)
{
    if (const int rc = checkDimension(dim, 4, allowLarge, "--dim"))
        return rc;
    PotentialGuard pot;
    if (file.empty()) {
        const csf_status st = csf_compute(dim, jobs, &pot.value);
        if (st != CSF_OK)
            return toolError(st);
    } else {
        std::ifstream in(file);
        if (!in)
            return usageError("cannot open " + file);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        StringGuard parseMessage;
        const csf_status st = csf_potential_parse_json(buffer.str().c_str(), &pot.value,
                                                       &parseMessage.value);
        if (st != CSF_OK) {
            std::cerr << "error: " << file << ": "
                      << (parseMessage.value != nullptr ? parseMessage.value
                                                        : csf_status_message(st))
                      << '\n';
            return 2;
        }
        const int fileDim = csf_potential_dimension(pot.value);
        if (fileDim != dim)
            return usageError(file + " holds dimension " + std::to_string(fileDim) +
                              ", but --dim is " + std::to_string(dim));
    }
    int passed = 0;
    const csf_status st = csf_potential_verify(pot.value, &passed);
    if (st != CSF_OK)
        return toolError(st);
    if (passed != 0) {
        std::cout << "pass\n";
        return 0;
    }
    std::cout << "fail\n";
    StringGuard residual;
    if (csf_potential_residual(pot.value, &residual.value) == CSF_OK &&
        residual.value != nullptr && *residual.value != '\0')
        std::cerr << "residual: " << residual.value << '\n';
    return 1;
}

int runFixture()
{
    StringGuard text;
    const csf_status st = csf_render_fixture(&text.value);
    if (st != CSF_OK)
        return toolError(st);
    std::cout << text.value;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chern-Simons potentials of Pontryagin densities, in exact arithmetic"};
    app.set_version_flag("--version", std::string(csf_version()));
    app.require_subcommand(1);

    int dim = 0;
    int dimMax = 0;
    int jobs = 0;
    bool verifyFlag = false;
    bool allowLarge = false;
    bool appendixA = false;
    std::string emit = "text";
    std::string which;
    std::string potentialFile;

    CLI::App* compute = app.add_subcommand("compute", "Compute the potential for one dimension");
    compute->add_option("--dim", dim, "Even spacetime dimension (>= 4)")->required();
    compute->add_option("--emit", emit, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    compute->add_flag("--verify", verifyFlag, "Re-derive the density from the result first");
    CLI::Option* computeJobs =
        compute->add_option("--jobs", jobs, "Worker threads (default: hardware)");
    compute->add_flag("--allow-large", allowLarge, "Permit dimensions above 32");

    CLI::App* tables = app.add_subcommand("tables", "Print a reference table");
    tables->add_option("--which", which, "Table to print")
        ->check(CLI::IsMember({"coeffs", "mcounts", "eqcounts"}))
        ->required();
    tables->add_option("--dim-max", dimMax, "Largest dimension to include")->required();
    tables->add_flag("--allow-large", allowLarge, "Permit dimensions above 32");

    CLI::App* verify = app.add_subcommand("verify", "Check a potential against its density");
    verify->add_option("--dim", dim, "Even spacetime dimension (>= 4)")->required();
    verify->add_option("--potential", potentialFile, "JSON document to check (default: recompute)");
    CLI::Option* verifyJobs =
        verify->add_option("--jobs", jobs, "Worker threads (default: hardware)");
    verify->add_flag("--allow-large", allowLarge, "Permit dimensions above 32");

    CLI::App* fixture = app.add_subcommand("fixture", "Replay the built-in worked example");
    fixture->add_flag("--appendix-a", appendixA, "Dimension-8 derivation, step by step")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (compute->parsed())
        return runCompute(dim, resolveJobs(computeJobs->count() > 0, jobs), emit, verifyFlag,
                          allowLarge);
    if (tables->parsed())
        return runTables(which, dimMax, allowLarge);
    if (verify->parsed())
        return runVerify(dim, potentialFile, resolveJobs(verifyJobs->count() > 0, jobs),
                         allowLarge);
    if (fixture->parsed())
        return runFixture();
    return 2;
}
