#include "core/tables.hpp"

#include "core/assemble.hpp"
#include "core/expansion.hpp"
#include "core/linalg.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace csforge {

namespace {

void requireEvenRange(int dimMax, int dimMin)
{
    if (dimMax % 2 != 0 || dimMax < dimMin)
        throw std::invalid_argument("dimension bound must be even and at least " +
                                    std::to_string(dimMin));
}

struct PartitionCounts {
    long classes = 0;
    long raw = 0;
    long kept = 0;
    long rankStacked = 0;
    long independent = 0;
};

PartitionCounts countPartition(const PartitionSet& set)
{
    PartitionSystem sys = buildSystem(set);
    PartitionCounts c;
    c.classes = static_cast<long>(set.classes.size());
    c.raw = sys.rawCount;
    c.kept = static_cast<long>(sys.equations.size());
    c.rankStacked = rank(stackedSystem(sys));
    c.independent = 2 * c.rankStacked - c.kept;
    return c;
}

} // namespace

std::string renderCoeffTable(int dimMax)
{
    requireEvenRange(dimMax, 4);
    std::ostringstream out;
    for (int dim = 4; dim <= dimMax; dim += 2) {
        const auto cells = coefficientTable(dim / 2);
        out << std::setw(2) << dim << "  ";
        for (std::size_t a = 0; a < cells.size(); ++a) {
            if (a > 0)
                out << " | ";
            for (std::size_t i = 0; i < cells[a].size(); ++i) {
                if (i > 0)
                    out << ' ';
                out << cells[a][i];
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string renderMcountsTable(int dimMax)
{
    requireEvenRange(dimMax, 4);
    std::ostringstream out;
    for (int dim = 4; dim <= dimMax; dim += 2) {
        const int n = dim / 2;
        const auto sets = enumeratePartitionSets(n);
        for (int a = 1; a < n; ++a) {
            const PartitionCounts c = countPartition(sets[static_cast<std::size_t>(a)]);
            // m counts independent equations (rank of the stacked system);
            // rows whose distinct dterms still satisfy derivative-level
            // relations get the relation-adjusted count appended.
            std::ostringstream mcol;
            mcol << c.rankStacked;
            const long relations = c.kept - c.rankStacked;
            if (relations > 0)
                mcol << "->" << c.independent;
            out << std::setw(2) << dim << "  (" << a << ',' << (n - a) << ')'
                << std::setw(4) << c.classes << std::setw(6) << c.raw << std::setw(7)
                << mcol.str() << std::setw(6) << (c.raw - c.rankStacked);
            if (relations > 0)
                out << "   # " << relations << " relation" << (relations > 1 ? "s" : "")
                    << " among " << c.kept << " distinct dterms";
            out << '\n';
        }
    }
    return out.str();
}

std::string renderEqcountsTable(int dimMax)
{
    requireEvenRange(dimMax, 14);
    std::ostringstream out;
    for (int dim = 14; dim <= dimMax; dim += 2) {
        const EquationCounts c = independentEquationCount(dim / 2);
        out << dim << ' ' << c.potentialTerms << '\n';
    }
    return out.str();
}

} // namespace csforge
