#include "core/fixture.hpp"

#include "core/assemble.hpp"
#include "core/emit.hpp"

#include <sstream>

namespace csforge {
namespace {

void printMatrix(std::ostringstream& out, const char* name, const RatMatrix& m)
{
    out << "  " << name << " (" << m.rows() << "x" << m.cols() << "):";
    if (m.cols() == 0 || m.rows() == 0) {
        out << " empty\n";
        return;
    }
    out << "\n";
    for (int r = 0; r < m.rows(); ++r) {
        out << "    [";
        for (int c = 0; c < m.cols(); ++c)
            out << (c ? " " : "") << toString(m.at(r, c));
        out << "]\n";
    }
}

} // namespace

std::string renderFixtureReport()
{
    constexpr int n = 4;
    std::ostringstream out;
    auto sets = enumeratePartitionSets(n);

    out << "dimension-8 derivation replay\n";
    out << "expansion: " << pdExpansion(n).str() << "\n\n";

    CsPotential pot;
    pot.n = n;
    for (int a = 1; a <= n; ++a) {
        PartitionSystem sys = buildSystem(sets[a]);
        out << "partition a=" << a << " (" << sys.uEven.size() << " classes, "
            << sys.rawCount << " raw equations, " << sys.equations.size()
            << " kept)\n";
        for (const auto& cls : sys.uEven)
            out << "  class " << cls.representative.str() << " size " << cls.classSize
                << "\n";
        for (std::size_t i = 0; i < sys.equations.size(); ++i) {
            const auto& eq = sys.equations[i];
            out << "  eq " << i + 1 << ": " << eq.source.str() << " = "
                << toString(eq.dtermSign) << "·d(" << eq.dterm.str() << ")";
            if (!eq.evenSide.empty())
                out << " + [" << eq.evenSide.str() << "]";
            if (!eq.oddSide.empty())
                out << " + {" << eq.oddSide.str() << "}";
            out << "\n";
        }
        printMatrix(out, "mEven", sys.mEven.dense());
        printMatrix(out, "mOdd", sys.mOdd.dense());

        PartitionSolution sol = solvePartition(sys);
        out << "  kappa = (";
        for (std::size_t i = 0; i < sol.kappa.size(); ++i)
            out << (i ? " " : "") << toString(sol.kappa[i]);
        out << "), k = " << toString(sol.k) << "\n";
        out << "  contribution: " << sol.contribution.str() << "\n\n";
        pot.partitions.push_back(sol);
        pot.terms += sol.contribution;
    }

    out << "potential: " << pot.terms.str() << "\n";
    out << "rendered:  " << renderText(pot.terms) << "\n";
    VerifyResult v = verify(n, pot.terms);
    out << "verify d(potential) == expansion: " << (v.pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

} // namespace csforge
