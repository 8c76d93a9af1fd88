#pragma once

#include <complex>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

#include "gridflow/case_model.hpp"

namespace gridflow {

/// Complex nodal admittance matrix plus the bus-number <-> row mapping.
/// Row order follows the Bus.con table.
struct AdmittanceMatrix {
    Eigen::SparseMatrix<std::complex<double>> y;
    std::vector<int> bus_numbers;               // row -> bus number
    std::unordered_map<int, int> index_of_bus;  // bus number -> row

    int index(int bus_number) const { return index_of_bus.at(bus_number); }
    std::complex<double> at(int from_bus, int to_bus) const {
        return y.coeff(index(from_bus), index(to_bus));
    }
};

/// Assembles the bus admittance matrix: pi-model lines (series 1/(r+jx),
/// half the charging b on each terminal), transformers with complex tap
/// a*e^{j phi} on the from side, and shunt devices g + jb on the diagonal.
/// Branches with length > 0 carry per-km r/x/b and are scaled first.
/// Throws Error for x = 0 or a branch touching an unknown bus.
AdmittanceMatrix build_admittance(const PowerCase& c);

} // namespace gridflow
