#ifndef GKDPP_IO_HPP
#define GKDPP_IO_HPP

#include <string>
#include <vector>

#include "gkdpp/dpp.hpp"
#include "gkdpp/functionals.hpp"
#include "gkdpp/palm.hpp"
#include "gkdpp/verify.hpp"

namespace gkdpp::io {

/// 17 significant digits: round-trip exact, so reports are diffable.
std::string format_double(double v);

// JSON documents all carry "schema": 1.
std::string to_json(const std::vector<verify::CheckResult>& results);
std::string to_json(const ConvergenceReport& report);
std::string to_json(const HierarchyMcReport& report);
std::string to_json(const RangeInclusionReport& report);
std::string measure_to_json(const std::vector<std::pair<std::uint32_t, double>>& measure);
std::string samples_to_json(const std::vector<Configuration>& samples,
                            std::uint64_t seed);

/// Kernel grid, density column and basis values in one JSON document.
std::string eval_tables_to_json(const AdmissibleParams& p, const KernelMatrix& k,
                                int m_max);

std::string samples_to_csv(const std::vector<Configuration>& samples,
                           std::uint64_t seed);
std::string kernel_grid_to_csv(const KernelMatrix& k);
std::string rho_table_to_csv(const AdmissibleParams& p, const Window& w);
std::string basis_table_to_csv(const AdmissibleParams& p, const Window& w,
                               int m_max);

}  // namespace gkdpp::io

#endif  // GKDPP_IO_HPP
