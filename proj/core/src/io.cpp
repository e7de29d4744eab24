#include "gkdpp/io.hpp"

#include <cstdio>

#include <json.hpp>

#include "gkdpp/gamma_kernel.hpp"

namespace gkdpp::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// keep numeric payloads as 17-digit strings so json output is stable
json num(double v) { return json(format_double(v)); }

}  // namespace

std::string to_json(const std::vector<verify::CheckResult>& results) {
  json doc;
  doc["schema"] = 1;
  bool all_passed = true;
  json arr = json::array();
  for (const auto& r : results) {
    json item;
    item["name"] = r.name;
    item["observed_error"] = num(r.observed_error);
    item["tolerance"] = num(r.tolerance);
    item["passed"] = r.passed;
    item["runtime_ms"] = r.runtime_ms;
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    item["params"] = params;
    arr.push_back(item);
    all_passed = all_passed && r.passed;
  }
  doc["results"] = arr;
  doc["all_passed"] = all_passed;
  return doc.dump(2);
}

std::string to_json(const ConvergenceReport& report) {
  json doc;
  doc["schema"] = 1;
  json arr = json::array();
  for (const auto& e : report.entries) {
    json item;
    item["radius"] = e.radius;
    item["normalizer"] = num(e.normalizer);
    item["regularized"] = num(e.regularized);
    item["rel_change"] = num(e.rel_change);
    arr.push_back(item);
  }
  doc["entries"] = arr;
  doc["converged"] = report.converged;
  return doc.dump(2);
}

namespace {

json pattern_array(const std::vector<PatternStat>& stats, std::size_t bits) {
  json arr = json::array();
  for (const auto& st : stats) {
    json item;
    std::string mask(bits, '0');
    for (std::size_t b = 0; b < bits; ++b)
      if (st.mask & (1u << b)) mask[b] = '1';
    item["pattern"] = mask;
    item["exact"] = num(st.exact);
    item["estimate"] = num(st.mc);
    item["stderr"] = num(st.stderr_);
    item["zscore"] = num(st.zscore);
    arr.push_back(item);
  }
  return arr;
}

}  // namespace

std::string to_json(const HierarchyMcReport& report) {
  json doc;
  doc["schema"] = 1;
  std::size_t bits = 0;
  if (!report.patterns.empty()) {
    std::uint32_t top = 0;
    for (const auto& st : report.patterns) top = std::max(top, st.mask);
    while ((1u << bits) <= top) ++bits;
    if (bits == 0) bits = 1;
  }
  doc["patterns"] = pattern_array(report.patterns, bits);
  doc["ablation"] = pattern_array(report.ablation, bits);
  doc["tv_distance"] = num(report.tv_distance);
  doc["max_abs_zscore"] = num(report.max_abs_z);
  doc["ablation_max_abs_zscore"] = num(report.ablation_max_abs_z);
  doc["effective_samples"] = num(report.effective_samples);
  doc["radius"] = report.radius;
  doc["samples"] = report.samples;
  doc["seed"] = report.seed;
  return doc.dump(2);
}

std::string to_json(const RangeInclusionReport& report) {
  json doc;
  doc["schema"] = 1;
  json arr = json::array();
  for (const auto& m : report.modes) {
    json item;
    item["m"] = m.m;
    item["family"] = m.family;
    item["residual"] = num(m.residual);
    arr.push_back(item);
  }
  doc["modes"] = arr;
  doc["control_residual"] = num(report.control_residual);
  doc["radius"] = report.radius;
  doc["tolerance"] = num(report.tolerance);
  doc["passed"] = report.passed;
  return doc.dump(2);
}

std::string measure_to_json(
    const std::vector<std::pair<std::uint32_t, double>>& measure) {
  json doc;
  doc["schema"] = 1;
  json arr = json::array();
  for (const auto& [mask, prob] : measure) {
    json item;
    item["bitmask"] = mask;
    item["probability"] = num(prob);
    arr.push_back(item);
  }
  doc["measure"] = arr;
  return doc.dump(2);
}

std::string samples_to_json(const std::vector<Configuration>& samples,
                            std::uint64_t seed) {
  json doc;
  doc["schema"] = 1;
  doc["seed"] = seed;
  json arr = json::array();
  for (const auto& cfg : samples) arr.push_back(cfg.sites);
  doc["samples"] = arr;
  return doc.dump(2);
}

std::string eval_tables_to_json(const AdmissibleParams& p, const KernelMatrix& k,
                                int m_max) {
  json doc;
  doc["schema"] = 1;
  json grid = json::array();
  for (std::size_t i = 0; i < k.window.size(); ++i)
    for (std::size_t j = 0; j < k.window.size(); ++j)
      grid.push_back({{"x", num(k.window[i].x())},
                      {"y", num(k.window[j].x())},
                      {"value", num(k.entries(static_cast<Eigen::Index>(i),
                                              static_cast<Eigen::Index>(j)))}});
  doc["kernel"] = grid;

  json rho = json::array();
  for (const auto site : k.window.sites())
    rho.push_back({{"x", num(site.x())}, {"rho1", num(rho1(p, site))}});
  doc["rho1"] = rho;

  json basis = json::array();
  for (int m = 0; m <= m_max; ++m)
    for (const auto site : k.window.sites()) {
      const Complex g = basis_g(p, m, site);
      basis.push_back({{"m", m},
                       {"x", num(site.x())},
                       {"re", num(g.real())},
                       {"im", num(g.imag())}});
    }
  doc["basis"] = basis;
  return doc.dump(2);
}

std::string samples_to_csv(const std::vector<Configuration>& samples,
                           std::uint64_t seed) {
  std::string out = "seed,index,count,sites\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out += std::to_string(seed) + "," + std::to_string(i) + "," +
           std::to_string(samples[i].sites.size()) + ",";
    for (std::size_t j = 0; j < samples[i].sites.size(); ++j) {
      if (j) out += ' ';
      out += format_double(LatticePoint{samples[i].sites[j]}.x());
    }
    out += '\n';
  }
  return out;
}

std::string kernel_grid_to_csv(const KernelMatrix& k) {
  std::string out = "x,y,value\n";
  for (std::size_t i = 0; i < k.window.size(); ++i)
    for (std::size_t j = 0; j < k.window.size(); ++j) {
      out += format_double(k.window[i].x()) + "," +
             format_double(k.window[j].x()) + "," +
             format_double(k.entries(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(j))) +
             "\n";
    }
  return out;
}

std::string rho_table_to_csv(const AdmissibleParams& p, const Window& w) {
  std::string out = "x,rho1\n";
  for (const auto site : w.sites())
    out += format_double(site.x()) + "," + format_double(rho1(p, site)) + "\n";
  return out;
}

std::string basis_table_to_csv(const AdmissibleParams& p, const Window& w,
                               int m_max) {
  std::string out = "m,x,re,im\n";
  for (int m = 0; m <= m_max; ++m)
    for (const auto site : w.sites()) {
      const Complex g = basis_g(p, m, site);
      out += std::to_string(m) + "," + format_double(site.x()) + "," +
             format_double(g.real()) + "," + format_double(g.imag()) + "\n";
    }
  return out;
}

}  // namespace gkdpp::io
