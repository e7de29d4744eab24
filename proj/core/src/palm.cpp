#include "gkdpp/palm.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "gkdpp/gamma_kernel.hpp"
#include "gkdpp/rng.hpp"
#include "gkdpp/sampler.hpp"

namespace gkdpp {

PalmContext::PalmContext(const AdmissibleParams& params, LatticePoint p)
    : params_(params), shifted_(params.shifted(1)), p_(p), rho_p_(rho1(params, p)) {
  if (!(rho_p_ > 0.0 && rho_p_ < 1.0))
    throw Error("PalmContext: rho_1(p) outside (0,1)");
}

KernelFn reduced_palm_kernel(const KernelFn& kernel, LatticePoint p) {
  const double d = kernel(p, p);
  if (d <= 1e-12) throw ZeroDensityAtP("reduced_palm_kernel: K(p,p) ~ 0");
  return [kernel, p, d](LatticePoint x, LatticePoint y) {
    if (x == p || y == p)
      throw Error("reduced_palm_kernel: site p was removed from the ground set");
    return kernel(x, y) - kernel(x, p) * kernel(p, y) / d;
  };
}

KernelMatrix reduced_palm_kernel(const KernelMatrix& k, LatticePoint p) {
  const auto ip = k.window.index_of(p);
  if (!ip) throw Error("reduced_palm_kernel: p not in window");
  const double d = k.entries(static_cast<Eigen::Index>(*ip),
                             static_cast<Eigen::Index>(*ip));
  if (d <= 1e-12) throw ZeroDensityAtP("reduced_palm_kernel: K(p,p) ~ 0");

  const Window reduced = k.window.without(p);
  const auto n = static_cast<Eigen::Index>(reduced.size());
  const auto pi = static_cast<Eigen::Index>(*ip);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index oi = i < pi ? i : i + 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index oj = j < pi ? j : j + 1;
      m(i, j) = k.entries(oi, oj) - k.entries(oi, pi) * k.entries(pi, oj) / d;
    }
  }
  return KernelMatrix{reduced, std::move(m)};
}

KernelFn hole_kernel(const KernelFn& kernel, LatticePoint p) {
  const double d = kernel(p, p);
  if (d >= 1.0 - 1e-12) throw FullDensityAtP("hole_kernel: K(p,p) ~ 1");
  return [kernel, p, d](LatticePoint x, LatticePoint y) {
    if (x == p || y == p)
      throw Error("hole_kernel: site p was removed from the ground set");
    return kernel(x, y) + kernel(x, p) * kernel(p, y) / (1.0 - d);
  };
}

KernelMatrix hole_kernel(const KernelMatrix& k, LatticePoint p) {
  const auto ip = k.window.index_of(p);
  if (!ip) throw Error("hole_kernel: p not in window");
  const auto pi = static_cast<Eigen::Index>(*ip);
  const double d = k.entries(pi, pi);
  if (d >= 1.0 - 1e-12) throw FullDensityAtP("hole_kernel: K(p,p) ~ 1");

  const Window reduced = k.window.without(p);
  const auto n = static_cast<Eigen::Index>(reduced.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index oi = i < pi ? i : i + 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index oj = j < pi ? j : j + 1;
      m(i, j) = k.entries(oi, oj) + k.entries(oi, pi) * k.entries(pi, oj) / (1.0 - d);
    }
  }
  return KernelMatrix{reduced, std::move(m)};
}

double a_perturbation(const PalmContext& ctx, LatticePoint x) {
  if (x == ctx.p()) throw EvaluatedAtP("a_perturbation: undefined at p");
  const double dx = x.x() - ctx.p().x();
  const Complex denom =
      (x.x() + ctx.params().z() + 0.5) * (x.x() + ctx.params().zp() + 0.5);
  // the product is real and positive for admissible parameters
  return dx * dx / denom.real();
}

double phi_multiplier(const PalmContext& ctx, LatticePoint x) {
  if (x == ctx.p()) throw EvaluatedAtP("phi_multiplier: undefined at p");
  const double dx = x.x() - ctx.p().x();
  const Complex denom =
      (x.x() + ctx.params().z() + 0.5) * (x.x() + ctx.params().zp() + 0.5);
  return dx / std::sqrt(denom.real());
}

PsiCheckValue psi_check(const PalmContext& ctx, const Configuration& omega,
                        const Window& w) {
  if (omega.occupies(ctx.p())) return PsiCheckValue{0.0, 0};
  double log_value = 0.0;
  int factors = 0;
  for (const LatticePoint site : w.sites()) {
    if (site == ctx.p()) continue;
    if (site.x() > 0.0 && omega.occupies(site)) {
      log_value += std::log(a_perturbation(ctx, site));
      ++factors;
    } else if (site.x() < 0.0 && !omega.occupies(site)) {
      log_value -= std::log(a_perturbation(ctx, site));
      ++factors;
    }
  }
  return PsiCheckValue{std::exp(log_value), factors};
}

Complex rank_m_kernel_entry(const AdmissibleParams& p, int m, LatticePoint x,
                            LatticePoint y) {
  if (m < 1) throw Error("rank_m_kernel_entry: m must be >= 1");
  const AdmissibleParams swapped = p.swapped();
  Complex acc(0.0, 0.0);
  for (int i = 0; i < m; ++i) acc += basis_g(p, i, x) * basis_g(swapped, i, y);
  return acc;
}

namespace {

// sum_{|y| <= Y, y != p} K_p(x, y) f(y) at Y, 2Y, 4Y, Richardson-extrapolated
// against the c/Y + d/Y^2 tail model.
struct RowAccumulator {
  double s1 = 0.0, s2 = 0.0, s4 = 0.0;
};

double extrapolate(const RowAccumulator& r) {
  const double e1a = 2.0 * r.s2 - r.s1;
  const double e1b = 2.0 * r.s4 - r.s2;
  return (4.0 * e1b - e1a) / 3.0;
}

}  // namespace

RangeInclusionReport verify_range_inclusion(const PalmContext& ctx, int m_max,
                                            int radius) {
  if (radius < 100) throw Error("verify_range_inclusion: radius must be >= 100");
  const LatticePoint p = ctx.p();
  const AdmissibleParams& params = ctx.params();
  const AdmissibleParams& up = ctx.shifted();

  const long long r_in = radius;
  const long long r_out = 4LL * radius;
  const double kpp = rho1(params, p);

  // rows: report window minus p; columns: extended window minus p
  std::vector<LatticePoint> rows, cols;
  for (long long k = -r_in; k < r_in; ++k)
    if (k != p.k) rows.push_back(LatticePoint{k});
  for (long long k = -r_out; k < r_out; ++k)
    if (k != p.k) cols.push_back(LatticePoint{k});

  std::vector<double> krow_p(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    krow_p[j] = kernel_entry(params, p, cols[j]);

  struct Mode {
    int m;
    std::string family;
  };
  std::vector<Mode> modes;
  for (int m = 0; m <= m_max; ++m) modes.push_back({m, "shifted"});
  for (int m = 0; m <= m_max; ++m) modes.push_back({m, "corrected"});

  // f vectors on rows and cols per mode (real: complementary/degenerate are
  // real by construction, principal residues are discarded after the residual
  // is formed on real and imaginary parts jointly)
  const auto eval_mode = [&](const Mode& mode,
                             std::vector<Complex>& on_cols,
                             std::vector<Complex>& on_rows) {
    const auto value = [&](LatticePoint x) -> Complex {
      if (mode.family == "shifted")
        return phi_multiplier(ctx, x) * basis_g(up, mode.m, x);
      // g_m with the value at p removed through the in-range column K(.,p)
      const Complex gp = basis_g(params, mode.m, p);
      return basis_g(params, mode.m, x) -
             gp / kpp * kernel_entry(params, x, p);
    };
    on_cols.resize(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) on_cols[j] = value(cols[j]);
    on_rows.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) on_rows[i] = value(rows[i]);
  };

  RangeInclusionReport report;
  report.radius = radius;
  report.tolerance = 0.2 / static_cast<double>(radius);

  std::vector<double> kx(cols.size());
  for (const Mode& mode : modes) {
    std::vector<Complex> f_cols, f_rows;
    eval_mode(mode, f_cols, f_rows);

    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const LatticePoint x = rows[i];
      const double kxp = kernel_entry(params, x, p);
      for (std::size_t j = 0; j < cols.size(); ++j)
        kx[j] = kernel_entry(params, x, cols[j]) - kxp * krow_p[j] / kpp;

      RowAccumulator re, im;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const Complex term = kx[j] * f_cols[j];
        const long long ay = std::llabs(cols[j].k);
        re.s4 += term.real();
        im.s4 += term.imag();
        if (ay <= r_in) { re.s1 += term.real(); im.s1 += term.imag(); }
        if (ay <= 2 * r_in) { re.s2 += term.real(); im.s2 += term.imag(); }
      }
      const Complex kf(extrapolate(re), extrapolate(im));
      num += std::norm(kf - f_rows[i]);
      den += std::norm(f_rows[i]);
    }
    report.modes.push_back(
        RangeInclusionMode{mode.m, mode.family, std::sqrt(num / den)});
  }

  // negative control: a random vector is nowhere near the range
  {
    RandomStream rng(0xC0FFEE, 17);
    std::vector<double> f(cols.size());
    for (auto& v : f) v = rng.uniform() - 0.5;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const LatticePoint x = rows[i];
      const double kxp = kernel_entry(params, x, p);
      double kf = 0.0;
      for (std::size_t j = 0; j < cols.size(); ++j)
        kf += (kernel_entry(params, x, cols[j]) - kxp * krow_p[j] / kpp) * f[j];
      const auto self = static_cast<std::size_t>(
          std::find(cols.begin(), cols.end(), x) - cols.begin());
      num += (kf - f[self]) * (kf - f[self]);
      den += f[self] * f[self];
    }
    report.control_residual = std::sqrt(num / den);
  }

  report.passed = std::all_of(report.modes.begin(), report.modes.end(),
                              [&](const RangeInclusionMode& m) {
                                return m.residual <= report.tolerance;
                              });
  return report;
}

HierarchyMcReport verify_hierarchy_mc(const PalmContext& ctx, int radius,
                                      const std::vector<LatticePoint>& T,
                                      long samples, std::uint64_t seed,
                                      int threads) {
  if (T.size() > 6) throw Error("verify_hierarchy_mc: |T| must be <= 6");
  for (const auto& t : T)
    if (t == ctx.p())
      throw Error("verify_hierarchy_mc: T must avoid the conditioning site p");
  const Window window = Window::symmetric(radius);
  for (const auto& t : T)
    if (!window.contains(t))
      throw Error("verify_hierarchy_mc: T must lie inside the sampling window");

  const std::size_t n_patterns = std::size_t{1} << T.size();

  // exact route: cylinder probabilities of the reduced Palm kernel need only
  // the T x T block, which the entrywise Schur complement gives exactly
  std::vector<double> exact(n_patterns);
  {
    const KernelFn palm_fn =
        reduced_palm_kernel(gamma_kernel_fn(ctx.params()), ctx.p());
    std::vector<LatticePoint> t_sorted = T;
    std::sort(t_sorted.begin(), t_sorted.end());
    const KernelMatrix kt = truncate(palm_fn, Window(t_sorted));
    for (std::uint32_t mask = 0; mask < n_patterns; ++mask) {
      std::vector<LatticePoint> s;
      for (std::size_t i = 0; i < T.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) s.push_back(T[i]);
      exact[mask] = cylinder_prob(kt, T, s);
    }
  }

  // MC route: sample the shifted-parameter measure on the window, weight by
  // the windowed explicit functional, self-normalize over the batch
  const KernelMatrix shifted_k = gamma_kernel_matrix(ctx.shifted(), window);
  const ProjectionSampler sampler(shifted_k);

  struct Accum {
    std::vector<double> w_sum, w2_sum;   // per pattern, weighted
    std::vector<double> count;           // per pattern, unweighted
    double total_w = 0.0, total_w2 = 0.0;
    explicit Accum(std::size_t n) : w_sum(n, 0.0), w2_sum(n, 0.0), count(n, 0.0) {}
  };

  const int workers = std::max(1, threads);
  std::vector<Accum> per_thread(static_cast<std::size_t>(workers), Accum(n_patterns));
  {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        Accum& acc = per_thread[static_cast<std::size_t>(w)];
        for (long i = w; i < samples; i += workers) {
          const Configuration omega =
              sampler.draw(seed, static_cast<std::uint64_t>(i));
          const double weight = psi_check(ctx, omega, window).value;
          std::uint32_t mask = 0;
          for (std::size_t b = 0; b < T.size(); ++b)
            if (omega.occupies(T[b])) mask |= (std::uint32_t{1} << b);
          acc.w_sum[mask] += weight;
          acc.w2_sum[mask] += weight * weight;
          acc.count[mask] += 1.0;
          acc.total_w += weight;
          acc.total_w2 += weight * weight;
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  Accum merged(n_patterns);
  for (const Accum& acc : per_thread) {
    for (std::size_t m = 0; m < n_patterns; ++m) {
      merged.w_sum[m] += acc.w_sum[m];
      merged.w2_sum[m] += acc.w2_sum[m];
      merged.count[m] += acc.count[m];
    }
    merged.total_w += acc.total_w;
    merged.total_w2 += acc.total_w2;
  }

  HierarchyMcReport report;
  report.radius = radius;
  report.samples = samples;
  report.seed = seed;
  report.effective_samples =
      merged.total_w * merged.total_w / std::max(merged.total_w2, 1e-300);

  const double n_d = static_cast<double>(samples);
  for (std::uint32_t mask = 0; mask < n_patterns; ++mask) {
    PatternStat st;
    st.mask = mask;
    st.exact = exact[mask];
    // self-normalized importance sampling estimate and its delta-method error
    st.mc = merged.w_sum[mask] / merged.total_w;
    const double mean_w = merged.total_w / n_d;
    // var of (1/n) sum w_i (b_i - p) / mean_w
    const double var_num = merged.w2_sum[mask] * (1.0 - st.mc) * (1.0 - st.mc) +
                           (merged.total_w2 - merged.w2_sum[mask]) * st.mc * st.mc;
    st.stderr_ = std::sqrt(var_num) / (n_d * mean_w);
    st.zscore = (st.mc - st.exact) / std::max(st.stderr_, 1e-300);
    report.patterns.push_back(st);
    report.tv_distance += 0.5 * std::abs(st.mc - st.exact);
    report.max_abs_z = std::max(report.max_abs_z, std::abs(st.zscore));

    PatternStat ab;
    ab.mask = mask;
    ab.exact = exact[mask];
    ab.mc = merged.count[mask] / n_d;
    ab.stderr_ = std::sqrt(std::max(ab.mc * (1.0 - ab.mc), 1e-300) / n_d);
    ab.zscore = (ab.mc - ab.exact) / std::max(ab.stderr_, 1e-300);
    report.ablation.push_back(ab);
    report.ablation_max_abs_z =
        std::max(report.ablation_max_abs_z, std::abs(ab.zscore));
  }
  return report;
}

}  // namespace gkdpp
