// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "focknc/states.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "focknc/combinatorics.hpp"

namespace focknc {

namespace {

constexpr double kPi [[maybe_unused]] = 3.141592653589793238462643383279502884;

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt_real(z.real());
  std::string s = fmt_real(z.real());
  s += z.imag() < 0.0 ? "-" : "+";
  s += fmt_real(std::fabs(z.imag()));
  s += "i";
  return s;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Generates weights exp(log_weight(i)), i = 0, 1, ..., stopping at the
// smallest cutoff whose discarded relative tail mass is <= epsilon. The tail
// is bounded geometrically: past the mode the weight ratios of every family
// built here decrease monotonically, so sum_{j>=i} w_j <= w_i / (1 - r) with
// r the ratio entering step i. Weights are returned rescaled by the running
// peak (callers re-normalize).
std::vector<double> truncated_weights(const std::function<double(std::uint32_t)>& log_weight,
                                      double epsilon) {
  require(epsilon > 0.0 && epsilon < 1.0,
          "state constructor: truncation epsilon must be in (0, 1)");
  std::vector<double> logs;
  double peak = -std::numeric_limits<double>::infinity();
  double mass_scaled = 0.0;  // sum of exp(logs[j] - peak)
  for (std::uint32_t i = 0;; ++i) {
    if (i > 20'000'000)
      throw std::runtime_error("state constructor: truncation did not converge");
    const double lw = log_weight(i);
    if (i > 0) {
      const double ratio = std::exp(lw - logs.back());
      if (ratio < 1.0) {
        const double tail_scaled = std::exp(lw - peak) / (1.0 - ratio);
        if (tail_scaled <= epsilon * mass_scaled) break;  // discard i and beyond
      }
    }
    logs.push_back(lw);
    if (lw > peak) {
      mass_scaled *= std::exp(peak - lw);
      peak = lw;
      mass_scaled += 1.0;
    } else {
      mass_scaled += std::exp(lw - peak);
    }
  }
  std::vector<double> w(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) w[i] = std::exp(logs[i] - peak);
  return w;
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

FockState make_gbs(double alpha, double beta, double big_n) {
  require(std::isfinite(alpha) && alpha > -1.0, "gbs: alpha must be > -1");
  require(std::isfinite(beta) && beta > -1.0, "gbs: beta must be > -1");
  require(std::isfinite(big_n) && big_n >= 0.0, "gbs: N must be >= 0");

  const double a = alpha + 1.0, b = beta + 1.0;
  const auto top = static_cast<std::size_t>(std::ceil(big_n));
  const double lb0 = log_beta(a, b);
  std::vector<std::complex<double>> c(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    const double nn = static_cast<double>(n);
    // Gamma-continued binomial weight: exact at integer N, and the weight of
    // the level entering at ceil(N) vanishes continuously as N grows through
    // an integer.
    const double logw = std::lgamma(big_n + 1.0) - std::lgamma(nn + 1.0) -
                        std::lgamma(big_n - nn + 1.0) +
                        log_beta(nn + a, big_n - nn + b) - lb0;
    c[n] = std::exp(0.5 * logw);
  }
  StateSpec spec{GbsParams{alpha, beta, big_n}};
  return FockState::from_amplitudes(std::move(c), spec.label());
}

FockState make_nbs(double eta, std::uint32_t m_quanta, double truncation_epsilon) {
  require(std::isfinite(eta) && eta > 0.0 && eta <= 1.0, "nbs: eta must be in (0, 1]");
  StateSpec spec{NbsParams{eta, m_quanta}, truncation_epsilon};

  const double m = m_quanta;
  if (eta == 1.0) {
    std::vector<std::complex<double>> c(m_quanta + 1);
    c[m_quanta] = 1.0;
    return FockState::from_amplitudes(std::move(c), spec.label(), truncation_epsilon);
  }
  const double log_eta = std::log(eta), log_1m = std::log1p(-eta);
  const double lfm = log_factorial(m);
  auto logw = [&](std::uint32_t i) {
    // n = M + i: C(n, M) eta^{M+1} (1-eta)^{n-M}
    return log_factorial(m + i) - lfm - log_factorial(i) + (m + 1.0) * log_eta +
           i * log_1m;
  };
  const auto w = truncated_weights(logw, truncation_epsilon);
  std::vector<std::complex<double>> c(m_quanta + w.size());
  for (std::size_t i = 0; i < w.size(); ++i) c[m_quanta + i] = std::sqrt(w[i]);
  return FockState::from_amplitudes(std::move(c), spec.label(), truncation_epsilon);
}

FockState make_pacs(std::complex<double> alpha, std::uint32_t added,
                    double truncation_epsilon) {
  require(std::isfinite(alpha.real()) && std::isfinite(alpha.imag()),
          "pacs: alpha must be finite");
  StateSpec spec{PacsParams{alpha, added}, truncation_epsilon};

  const double mod = std::abs(alpha);
  if (mod == 0.0) {
    std::vector<std::complex<double>> c(added + 1);
    c[added] = 1.0;
    return FockState::from_amplitudes(std::move(c), spec.label(), truncation_epsilon);
  }
  const double m = added, la = std::log(mod), phase = std::arg(alpha);
  auto logw = [&](std::uint32_t i) {
    // |C_{m+i}|^2 proportional to |alpha|^{2i} (m+i)! / i!^2
    return 2.0 * i * la + log_factorial(m + i) - 2.0 * log_factorial(i);
  };
  const auto w = truncated_weights(logw, truncation_epsilon);
  std::vector<std::complex<double>> c(added + w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    c[added + i] = std::sqrt(w[i]) * std::polar(1.0, phase * static_cast<double>(i));
  return FockState::from_amplitudes(std::move(c), spec.label(), truncation_epsilon);
}

FockState make_hs(double big_l, std::uint32_t m_quanta, double eta) {
  require(std::isfinite(eta) && eta > 0.0 && eta < 1.0, "hs: eta must be in (0, 1)");
  require(std::isfinite(big_l) && big_l > 0.0, "hs: L must be positive");
  const double m = m_quanta;
  require(big_l * eta >= m - 1e-9 && big_l * (1.0 - eta) >= m - 1e-9,
          "hs: need L >= max(M/eta, M/(1-eta))");

  const double le = big_l * eta, lu = big_l * (1.0 - eta);
  auto log_choose = [](double x, double j) {
    return std::lgamma(x + 1.0) - std::lgamma(j + 1.0) - std::lgamma(x - j + 1.0);
  };
  const double lc0 = log_choose(big_l, m);
  std::vector<std::complex<double>> c(m_quanta + 1);
  for (std::uint32_t n = 0; n <= m_quanta; ++n) {
    const double logw =
        log_choose(le, n) + log_choose(lu, m - static_cast<double>(n)) - lc0;
    c[n] = std::exp(0.5 * logw);
  }
  StateSpec spec{HsParams{big_l, m_quanta, eta}};
  return FockState::from_amplitudes(std::move(c), spec.label());
}

FockState make_coherent(std::complex<double> alpha, double truncation_epsilon) {
  require(std::isfinite(alpha.real()) && std::isfinite(alpha.imag()),
          "coherent: alpha must be finite");
  StateSpec spec{CoherentParams{alpha}, truncation_epsilon};

  const double mod = std::abs(alpha);
  if (mod == 0.0)
    return FockState::from_amplitudes({1.0}, spec.label(), truncation_epsilon);
  const double la = std::log(mod), phase = std::arg(alpha);
  auto logw = [&](std::uint32_t n) { return 2.0 * n * la - log_factorial(n); };
  const auto w = truncated_weights(logw, truncation_epsilon);
  std::vector<std::complex<double>> c(w.size());
  for (std::size_t n = 0; n < w.size(); ++n)
    c[n] = std::sqrt(w[n]) * std::polar(1.0, phase * static_cast<double>(n));
  return FockState::from_amplitudes(std::move(c), spec.label(), truncation_epsilon);
}

FockState make_fock(std::uint32_t n) {
  std::vector<std::complex<double>> c(n + 1);
  c[n] = 1.0;
  StateSpec spec{FockParams{n}};
  return FockState::from_amplitudes(std::move(c), spec.label());
}

FockState make_binomial(double p, std::uint32_t m_quanta) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "binomial: p must be in [0, 1]");
  StateSpec spec{BinomialParams{p, m_quanta}};
  if (p == 0.0) return FockState::from_amplitudes({1.0}, spec.label());
  if (p == 1.0) return make_fock(m_quanta);

  const double m = m_quanta, lp = std::log(p), lq = std::log1p(-p);
  std::vector<std::complex<double>> c(m_quanta + 1);
  for (std::uint32_t n = 0; n <= m_quanta; ++n) {
    const double logw = log_factorial(m) - log_factorial(n) -
                        log_factorial(m - static_cast<double>(n)) + n * lp +
                        (m - n) * lq;
    c[n] = std::exp(0.5 * logw);
  }
  return FockState::from_amplitudes(std::move(c), spec.label());
}

FockState make_state(const StateSpec& spec) {
  const double eps = spec.truncation_epsilon;
  return std::visit(
      [&](const auto& p) -> FockState {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GbsParams>)
          return make_gbs(p.alpha, p.beta, p.big_n);
        else if constexpr (std::is_same_v<T, NbsParams>)
          return make_nbs(p.eta, p.m_quanta, eps);
        else if constexpr (std::is_same_v<T, PacsParams>)
          return make_pacs(p.alpha, p.added, eps);
        else if constexpr (std::is_same_v<T, HsParams>)
          return make_hs(p.big_l, p.m_quanta, p.eta);
        else if constexpr (std::is_same_v<T, CoherentParams>)
          return make_coherent(p.alpha, eps);
        else if constexpr (std::is_same_v<T, FockParams>)
          return make_fock(p.n);
        else
          return make_binomial(p.p, p.m_quanta);
      },
      spec.params);
}

std::string_view StateSpec::family() const {
  return std::visit(
      [](const auto& p) -> std::string_view {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GbsParams>) return "gbs";
        else if constexpr (std::is_same_v<T, NbsParams>) return "nbs";
        else if constexpr (std::is_same_v<T, PacsParams>) return "pacs";
        else if constexpr (std::is_same_v<T, HsParams>) return "hs";
        else if constexpr (std::is_same_v<T, CoherentParams>) return "coherent";
        else if constexpr (std::is_same_v<T, FockParams>) return "fock";
        else return "binomial";
      },
      params);
}

std::string StateSpec::label() const {
  return std::visit(
      [&](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GbsParams>)
          return "gbs:alpha=" + fmt_real(p.alpha) + ",beta=" + fmt_real(p.beta) +
                 ",N=" + fmt_real(p.big_n);
        else if constexpr (std::is_same_v<T, NbsParams>)
          return "nbs:eta=" + fmt_real(p.eta) + ",M=" + std::to_string(p.m_quanta);
        else if constexpr (std::is_same_v<T, PacsParams>)
          return "pacs:alpha=" + fmt_complex(p.alpha) + ",m=" + std::to_string(p.added);
        else if constexpr (std::is_same_v<T, HsParams>)
          return "hs:L=" + fmt_real(p.big_l) + ",M=" + std::to_string(p.m_quanta) +
                 ",eta=" + fmt_real(p.eta);
        else if constexpr (std::is_same_v<T, CoherentParams>)
          return "coherent:alpha=" + fmt_complex(p.alpha);
        else if constexpr (std::is_same_v<T, FockParams>)
          return "fock:n=" + std::to_string(p.n);
        else
          return "binomial:p=" + fmt_real(p.p) + ",M=" + std::to_string(p.m_quanta);
      },
      params);
}

std::vector<std::string> parameter_names(const StateSpec& spec) {
  const auto fam = spec.family();
  if (fam == "gbs") return {"alpha", "beta", "N"};
  if (fam == "nbs") return {"eta", "M"};
  if (fam == "pacs") return {"alpha", "m"};
  if (fam == "hs") return {"L", "M", "eta"};
  if (fam == "coherent") return {"alpha"};
  if (fam == "fock") return {"n"};
  return {"p", "M"};
}

namespace {

[[noreturn]] void unknown_parameter(const StateSpec& spec, std::string_view name) {
  throw std::invalid_argument("unknown parameter '" + std::string(name) +
                              "' for family '" + std::string(spec.family()) + "'");
}

}  // namespace

double get_parameter(const StateSpec& spec, std::string_view name) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GbsParams>) {
          if (name == "alpha") return p.alpha;
          if (name == "beta") return p.beta;
          if (name == "N") return p.big_n;
        } else if constexpr (std::is_same_v<T, NbsParams>) {
          if (name == "eta") return p.eta;
          if (name == "M") return p.m_quanta;
        } else if constexpr (std::is_same_v<T, PacsParams>) {
          if (name == "alpha") return p.alpha.real();
          if (name == "m") return p.added;
        } else if constexpr (std::is_same_v<T, HsParams>) {
          if (name == "L") return p.big_l;
          if (name == "M") return p.m_quanta;
          if (name == "eta") return p.eta;
        } else if constexpr (std::is_same_v<T, CoherentParams>) {
          if (name == "alpha") return p.alpha.real();
        } else if constexpr (std::is_same_v<T, FockParams>) {
          if (name == "n") return p.n;
        } else {
          if (name == "p") return p.p;
          if (name == "M") return p.m_quanta;
        }
        unknown_parameter(spec, name);
      },
      spec.params);
}

bool parameter_is_integer(const StateSpec& spec, std::string_view name) {
  const auto fam = spec.family();
  if (fam == "gbs") return name == "N";
  if (fam == "nbs" || fam == "hs" || fam == "binomial") return name == "M";
  if (fam == "pacs") return name == "m";
  if (fam == "fock") return name == "n";
  return false;
}

bool parameter_supports_continuation(const StateSpec& spec, std::string_view name) {
  return spec.family() == "gbs" && name == "N";
}

StateSpec with_parameter(StateSpec spec, std::string_view name, double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("parameter '" + std::string(name) +
                                "' must be finite");
  const bool integral = value == std::floor(value);
  if (parameter_is_integer(spec, name) && !integral &&
      !parameter_supports_continuation(spec, name))
    throw std::invalid_argument("parameter '" + std::string(name) +
                                "' is integer-valued; got " + fmt_real(value));
  auto as_count = [&]() -> std::uint32_t {
    if (value < 0.0 || value > 4e9)
      throw std::invalid_argument("parameter '" + std::string(name) +
                                  "' out of range");
    return static_cast<std::uint32_t>(std::llround(value));
  };
  std::visit(
      [&](auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GbsParams>) {
          if (name == "alpha") p.alpha = value;
          else if (name == "beta") p.beta = value;
          else if (name == "N") p.big_n = value;
          else unknown_parameter(spec, name);
        } else if constexpr (std::is_same_v<T, NbsParams>) {
          if (name == "eta") p.eta = value;
          else if (name == "M") p.m_quanta = as_count();
          else unknown_parameter(spec, name);
        } else if constexpr (std::is_same_v<T, PacsParams>) {
          if (name == "alpha") p.alpha = value;
          else if (name == "m") p.added = as_count();
          else unknown_parameter(spec, name);
        } else if constexpr (std::is_same_v<T, HsParams>) {
          if (name == "L") p.big_l = value;
          else if (name == "M") p.m_quanta = as_count();
          else if (name == "eta") p.eta = value;
          else unknown_parameter(spec, name);
        } else if constexpr (std::is_same_v<T, CoherentParams>) {
          if (name == "alpha") p.alpha = value;
          else unknown_parameter(spec, name);
        } else if constexpr (std::is_same_v<T, FockParams>) {
          if (name == "n") p.n = as_count();
          else unknown_parameter(spec, name);
        } else {
          if (name == "p") p.p = value;
          else if (name == "M") p.m_quanta = as_count();
          else unknown_parameter(spec, name);
        }
      },
      spec.params);
  return spec;
}

// --- closed-form moment series ---

namespace {

double closed_form_nbs(const NbsParams& p, MomentKey key) {
  const auto k = key.dagger_power, l = key.annihilation_power;
  const double m = p.m_quanta;
  if (p.eta == 1.0) {
    // Fock |M>: only diagonal moments survive.
    if (k != l) return 0.0;
    double r = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) r *= m - i;
    return k <= p.m_quanta ? r : 0.0;
  }
  // eta^{M+1} (1-eta)^{-M} sum_n [ C(n+k-l, M) C(n, M) (1-eta)^{2n+k-l}
  //   n!(n+k-l)! ]^{1/2} / (n-l)!  over n >= max(M, M+l-k, l).
  const double log_eta = std::log(p.eta), log_1m = std::log1p(-p.eta);
  const double lfm = log_factorial(m);
  const std::int64_t lo64 =
      std::max<std::int64_t>({p.m_quanta, static_cast<std::int64_t>(p.m_quanta) + l - k, l});
  const double lpref = (m + 1.0) * log_eta - m * log_1m;
  double acc = 0.0;
  const double mean_scale = 2.0 * (m + 1.0) / p.eta + 16.0;
  for (std::int64_t n = lo64;; ++n) {
    const double nn = static_cast<double>(n);
    const double nk = nn + static_cast<double>(k) - static_cast<double>(l);
    const double lt =
        0.5 * (log_factorial(nk) - lfm - log_factorial(nk - m) + log_factorial(nn) -
               lfm - log_factorial(nn - m) + (2.0 * nn + k - l) * log_1m +
               log_factorial(nn) + log_factorial(nk)) -
        log_factorial(nn - l);
    const double t = std::exp(lpref + lt);
    acc += t;
    if (nn > mean_scale && nn > lo64 + 12 && t < 1e-18 * acc) break;
    if (n - lo64 > 20'000'000)
      throw std::runtime_error("closed_form_moment: series did not converge");
  }
  return acc;
}

double closed_form_pacs(const PacsParams& p, MomentKey key) {
  if (p.alpha.imag() != 0.0)
    throw std::invalid_argument("closed_form_moment: photon-added series requires real alpha");
  const auto k = key.dagger_power, l = key.annihilation_power;
  const double a = p.alpha.real();
  const double x = a * a;
  const double m = p.added;

  // Normalization e^{-|alpha|^2} / (m! L_m(-|alpha|^2)) with the Laguerre
  // polynomial by its finite sum.
  double laguerre = 0.0;
  for (std::uint32_t j = 0; j <= p.added; ++j)
    laguerre += binomial_real(m, j) * std::pow(x, j) / std::exp(log_factorial(j));
  const double log_n2 = -x - log_factorial(m) - std::log(laguerre);

  double acc = 0.0;
  for (std::uint32_t n = 0;; ++n) {
    const double shift = static_cast<double>(n) + m - static_cast<double>(l);
    const double top = static_cast<double>(n) + m + k - static_cast<double>(l);
    if (shift >= 0.0 && top >= 0.0) {
      double lt = log_factorial(top) + log_factorial(n + m) - log_factorial(shift) -
                  2.0 * log_factorial(n);
      if (n > 0) {
        if (x == 0.0) break;  // only the n = 0 term survives at alpha = 0
        lt += n * std::log(x);
      }
      acc += std::exp(lt);
      if (n > p.added + l + 12 && n > 4.0 * x && std::exp(lt) < 1e-18 * acc) break;
    }
    if (n > 10'000'000)
      throw std::runtime_error("closed_form_moment: series did not converge");
  }
  return std::exp(log_n2) * acc;
}

double closed_form_hs(const HsParams& p, MomentKey key) {
  const auto k = key.dagger_power, l = key.annihilation_power;
  const double m = p.m_quanta;
  if (std::max(k, l) > p.m_quanta) return 0.0;
  const double le = p.big_l * p.eta, lu = p.big_l * (1.0 - p.eta);
  auto lC = [](double x, double j) {
    return std::lgamma(x + 1.0) - std::lgamma(j + 1.0) - std::lgamma(x - j + 1.0);
  };
  const double lpref =
      log_factorial(m) + std::lgamma(le + 1.0) - std::lgamma(p.big_l + 1.0) +
      0.5 * (std::lgamma(p.big_l - k + 1.0) + std::lgamma(p.big_l - l + 1.0) -
             log_factorial(m - k) - log_factorial(m - l) -
             std::lgamma(le - k + 1.0) - std::lgamma(le - l + 1.0));
  double acc = 0.0;
  for (std::uint32_t n = 0; n <= p.m_quanta - std::max(k, l); ++n) {
    const double nn = n;
    const double lt = 0.5 * (lC(le - k, nn) + lC(lu, m - k - nn) + lC(le - l, nn) +
                             lC(lu, m - l - nn) - lC(p.big_l - k, m - k) -
                             lC(p.big_l - l, m - l));
    acc += std::exp(lt);
  }
  return std::exp(lpref) * acc;
}

}  // namespace

bool has_closed_form(const StateSpec& spec) {
  const auto fam = spec.family();
  return fam == "nbs" || fam == "pacs" || fam == "hs";
}

double closed_form_moment(const StateSpec& spec, MomentKey key) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NbsParams>) return closed_form_nbs(p, key);
        else if constexpr (std::is_same_v<T, PacsParams>) return closed_form_pacs(p, key);
        else if constexpr (std::is_same_v<T, HsParams>) return closed_form_hs(p, key);
        else
          throw std::invalid_argument("closed_form_moment: no closed form for family '" +
                                      std::string(spec.family()) + "'");
      },
      spec.params);
}

}  // namespace focknc
