// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "state_text.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace focknc::cli {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad state spec '" + std::string(text) + "': " + why);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_pairs(std::string_view text, std::string_view body) {
  KeyValues kv;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view pair = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == pair.size())
      fail(text, "expected key=value, got '" + std::string(pair) + "'");
    std::string key{trim(pair.substr(0, eq))};
    if (!kv.emplace(key, trim(pair.substr(eq + 1))).second)
      fail(text, "duplicate key '" + key + "'");
  }
  return kv;
}

class Fields {
 public:
  Fields(std::string_view text, KeyValues kv) : text_(text), kv_(std::move(kv)) {}

  ~Fields() = default;

  std::string_view take(std::string_view key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) fail(text_, "missing key '" + std::string(key) + "'");
    taken_.push_back(it);
    return it->second;
  }

  template <typename Parser>
  auto parse_value(std::string_view key, Parser parser) {
    const auto raw = take(key);
    try {
      return parser(raw);
    } catch (const std::invalid_argument&) {
      fail(text_, "key '" + std::string(key) + "' has invalid value '" +
                      std::string(raw) + "'");
    }
  }

  double real(std::string_view key) { return parse_value(key, parse_real); }
  std::complex<double> cplx(std::string_view key) { return parse_value(key, parse_complex); }

  std::uint32_t count(std::string_view key) {
    const double v = real(key);
    if (v < 0.0 || v != std::floor(v) || v > 4e9)
      fail(text_, "key '" + std::string(key) + "' must be a non-negative integer");
    return static_cast<std::uint32_t>(v);
  }

  void finish() {
    for (auto it : taken_) kv_.erase(it);
    if (!kv_.empty()) fail(text_, "unknown key '" + kv_.begin()->first + "'");
  }

 private:
  std::string_view text_;
  KeyValues kv_;
  std::vector<KeyValues::iterator> taken_;
};

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (text.size() > 1 && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end || text.empty())
    throw std::invalid_argument("not a real number: '" + std::string(text) + "'");
  return v;
}

std::complex<double> parse_complex(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.back() != 'i') return {parse_real(text), 0.0};

  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    const char c = body[pos];
    if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
      split = pos;
      break;
    }
  }
  if (split == std::string_view::npos) {
    // Pure imaginary: "i", "-i", "0.3i".
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body)};
  }
  const double re = parse_real(body.substr(0, split));
  std::string_view imag = body.substr(split);
  double im;
  if (imag == "+") im = 1.0;
  else if (imag == "-") im = -1.0;
  else im = parse_real(imag);
  return {re, im};
}

StateSpec parse_state_spec(std::string_view text) {
  const std::string_view trimmed = trim(text);
  const auto colon = trimmed.find(':');
  if (colon == std::string_view::npos)
    fail(text, "expected 'family:key=value,...'");
  const std::string_view family = trim(trimmed.substr(0, colon));
  Fields fields(text, parse_pairs(text, trimmed.substr(colon + 1)));

  StateSpec spec;
  if (family == "gbs") {
    const double alpha = fields.real("alpha");
    const double beta = fields.real("beta");
    const double big_n = fields.real("N");
    spec.params = GbsParams{alpha, beta, big_n};
  } else if (family == "nbs") {
    const double eta = fields.real("eta");
    const auto m = fields.count("M");
    spec.params = NbsParams{eta, m};
  } else if (family == "pacs") {
    const auto alpha = fields.cplx("alpha");
    const auto m = fields.count("m");
    spec.params = PacsParams{alpha, m};
  } else if (family == "hs") {
    const double big_l = fields.real("L");
    const auto m = fields.count("M");
    const double eta = fields.real("eta");
    spec.params = HsParams{big_l, m, eta};
  } else if (family == "coherent") {
    spec.params = CoherentParams{fields.cplx("alpha")};
  } else if (family == "fock") {
    spec.params = FockParams{fields.count("n")};
  } else if (family == "binomial") {
    const double p = fields.real("p");
    const auto m = fields.count("M");
    spec.params = BinomialParams{p, m};
  } else {
    fail(text, "unknown family '" + std::string(family) +
                   "' (expected gbs, nbs, pacs, hs, coherent, fock or binomial)");
  }
  fields.finish();
  return spec;
}

}  // namespace focknc::cli
