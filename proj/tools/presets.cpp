// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "presets.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "state_text.hpp"

namespace focknc::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

std::uint32_t parse_steps(const std::string& path, const std::string& value) {
  const double v = parse_real(value);
  if (v < 2.0 || v != std::floor(v) || v > 1e9)
    throw std::invalid_argument(path + ": steps must be an integer >= 2");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::map<std::string, Preset> load_presets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read presets file: " + path);

  std::map<std::string, Preset> presets;
  Preset* current = nullptr;
  std::string line;
  int lineno = 0;
  auto where = [&] { return path + ":" + std::to_string(lineno); };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw std::invalid_argument(where() + ": malformed section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (presets.count(name))
        throw std::invalid_argument(where() + ": duplicate preset '" + name + "'");
      current = &presets[name];
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(where() + ": expected 'key = value'");
    if (!current)
      throw std::invalid_argument(where() + ": key before any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "state") {
      current->state = value;
    } else if (key == "vary") {
      current->vary = value;
    } else if (key == "from") {
      current->from = parse_real(value);
    } else if (key == "to") {
      current->to = parse_real(value);
    } else if (key == "steps") {
      current->steps = parse_steps(where(), value);
    } else if (key == "witnesses") {
      std::istringstream tokens(value);
      std::string tok;
      while (tokens >> tok) current->witnesses.push_back(tok);
    } else {
      throw std::invalid_argument(where() + ": unknown key '" + key + "'");
    }
  }
  return presets;
}

void apply_witness_tokens(const std::vector<std::string>& tokens,
                          std::vector<std::uint32_t>& hoa,
                          std::vector<std::uint32_t>& hosps,
                          std::vector<std::uint32_t>& hos) {
  for (const auto& tok : tokens) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("bad witness token '" + tok +
                                  "' (expected e.g. hoa:5)");
    const std::string kind = tok.substr(0, colon);
    const double order = parse_real(tok.substr(colon + 1));
    if (order < 1.0 || order != std::floor(order) || order > 64.0)
      throw std::invalid_argument("bad witness order in '" + tok + "'");
    const auto o = static_cast<std::uint32_t>(order);
    if (kind == "hoa") hoa.push_back(o);
    else if (kind == "hosps") hosps.push_back(o);
    else if (kind == "hos") hos.push_back(o);
    else
      throw std::invalid_argument("bad witness kind in '" + tok +
                                  "' (expected hoa, hosps or hos)");
  }
}

}  // namespace focknc::cli
