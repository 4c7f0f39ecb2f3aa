// Copyright 2026 The OpenForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "openforge/config.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "openforge/errors.h"

namespace openforge {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double ToDouble(const std::string &key, std::string_view value) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "not a number: '" + std::string(value) + "'");
  }
  return out;
}

std::int64_t ToInteger(const std::string &key, std::string_view value) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "not an integer: '" + std::string(value) + "'");
  }
  return out;
}

int ToInt(const std::string &key, std::string_view value) {
  std::int64_t v = ToInteger(key, value);
  if (v < -(1LL << 31) || v > (1LL << 31) - 1) {
    throw ConfigError(key, "integer out of range");
  }
  return static_cast<int>(v);
}

void RequirePositive(const char *key, double value) {
  if (!(value > 0)) throw ConfigError(key, "must be positive");
}

}  // namespace

void RunConfig::Validate() const {
  RequirePositive("gamma", gamma);
  if (epsilon < 1) throw ConfigError("epsilon", "must be >= 1");
  RequirePositive("m_sp", m_sp);
  RequirePositive("alpha", alpha);
  RequirePositive("dim_k", dim_k);
  if (!(conv_t > 0 && conv_t < 1)) {
    throw ConfigError("conv_t", "must lie in (0, 1)");
  }
  RequirePositive("max_joint_iters", max_joint_iters);
  RequirePositive("neg_per_pos", neg_per_pos);
  if (em_iters < 0) throw ConfigError("em_iters", "must be >= 0");
  RequirePositive("min_support", min_support);
  RequirePositive("max_epochs", max_epochs);
  RequirePositive("num_trees", num_trees);
  RequirePositive("tree_depth", tree_depth);
}

RunConfig ParseConfig(std::string_view text) {
  RunConfig config;
  using Setter = std::function<void(const std::string &, std::string_view)>;
  const std::map<std::string, Setter> setters = {
      {"gamma", [&](auto &k, auto v) { config.gamma = ToDouble(k, v); }},
      {"epsilon", [&](auto &k, auto v) { config.epsilon = ToInt(k, v); }},
      {"m_sp", [&](auto &k, auto v) { config.m_sp = ToInt(k, v); }},
      {"alpha", [&](auto &k, auto v) { config.alpha = ToDouble(k, v); }},
      {"dim_k", [&](auto &k, auto v) { config.dim_k = ToInt(k, v); }},
      {"conv_t", [&](auto &k, auto v) { config.conv_t = ToDouble(k, v); }},
      {"max_joint_iters",
       [&](auto &k, auto v) { config.max_joint_iters = ToInt(k, v); }},
      {"neg_per_pos", [&](auto &k, auto v) { config.neg_per_pos = ToInt(k, v); }},
      {"em_iters", [&](auto &k, auto v) { config.em_iters = ToInt(k, v); }},
      {"rng_seed",
       [&](auto &k, auto v) {
         std::int64_t seed = ToInteger(k, v);
         if (seed < 0) throw ConfigError(k, "must be non-negative");
         config.rng_seed = static_cast<std::uint64_t>(seed);
       }},
      {"min_support", [&](auto &k, auto v) { config.min_support = ToInt(k, v); }},
      {"max_epochs", [&](auto &k, auto v) { config.max_epochs = ToInt(k, v); }},
      {"num_trees", [&](auto &k, auto v) { config.num_trees = ToInt(k, v); }},
      {"tree_depth", [&](auto &k, auto v) { config.tree_depth = ToInt(k, v); }},
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected 'key = value'", line_no);
    }
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError(key, "unknown key");
    it->second(key, value);
  }
  config.Validate();
  return config;
}

RunConfig LoadConfig(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfig(buffer.str());
}

std::string FormatConfig(const RunConfig &c) {
  std::ostringstream out;
  out.precision(17);
  out << "gamma = " << c.gamma << "\n"
      << "epsilon = " << c.epsilon << "\n"
      << "m_sp = " << c.m_sp << "\n"
      << "alpha = " << c.alpha << "\n"
      << "dim_k = " << c.dim_k << "\n"
      << "conv_t = " << c.conv_t << "\n"
      << "max_joint_iters = " << c.max_joint_iters << "\n"
      << "neg_per_pos = " << c.neg_per_pos << "\n"
      << "em_iters = " << c.em_iters << "\n"
      << "rng_seed = " << c.rng_seed << "\n"
      << "min_support = " << c.min_support << "\n"
      << "max_epochs = " << c.max_epochs << "\n"
      << "num_trees = " << c.num_trees << "\n"
      << "tree_depth = " << c.tree_depth << "\n";
  return out.str();
}

}  // namespace openforge
