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

#include "openforge/log.h"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string_view>

namespace openforge {

namespace {

LogLevel LevelFromEnv() {
  const char *env = std::getenv("OPENFORGE_LOG");
  if (env == nullptr) return LogLevel::kWarning;
  std::string_view v(env);
  if (v == "error" || v == "0") return LogLevel::kError;
  if (v == "info" || v == "2") return LogLevel::kInfo;
  if (v == "debug" || v == "3") return LogLevel::kDebug;
  return LogLevel::kWarning;
}

std::atomic<int> &Level() {
  static std::atomic<int> level(static_cast<int>(LevelFromEnv()));
  return level;
}

const char *Tag(LogLevel level) {
  switch (level) {
    case LogLevel::kError:
      return "E";
    case LogLevel::kWarning:
      return "W";
    case LogLevel::kInfo:
      return "I";
    case LogLevel::kDebug:
      return "D";
  }
  return "?";
}

}  // namespace

LogLevel CurrentLogLevel() { return static_cast<LogLevel>(Level().load()); }

void SetLogLevel(LogLevel level) { Level().store(static_cast<int>(level)); }

void Log(LogLevel level, const std::string &message) {
  if (static_cast<int>(level) > Level().load()) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::cerr << "[" << Tag(level) << "] " << message << "\n";
}

}  // namespace openforge
