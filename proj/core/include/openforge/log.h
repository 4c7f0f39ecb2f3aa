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

#ifndef OPENFORGE_LOG_H_
#define OPENFORGE_LOG_H_

#include <string>

namespace openforge {

enum class LogLevel { kError = 0, kWarning = 1, kInfo = 2, kDebug = 3 };

// Verbosity comes from OPENFORGE_LOG (error|warning|info|debug or 0-3);
// default warning. Messages go to stderr.
LogLevel CurrentLogLevel();
void SetLogLevel(LogLevel level);

void Log(LogLevel level, const std::string &message);
inline void LogWarning(const std::string &m) { Log(LogLevel::kWarning, m); }
inline void LogInfo(const std::string &m) { Log(LogLevel::kInfo, m); }
inline void LogDebug(const std::string &m) { Log(LogLevel::kDebug, m); }

}  // namespace openforge

#endif  // OPENFORGE_LOG_H_
