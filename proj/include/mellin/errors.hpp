/*
   Copyright 2026 The mellin-calculus authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace mellin {

/// Invalid input: a documented precondition was violated before any
/// computation started.  Maps to CLI exit code 2.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& msg)
      : std::invalid_argument(msg) {}
};

/// Numerical failure during an otherwise valid computation (divergence,
/// precision exhaustion, budget overrun).  Maps to CLI exit code 3.
class numerics_error : public std::runtime_error {
 public:
  explicit numerics_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Power-series evaluation cannot reach the requested tolerance because
/// intermediate terms exhaust double precision or overflow.  Callers are
/// expected to switch to a contour-integral evaluation path.
class series_overflow_error : public numerics_error {
 public:
  explicit series_overflow_error(const std::string& msg)
      : numerics_error(msg) {}
};

}  // namespace mellin
