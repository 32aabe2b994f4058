/*
 * Copyright 2026 The lowdisc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOWDISC_ERRORS_HPP
#define LOWDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lowdisc {

enum class ErrorCode {
  invalid_argument = 1,  // malformed input, precondition violated
  domain = 2,            // input outside the mathematical domain
  overflow = 3,          // 64-bit integer range exceeded
  budget = 4,            // computation refused, cost budget exceeded
  insufficient_data = 5, // e.g. continued fraction needs more convergents
  io = 6,
  internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lowdisc

#endif  // LOWDISC_ERRORS_HPP
