// Copyright 2026 The glwb Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glwb {

// Base of every library exception. code() is a stable identifier.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("SyntaxError", "at " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// Raised by transformation passes when a precondition does not hold.
class PassError : public Error {
 public:
  using Error::Error;
};

}  // namespace glwb
