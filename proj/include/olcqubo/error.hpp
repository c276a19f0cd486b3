// Copyright 2026 The olcqubo Authors
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
#include <utility>
#include <vector>

namespace olcqubo {

// Invalid arguments are reported with std::invalid_argument. Everything
// below derives from Error so callers can catch pipeline failures in one
// place.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotAcyclicError : public Error {
 public:
  explicit NotAcyclicError(std::vector<std::size_t> cycle)
      : Error(describe(cycle)), cycle_(std::move(cycle)) {}
  const std::vector<std::size_t>& cycle() const { return cycle_; }

 private:
  static std::string describe(const std::vector<std::size_t>& cycle) {
    std::string s = "graph is not acyclic; cycle:";
    for (auto v : cycle) s += " " + std::to_string(v);
    if (!cycle.empty()) s += " " + std::to_string(cycle.front());
    return s;
  }
  std::vector<std::size_t> cycle_;
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class InvalidPathError : public Error {
 public:
  InvalidPathError(std::size_t u, std::size_t v)
      : Error("no edge " + std::to_string(u) + " -> " + std::to_string(v) +
              " in graph"),
        pair_(u, v) {}
  std::pair<std::size_t, std::size_t> offending_pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

class CorruptionError : public Error {
 public:
  using Error::Error;
};

class StitchError : public Error {
 public:
  using Error::Error;
};

}  // namespace olcqubo
