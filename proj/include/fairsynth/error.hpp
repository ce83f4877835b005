// Copyright 2026 The fairsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRSYNTH_ERROR_HPP_
#define FAIRSYNTH_ERROR_HPP_

#include <sstream>
#include <stdexcept>
#include <string>

namespace fairsynth {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A privacy-budget spend that would exceed the ledger total. Overspends are
// programming errors in the caller, never data-dependent conditions, so they
// get their own type and abort experiment matrices instead of being flagged.
class OverspendError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

}  // namespace detail

}  // namespace fairsynth

#endif  // FAIRSYNTH_ERROR_HPP_
