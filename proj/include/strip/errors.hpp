/*
   Copyright 2026 The stripcheck Authors

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

#ifndef STRIP_ERRORS_HPP
#define STRIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace strip {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define STRIP_DEFINE_ERROR(Name)                 \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

STRIP_DEFINE_ERROR(IndexOutOfRange);
STRIP_DEFINE_ERROR(DimensionMismatch);
STRIP_DEFINE_ERROR(InexactInput);
STRIP_DEFINE_ERROR(UnsupportedScale);
STRIP_DEFINE_ERROR(InvariantViolation);
STRIP_DEFINE_ERROR(NotEven);
STRIP_DEFINE_ERROR(NotVanishingAtZero);
STRIP_DEFINE_ERROR(SingularityNotRemovable);
STRIP_DEFINE_ERROR(ClosedFormUnavailable);
STRIP_DEFINE_ERROR(NotInKernel);
STRIP_DEFINE_ERROR(InsufficientMargin);

#undef STRIP_DEFINE_ERROR

class NotOddAtPoint : public Error {
public:
    explicit NotOddAtPoint(double point, double residual)
        : Error("function is not odd at t = " + std::to_string(point) +
                " (relative residual " + std::to_string(residual) + ")"),
          point_(point), residual_(residual) {}
    double point() const noexcept { return point_; }
    double residual() const noexcept { return residual_; }

private:
    double point_;
    double residual_;
};

/// Malformed modespec text. Carries the offending field path.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& what)
        : Error("parse error at '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace strip

#endif
