/*
   Copyright 2026 The interference authors

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

namespace interference {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed interval endpoints (outside [0,1] or reversed).
class InvalidInterval : public Error {
public:
    using Error::Error;
};

/// Conditioning on an event of zero probability.
class ZeroConditioningEvent : public Error {
public:
    explicit ZeroConditioningEvent(int index)
        : Error("conditioning event b=" + std::to_string(index) + " has zero probability"),
          index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class PointOutsideDomain : public Error {
public:
    explicit PointOutsideDomain(double x)
        : Error("point " + std::to_string(x) + " lies outside the map domain"), x_(x) {}
    double point() const noexcept { return x_; }

private:
    double x_;
};

/// The normalized deviation for outcome j has a vanishing denominator.
class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(int j)
        : Error("normalized deviation for a=" + std::to_string(j) +
                " is undefined: vanishing denominator"),
          outcome_(j) {}
    int outcome() const noexcept { return outcome_; }

private:
    int outcome_;
};

class NonFiniteLambda : public Error {
public:
    NonFiniteLambda() : Error("normalized deviation is not finite") {}
};

class NotDoubleStochastic : public Error {
public:
    NotDoubleStochastic() : Error("lifted conditional matrix is not double stochastic") {}
};

class ParamsOutOfRange : public Error {
public:
    using Error::Error;
};

/// An ensemble model whose filters or observables break a model invariant.
class InvalidModel : public Error {
public:
    using Error::Error;
};

/// Bad simulation settings or an unparsable configuration document.
class InvalidConfig : public Error {
public:
    using Error::Error;
};

}  // namespace interference
