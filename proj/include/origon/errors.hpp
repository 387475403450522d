// Copyright 2026 The Origon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace origon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A leg of an angle or the span of a segment is shorter than the tolerance.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

/// A construction step produced a result contradicting an identity that must
/// hold for valid parameters. Always a bug, never a user error.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NotOnArc : public Error {
 public:
  using Error::Error;
};

/// Raised by the original critical-angle construction when the ray n_σ misses
/// the chain A→P→m_σ.
class NoIntersection : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// The canonical ρ_L left its open interval.
class SolutionOutOfRange : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// φ_L(D_R) < φ_L(D_c) < φ_L(D_L) failed.
class BracketViolation : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// The dividing point is an endpoint of (or outside) the minor arc.
class DegenerateDividing : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace origon
