// Copyright 2026 The Geomutate Authors
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

#ifndef GEOMUTATE_INTERCEPTION_H_
#define GEOMUTATE_INTERCEPTION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geomutate/geometry.h"

namespace geomutate {

enum class ArgKind { kNumber, kPolygon, kOther };

std::string_view ArgKindName(ArgKind kind);
ArgKind ParseArgKind(std::string_view name);  // throws kMalformedDocument

// An argument passed to an interceptable operation. double is a Number,
// Polygon a Polygon, and every other alternative counts as Other.
using Value = std::variant<double, Polygon, std::string, PositionFix, CrsTag>;

ArgKind KindOf(const Value& v);

struct OperationDescriptor {
  std::string name;
  std::vector<ArgKind> arg_kinds;
  std::string sut_id;

  std::size_t arity() const { return arg_kinds.size(); }
  friend bool operator==(const OperationDescriptor&,
                         const OperationDescriptor&) = default;
};

struct JoinPoint {
  OperationDescriptor operation;
  std::vector<Value> args;
};

using Transform = std::function<JoinPoint(const JoinPoint&)>;

// Before-advice: rewrites the arguments of matching operations.
struct Advice {
  std::string operator_id;
  Transform transform;
  std::set<std::string, std::less<>> target_names;

  bool Matches(std::string_view operation) const {
    return target_names.contains(operation);
  }
};

struct WeaveHandle {
  std::uint64_t token = 0;
  std::string sut_id;
  std::string operator_id;
};

struct ViewportEntry {
  std::string geofence_id;
  Coordinate screen_center;
  double screen_radius = 0.0;

  friend bool operator==(const ViewportEntry&, const ViewportEntry&) = default;
};

struct ViewportRendering {
  std::vector<ViewportEntry> drawn;

  friend bool operator==(const ViewportRendering&,
                         const ViewportRendering&) = default;
};

struct Parcel {
  std::string id;
  std::string owner_id;
  Polygon shape;

  friend bool operator==(const Parcel&, const Parcel&) = default;
};

// What an interceptable operation returns.
using Result = std::variant<std::monostate, bool, PositionFix,
                            std::vector<std::string>, ViewportRendering,
                            Parcel>;

class Sut;
class WeaveContext;

// The introspection side: which SUTs exist, what they expose, and how to
// build a fresh instance bound to a weave context.
class SutRegistry {
 public:
  using Factory = std::function<std::unique_ptr<Sut>(WeaveContext&)>;

  void Register(std::string sut_id, std::vector<OperationDescriptor> operations,
                Factory factory);

  bool Contains(std::string_view sut_id) const;
  std::vector<std::string> SutIds() const;

  // Registration-ordered. Throws kUnknownSut.
  const std::vector<OperationDescriptor>& ListInterceptableOperations(
      std::string_view sut_id) const;
  const OperationDescriptor& FindOperation(std::string_view sut_id,
                                           std::string_view name) const;
  std::unique_ptr<Sut> Create(std::string_view sut_id, WeaveContext& ctx) const;

 private:
  struct Entry {
    std::string sut_id;
    std::vector<OperationDescriptor> operations;
    Factory factory;
  };
  const Entry& Find(std::string_view sut_id) const;

  std::vector<Entry> entries_;
};

// Holds at most one woven advice. One context per thread of execution.
class WeaveContext {
 public:
  explicit WeaveContext(const SutRegistry& registry);

  WeaveContext(const WeaveContext&) = delete;
  WeaveContext& operator=(const WeaveContext&) = delete;

  // Throws kUnknownSut, kAlreadyWoven or kNoMatchingTarget.
  WeaveHandle Weave(Advice advice, std::string_view sut_id);
  // Throws kStaleHandle.
  void Unweave(const WeaveHandle& handle);

  bool IsWoven() const { return active_.has_value(); }
  const Advice* AdviceFor(std::string_view sut_id,
                          std::string_view operation) const;
  const SutRegistry& registry() const { return registry_; }

 private:
  struct Active {
    std::uint64_t token;
    std::string sut_id;
    Advice advice;
  };

  const SutRegistry& registry_;
  std::optional<Active> active_;
  std::uint64_t next_token_ = 1;
};

// Base for systems under test. Operations exposed here are reachable by name
// and pass through whatever advice the context has woven for them.
class Sut {
 public:
  using Body = std::function<Result(std::span<const Value>)>;

  virtual ~Sut() = default;
  Sut(const Sut&) = delete;
  Sut& operator=(const Sut&) = delete;

  const std::string& id() const { return id_; }
  std::vector<OperationDescriptor> Operations() const;

  // Woven call. Throws kUnknownOperation or kArgumentKindMismatch; failures
  // raised while advice is applied surface as kMutantRuntimeError.
  Result Invoke(std::string_view name, std::vector<Value> args);

  // Runs the body without consulting the context.
  Result InvokeDirect(std::string_view name, std::vector<Value> args);

 protected:
  Sut(std::string id, WeaveContext& ctx);

  // Binds the body for a descriptor listed in the registry for this SUT.
  void Expose(const OperationDescriptor& descriptor, Body body);

 private:
  struct Operation {
    OperationDescriptor descriptor;
    Body body;
  };
  const Operation& Find(std::string_view name) const;

  std::string id_;
  WeaveContext& ctx_;
  std::vector<Operation> operations_;
};

// Throws kArgumentKindMismatch.
void CheckArgKinds(const OperationDescriptor& op, std::span<const Value> args);

}  // namespace geomutate

#endif  // GEOMUTATE_INTERCEPTION_H_
