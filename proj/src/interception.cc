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

#include "geomutate/interception.h"

#include <algorithm>
#include <exception>
#include <string>
#include <utility>

#include "geomutate/error.h"

namespace geomutate {

std::string_view ArgKindName(ArgKind kind) {
  switch (kind) {
    case ArgKind::kNumber: return "Number";
    case ArgKind::kPolygon: return "Polygon";
    case ArgKind::kOther: return "Other";
  }
  return "Other";
}

ArgKind ParseArgKind(std::string_view name) {
  if (name == "Number") return ArgKind::kNumber;
  if (name == "Polygon") return ArgKind::kPolygon;
  if (name == "Other") return ArgKind::kOther;
  throw Error(ErrorCode::kMalformedDocument,
              "unknown argument kind '" + std::string(name) + "'");
}

ArgKind KindOf(const Value& v) {
  if (std::holds_alternative<double>(v)) return ArgKind::kNumber;
  if (std::holds_alternative<Polygon>(v)) return ArgKind::kPolygon;
  return ArgKind::kOther;
}

void CheckArgKinds(const OperationDescriptor& op, std::span<const Value> args) {
  if (args.size() != op.arity()) {
    throw Error(ErrorCode::kArgumentKindMismatch,
                op.name + " takes " + std::to_string(op.arity()) +
                    " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (KindOf(args[i]) != op.arg_kinds[i]) {
      throw Error(ErrorCode::kArgumentKindMismatch,
                  op.name + " argument " + std::to_string(i) + " must be " +
                      std::string(ArgKindName(op.arg_kinds[i])));
    }
  }
}

// SutRegistry

void SutRegistry::Register(std::string sut_id,
                           std::vector<OperationDescriptor> operations,
                           Factory factory) {
  for (auto& op : operations) op.sut_id = sut_id;
  entries_.push_back({std::move(sut_id), std::move(operations),
                      std::move(factory)});
}

bool SutRegistry::Contains(std::string_view sut_id) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.sut_id == sut_id; });
}

std::vector<std::string> SutRegistry::SutIds() const {
  std::vector<std::string> ids;
  for (const auto& e : entries_) ids.push_back(e.sut_id);
  return ids;
}

const SutRegistry::Entry& SutRegistry::Find(std::string_view sut_id) const {
  for (const auto& e : entries_) {
    if (e.sut_id == sut_id) return e;
  }
  throw Error(ErrorCode::kUnknownSut,
              "no system under test named '" + std::string(sut_id) + "'");
}

const std::vector<OperationDescriptor>& SutRegistry::ListInterceptableOperations(
    std::string_view sut_id) const {
  return Find(sut_id).operations;
}

const OperationDescriptor& SutRegistry::FindOperation(
    std::string_view sut_id, std::string_view name) const {
  for (const auto& op : Find(sut_id).operations) {
    if (op.name == name) return op;
  }
  throw Error(ErrorCode::kUnknownOperation,
              std::string(sut_id) + " has no operation '" + std::string(name) +
                  "'");
}

std::unique_ptr<Sut> SutRegistry::Create(std::string_view sut_id,
                                         WeaveContext& ctx) const {
  return Find(sut_id).factory(ctx);
}

// WeaveContext

WeaveContext::WeaveContext(const SutRegistry& registry)
    : registry_(registry) {}

WeaveHandle WeaveContext::Weave(Advice advice, std::string_view sut_id) {
  const auto& ops = registry_.ListInterceptableOperations(sut_id);
  if (active_) {
    throw Error(ErrorCode::kAlreadyWoven,
                "advice from " + active_->advice.operator_id +
                    " is already woven");
  }
  const bool matches = std::any_of(ops.begin(), ops.end(), [&](const auto& op) {
    return advice.Matches(op.name);
  });
  if (!matches) {
    throw Error(ErrorCode::kNoMatchingTarget,
                advice.operator_id + " targets no operation of " +
                    std::string(sut_id));
  }
  WeaveHandle handle{next_token_++, std::string(sut_id), advice.operator_id};
  active_ = Active{handle.token, handle.sut_id, std::move(advice)};
  return handle;
}

void WeaveContext::Unweave(const WeaveHandle& handle) {
  if (!active_ || active_->token != handle.token) {
    throw Error(ErrorCode::kStaleHandle,
                "weave handle " + std::to_string(handle.token) +
                    " is not active");
  }
  active_.reset();
}

const Advice* WeaveContext::AdviceFor(std::string_view sut_id,
                                      std::string_view operation) const {
  if (active_ && active_->sut_id == sut_id &&
      active_->advice.Matches(operation)) {
    return &active_->advice;
  }
  return nullptr;
}

// Sut

Sut::Sut(std::string id, WeaveContext& ctx) : id_(std::move(id)), ctx_(ctx) {}

std::vector<OperationDescriptor> Sut::Operations() const {
  std::vector<OperationDescriptor> out;
  for (const auto& op : operations_) out.push_back(op.descriptor);
  return out;
}

void Sut::Expose(const OperationDescriptor& descriptor, Body body) {
  OperationDescriptor d = descriptor;
  d.sut_id = id_;
  operations_.push_back({std::move(d), std::move(body)});
}

const Sut::Operation& Sut::Find(std::string_view name) const {
  for (const auto& op : operations_) {
    if (op.descriptor.name == name) return op;
  }
  throw Error(ErrorCode::kUnknownOperation,
              id_ + " has no operation '" + std::string(name) + "'");
}

Result Sut::InvokeDirect(std::string_view name, std::vector<Value> args) {
  const Operation& op = Find(name);
  CheckArgKinds(op.descriptor, args);
  return op.body(args);
}

Result Sut::Invoke(std::string_view name, std::vector<Value> args) {
  const Operation& op = Find(name);
  CheckArgKinds(op.descriptor, args);
  const Advice* advice = ctx_.AdviceFor(id_, name);
  if (advice == nullptr) return op.body(args);

  try {
    JoinPoint jp = advice->transform(JoinPoint{op.descriptor, std::move(args)});
    CheckArgKinds(op.descriptor, jp.args);
    return op.body(jp.args);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMutantRuntimeError) throw;
    throw Error::MutantRuntime(e.what(), e.code());
  } catch (const std::exception& e) {
    throw Error::MutantRuntime(e.what(), ErrorCode::kMutantRuntimeError);
  }
}

}  // namespace geomutate
