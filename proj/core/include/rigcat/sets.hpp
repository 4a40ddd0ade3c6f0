#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace rigcat {

/// Element of a finite set: a natural number, a label, or a tagged pair
/// produced by the tagged disjoint union (element, tag).
class SetElem {
 public:
  /* implicit */ SetElem(long n) : value_(n) {}
  /* implicit */ SetElem(std::string s) : value_(std::move(s)) {}
  /* implicit */ SetElem(const char* s) : value_(std::string(s)) {}
  SetElem(SetElem inner, int tag);

  bool isNumber() const { return std::holds_alternative<long>(value_); }
  bool isLabel() const { return std::holds_alternative<std::string>(value_); }
  bool isTagged() const { return !isNumber() && !isLabel(); }

  long number() const { return std::get<long>(value_); }
  const std::string& label() const { return std::get<std::string>(value_); }
  const SetElem& inner() const;
  int tag() const;

  friend bool operator==(const SetElem& a, const SetElem& b);
  friend bool operator<(const SetElem& a, const SetElem& b);

 private:
  struct Tagged;
  using TaggedRef = std::shared_ptr<const Tagged>;

  std::variant<long, std::string, TaggedRef> value_;
};

/// A finite set kept in insertion order; equality is order-insensitive.
using FinSet = std::vector<SetElem>;

bool setEq(const FinSet& a, const FinSet& b);

/// The tagged disjoint union {(a,0): a in A} union {(b,1): b in B},
/// enumerated left block first. Neither commutative nor associative as a
/// literal set operation.
FinSet def1Union(const FinSet& a, const FinSet& b);

/// The skeletal disjoint union {n in N : n < |A| + |B|}. Literally
/// commutative and associative, but admits no canonical embeddings.
FinSet def2Union(const FinSet& a, const FinSet& b);

/// True iff a = {0, 1, ..., |a|-1}, the fixed point condition for
/// def2Union(a, {}) = a.
bool isInitialSegment(const FinSet& a);

/// "{(x,0),(y,0),(z,1)}" style rendering in insertion order.
std::string renderSet(const FinSet& s);

}  // namespace rigcat
