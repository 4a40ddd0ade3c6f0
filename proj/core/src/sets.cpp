#include "rigcat/sets.hpp"

#include <algorithm>

namespace rigcat {

struct SetElem::Tagged {
  SetElem elem;
  int tag;
};

SetElem::SetElem(SetElem inner, int tag)
    : value_(std::make_shared<const Tagged>(Tagged{std::move(inner), tag})) {}

const SetElem& SetElem::inner() const { return std::get<TaggedRef>(value_)->elem; }

int SetElem::tag() const { return std::get<TaggedRef>(value_)->tag; }

bool operator==(const SetElem& a, const SetElem& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.isNumber()) return a.number() == b.number();
  if (a.isLabel()) return a.label() == b.label();
  return a.tag() == b.tag() && a.inner() == b.inner();
}

bool operator<(const SetElem& a, const SetElem& b) {
  if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index();
  if (a.isNumber()) return a.number() < b.number();
  if (a.isLabel()) return a.label() < b.label();
  if (a.tag() != b.tag()) return a.tag() < b.tag();
  return a.inner() < b.inner();
}

bool setEq(const FinSet& a, const FinSet& b) {
  if (a.size() != b.size()) return false;
  FinSet sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return std::equal(sa.begin(), sa.end(), sb.begin());
}

FinSet def1Union(const FinSet& a, const FinSet& b) {
  FinSet out;
  out.reserve(a.size() + b.size());
  for (const SetElem& x : a) out.emplace_back(x, 0);
  for (const SetElem& y : b) out.emplace_back(y, 1);
  return out;
}

FinSet def2Union(const FinSet& a, const FinSet& b) {
  FinSet out;
  out.reserve(a.size() + b.size());
  for (long n = 0; n < static_cast<long>(a.size() + b.size()); ++n) out.emplace_back(n);
  return out;
}

bool isInitialSegment(const FinSet& a) {
  FinSet sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (long n = 0; n < static_cast<long>(sorted.size()); ++n) {
    if (!sorted[static_cast<std::size_t>(n)].isNumber()) return false;
    if (sorted[static_cast<std::size_t>(n)].number() != n) return false;
  }
  return true;
}

namespace {

void renderElem(const SetElem& e, std::string& out) {
  if (e.isNumber()) {
    out += std::to_string(e.number());
  } else if (e.isLabel()) {
    out += e.label();
  } else {
    out += '(';
    renderElem(e.inner(), out);
    out += ',';
    out += std::to_string(e.tag());
    out += ')';
  }
}

}  // namespace

std::string renderSet(const FinSet& s) {
  std::string out = "{";
  bool sep = false;
  for (const SetElem& e : s) {
    if (sep) out += ',';
    renderElem(e, out);
    sep = true;
  }
  out += '}';
  return out;
}

}  // namespace rigcat
