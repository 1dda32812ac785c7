#include "stsurf/group.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace stsurf {

namespace {

long long reduce(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

GroupDescriptor GroupDescriptor::free(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("Z^d needs 1 <= d <= 8 (got " + std::to_string(d) + ")");
  return GroupDescriptor{d, 0};
}

GroupDescriptor GroupDescriptor::cyclic(long long m) {
  if (m < 2) throw std::invalid_argument("Z/m needs m >= 2 (got " + std::to_string(m) + ")");
  return GroupDescriptor{1, m};
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
  if (text == "Z") return free(1);
  try {
    if (text.rfind("Z^", 0) == 0) return free(std::stoi(text.substr(2)));
    if (text.rfind("Z/", 0) == 0) return cyclic(std::stoll(text.substr(2)));
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unknown group '" + text + "' (expected Z, Z^d or Z/m)");
}

std::string GroupDescriptor::to_string() const {
  if (is_cyclic()) return "Z/" + std::to_string(modulus);
  return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
}

GroupValue::GroupValue(GroupDescriptor g, std::vector<long long> c) : group_(g), c_(std::move(c)) {}

GroupValue GroupValue::zero(const GroupDescriptor& g) {
  return GroupValue(g, std::vector<long long>(static_cast<std::size_t>(g.rank), 0));
}

GroupValue GroupValue::make(const GroupDescriptor& g, std::vector<long long> components) {
  if (static_cast<int>(components.size()) != g.rank) {
    throw std::invalid_argument("value has " + std::to_string(components.size()) + " components, " +
                                g.to_string() + " needs " + std::to_string(g.rank));
  }
  if (g.is_cyclic()) components[0] = reduce(components[0], g.modulus);
  return GroupValue(g, std::move(components));
}

GroupValue GroupValue::unit(const GroupDescriptor& g, int i) {
  if (i < 1 || i > g.rank) throw std::invalid_argument("generator index out of range");
  auto v = zero(g);
  v.c_[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

GroupValue GroupValue::parse(const GroupDescriptor& g, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unterminated value '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<long long> comps;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad group value component '" + item + "'");
    }
    for (std::size_t i = used; i < item.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(item[i]))) {
        throw std::invalid_argument("bad group value component '" + item + "'");
      }
    }
    comps.push_back(v);
  }
  return make(g, std::move(comps));
}

bool GroupValue::is_zero() const {
  for (long long v : c_) {
    if (v != 0) return false;
  }
  return true;
}

long long GroupValue::norm() const {
  if (group_.is_cyclic()) return std::min(c_[0], group_.modulus - c_[0]);
  long long n = 0;
  for (long long v : c_) n += std::llabs(v);
  return n;
}

std::string GroupValue::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ',';
    out << c_[i];
  }
  out << ']';
  return out.str();
}

void GroupValue::check_same(const GroupValue& o) const {
  if (!(group_ == o.group_)) {
    throw std::invalid_argument("group mismatch: " + group_.to_string() + " vs " + o.group_.to_string());
  }
}

GroupValue GroupValue::operator+(const GroupValue& o) const {
  check_same(o);
  std::vector<long long> c(c_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return make(group_, std::move(c));
}

GroupValue GroupValue::operator-(const GroupValue& o) const { return *this + (-o); }

GroupValue GroupValue::operator-() const {
  std::vector<long long> c(c_);
  for (long long& v : c) v = -v;
  return make(group_, std::move(c));
}

GroupValue GroupValue::operator*(long long n) const {
  std::vector<long long> c(c_);
  for (long long& v : c) v *= n;
  return make(group_, std::move(c));
}

RationalCombination RationalCombination::zero(const GroupDescriptor& g) {
  return RationalCombination{g, std::vector<Rational>(static_cast<std::size_t>(g.rank), Rational(0))};
}

void RationalCombination::add(const Rational& r, const GroupValue& f) {
  if (!(f.group() == group)) throw std::invalid_argument("group mismatch in rational combination");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += r * Rational(f.components()[i]);
}

bool RationalCombination::is_zero() const {
  if (group.is_cyclic()) {
    const Rational scaled = components[0] / Rational(group.modulus);
    return boost::multiprecision::denominator(scaled) == 1;
  }
  for (const auto& c : components) {
    if (c != 0) return false;
  }
  return true;
}

std::string RationalCombination::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += stsurf::to_string(components[i]);
  }
  return out + "]";
}

}  // namespace stsurf
