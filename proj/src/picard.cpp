#include "ulrich_lab/picard.hpp"

#include <cctype>

#include "ulrich_lab/error.hpp"

namespace ulrich_lab {

namespace {

void require_same_lattice(const DivisorClass& x, const DivisorClass& y) {
  if (x.num_exceptional() != y.num_exceptional()) {
    throw Error(ErrorCode::LatticeMismatch, "classes have " + std::to_string(x.num_exceptional()) +
                                                " and " + std::to_string(y.num_exceptional()) +
                                                " exceptional coordinates");
  }
}

class DivisorParser {
 public:
  explicit DivisorParser(std::string_view text) : text_(text) {}

  DivisorClass parse() {
    expect('(');
    Integer a = integer();
    expect(';');
    std::vector<Integer> b;
    b.push_back(integer());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      b.push_back(integer());
      skip_ws();
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters after divisor");
    return DivisorClass(std::move(a), std::move(b));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(start, "expected integer");
    return *parse_integer(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DivisorClass DivisorClass::zero(int t) { return DivisorClass(0, std::vector<Integer>(t, 0)); }

bool DivisorClass::is_zero() const {
  if (a_ != 0) return false;
  for (const auto& v : b_) {
    if (v != 0) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_lattice(*this, other);
  a_ += other.a_;
  for (std::size_t i = 0; i < b_.size(); ++i) b_[i] += other.b_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_lattice(*this, other);
  a_ -= other.a_;
  for (std::size_t i = 0; i < b_.size(); ++i) b_[i] -= other.b_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Integer& k) {
  a_ *= k;
  for (auto& v : b_) v *= k;
  return *this;
}

std::strong_ordering operator<=>(const DivisorClass& x, const DivisorClass& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  const std::size_t n = std::min(x.b_.size(), y.b_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.b_[i] != y.b_[i]) {
      return x.b_[i] < y.b_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return x.b_.size() <=> y.b_.size();
}

DelPezzoSurface::DelPezzoSurface(int degree) : degree_(degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "del Pezzo degree must lie in [3, 8], got " + std::to_string(degree));
  }
}

DivisorClass DelPezzoSurface::line_class() const {
  DivisorClass l = zero();
  return DivisorClass(1, l.b());
}

DivisorClass DelPezzoSurface::exceptional_class(int i) const {
  if (i < 1 || i > num_exceptional()) {
    throw Error(ErrorCode::InvalidArgument, "no exceptional curve E_" + std::to_string(i));
  }
  std::vector<Integer> b(num_exceptional(), 0);
  b[i - 1] = -1;  // E_i = 0L - (-1)E_i
  return DivisorClass(0, std::move(b));
}

DivisorClass DelPezzoSurface::canonical_class() const {
  return DivisorClass(-3, std::vector<Integer>(num_exceptional(), -1));
}

DivisorClass DelPezzoSurface::anticanonical_class() const {
  return DivisorClass(3, std::vector<Integer>(num_exceptional(), 1));
}

DivisorClass DelPezzoSurface::fiber_class() const {
  std::vector<Integer> b(num_exceptional(), 0);
  b[0] = 1;
  return DivisorClass(1, std::move(b));
}

void DelPezzoSurface::require_on_surface(const DivisorClass& x) const {
  if (x.num_exceptional() != num_exceptional()) {
    throw Error(ErrorCode::LatticeMismatch,
                "class " + format_divisor(x) + " does not live on X_" + std::to_string(degree_));
  }
}

Integer intersect(const DivisorClass& x, const DivisorClass& y) {
  require_same_lattice(x, y);
  Integer result = x.a() * y.a();
  for (std::size_t i = 0; i < x.b().size(); ++i) result -= x.b()[i] * y.b()[i];
  return result;
}

Integer intersect(const DivisorClass& x, const DivisorClass& y, const DelPezzoSurface& s) {
  s.require_on_surface(x);
  s.require_on_surface(y);
  return intersect(x, y);
}

DivisorClass permute_exceptionals(const DivisorClass& x, std::span<const int> p) {
  const int t = x.num_exceptional();
  if (static_cast<int>(p.size()) != t) {
    throw Error(ErrorCode::BadPermutation, "permutation acts on " + std::to_string(p.size()) +
                                               " symbols, class has " + std::to_string(t));
  }
  std::vector<bool> seen(t, false);
  std::vector<Integer> b(t);
  for (int i = 0; i < t; ++i) {
    const int target = p[i];
    if (target < 0 || target >= t || seen[target]) {
      throw Error(ErrorCode::BadPermutation, "not a bijection on the exceptional curves");
    }
    seen[target] = true;
    b[target] = x.b()[i];
  }
  return DivisorClass(x.a(), std::move(b));
}

DivisorClass parse_divisor(std::string_view text) { return DivisorParser(text).parse(); }

DivisorClass parse_divisor(std::string_view text, const DelPezzoSurface& s) {
  DivisorClass d = parse_divisor(text);
  if (d.num_exceptional() != s.num_exceptional()) {
    throw ParseError(text.size(), "expected " + std::to_string(s.num_exceptional()) +
                                      " exceptional coefficients, got " +
                                      std::to_string(d.num_exceptional()));
  }
  return d;
}

std::string format_divisor(const DivisorClass& x) {
  std::string out = "(" + x.a().str() + ";";
  for (std::size_t i = 0; i < x.b().size(); ++i) {
    if (i) out += ",";
    out += x.b()[i].str();
  }
  return out + ")";
}

}  // namespace ulrich_lab
