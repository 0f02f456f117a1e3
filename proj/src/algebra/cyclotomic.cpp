#include "surfdyn/algebra/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "surfdyn/error.hpp"

namespace surfdyn {

namespace detail {

namespace {

// Exact division of integer polynomials by a monic divisor (coefficients low to high).
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<long> build_poly(int n) {
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_modulus(d).poly);
  }
  return poly;
}

}  // namespace

const CyclotomicModulus& cyclotomic_modulus(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicModulus>> registry;
  require(n >= 1, ErrorCode::InvalidInput, "cyclotomic order must be >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = registry.find(n); it != registry.end()) return *it->second;
  }
  // Built outside the lock: build_poly recurses into smaller orders.
  auto mod = std::make_unique<CyclotomicModulus>();
  mod->n = n;
  mod->poly = build_poly(n);
  mod->phi = static_cast<int>(mod->poly.size()) - 1;
  const int phi = mod->phi;
  const int table = std::max(n, 2 * phi - 1);
  std::vector<long> cur(static_cast<std::size_t>(phi), 0);
  cur[0] = 1;
  if (phi == 0) cur.clear();
  for (int k = 0; k < table; ++k) {
    mod->power_mod.push_back(cur);
    // cur *= x mod poly
    long carry = cur.empty() ? 0 : cur.back();
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i) - 1];
    if (!cur.empty()) cur[0] = 0;
    for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= carry * mod->poly[static_cast<std::size_t>(i)];
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = registry.emplace(n, std::move(mod));
  return *it->second;
}

}  // namespace detail

using detail::CyclotomicModulus;

Cyclotomic::Cyclotomic(long value) {
  if (value != 0) c_.emplace_back(value);
}

Cyclotomic::Cyclotomic(const mpq_class& value) {
  if (value != 0) {
    c_.push_back(value);
    c_.back().canonicalize();
  }
}

Cyclotomic::Cyclotomic(const CyclotomicModulus* mod, std::vector<mpq_class> coeffs)
    : mod_(mod), c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  normalize();
}

void Cyclotomic::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.size() <= 1) mod_ = nullptr;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long power) {
  require(n >= 1, ErrorCode::InvalidInput, "root of unity order must be >= 1");
  const auto& mod = detail::cyclotomic_modulus(n);
  long j = power % n;
  if (j < 0) j += n;
  const auto& row = mod.power_mod[static_cast<std::size_t>(j)];
  std::vector<mpq_class> coeffs(row.begin(), row.end());
  return Cyclotomic(&mod, std::move(coeffs));
}

Cyclotomic Cyclotomic::gaussian(const mpq_class& re, const mpq_class& im) {
  Cyclotomic out(re);
  if (im != 0) out += Cyclotomic(im) * root_of_unity(4, 1);
  return out;
}

mpq_class Cyclotomic::rational_value() const {
  require(is_rational(), ErrorCode::InvalidInput, "value " + to_string() + " is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0.0;
  const double n = static_cast<double>(order());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    sum += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

Cyclotomic Cyclotomic::promoted(int n) const {
  if (is_rational() || order() == n) return *this;
  require(n % order() == 0, ErrorCode::Internal, "cannot promote Q(zeta_" + std::to_string(order()) +
                                                     ") into Q(zeta_" + std::to_string(n) + ")");
  const auto& target = detail::cyclotomic_modulus(n);
  const int step = n / order();
  std::vector<mpq_class> out(static_cast<std::size_t>(target.phi));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& row = target.power_mod[(i * static_cast<std::size_t>(step)) % static_cast<std::size_t>(n)];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] != 0) out[t] += c_[i] * row[t];
    }
  }
  return Cyclotomic(&target, std::move(out));
}

Cyclotomic Cyclotomic::galois(long j) const {
  if (is_rational()) return *this;
  const int n = order();
  long jj = j % n;
  if (jj < 0) jj += n;
  require(std::gcd(jj, static_cast<long>(n)) == 1, ErrorCode::InvalidInput, "Galois exponent not a unit");
  std::vector<mpq_class> out(static_cast<std::size_t>(mod_->phi));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& row = mod_->power_mod[(i * static_cast<std::size_t>(jj)) % static_cast<std::size_t>(n)];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] != 0) out[t] += c_[i] * row[t];
    }
  }
  return Cyclotomic(mod_, std::move(out));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), ErrorCode::InvalidInput, "division by zero");
  if (is_rational()) return Cyclotomic(mpq_class(1) / c_[0]);
  // a^{-1} = (prod_{sigma != id} sigma(a)) / N(a), N(a) the (rational) field norm.
  const int n = order();
  Cyclotomic cofactor(1);
  for (long j = 2; j < n; ++j) {
    if (std::gcd(j, static_cast<long>(n)) == 1) cofactor *= galois(j);
  }
  const Cyclotomic norm = *this * cofactor;
  require(norm.is_rational(), ErrorCode::Internal, "field norm is not rational");
  return cofactor * Cyclotomic(mpq_class(1) / norm.c_[0]);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

void Cyclotomic::add_scaled(const Cyclotomic& rhs, int sign) {
  if (rhs.is_zero()) return;
  if (!rhs.is_rational() && !is_rational() && rhs.order() != order()) {
    const int l = std::lcm(order(), rhs.order());
    *this = promoted(l);
    add_scaled(rhs.promoted(l), sign);
    return;
  }
  if (is_rational() && !rhs.is_rational()) mod_ = rhs.mod_;
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
    if (sign > 0) {
      c_[i] += rhs.c_[i];
    } else {
      c_[i] -= rhs.c_[i];
    }
  }
  normalize();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  add_scaled(rhs, +1);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  add_scaled(rhs, -1);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    c_.clear();
    mod_ = nullptr;
    return *this;
  }
  if (rhs.is_rational()) {
    for (auto& c : c_) c *= rhs.c_[0];
    return *this;
  }
  if (is_rational()) {
    const mpq_class s = c_[0];
    mod_ = rhs.mod_;
    c_ = rhs.c_;
    for (auto& c : c_) c *= s;
    return *this;
  }
  if (rhs.order() != order()) {
    const int l = std::lcm(order(), rhs.order());
    *this = promoted(l);
    return *this *= rhs.promoted(l);
  }
  const int phi = mod_->phi;
  std::vector<mpq_class> prod(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  std::vector<mpq_class> out(static_cast<std::size_t>(phi));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    if (k < static_cast<std::size_t>(phi)) {
      out[k] += prod[k];
      continue;
    }
    const auto& row = mod_->power_mod[k];
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] != 0) out[t] += prod[k] * row[t];
    }
  }
  c_ = std::move(out);
  normalize();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_rational() && b.is_rational()) return a.c_ == b.c_;
  return (a - b).is_zero();
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "ζ" << order() << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

mpq_class parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  require(!s.empty(), ErrorCode::InvalidInput, "empty rational literal");
  if (s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos) {
    // Decimal literal: exact value of the written decimal, not of a double.
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
      negative = s[0] == '-';
      pos = 1;
    }
    std::string mantissa;
    long exponent = 0;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
      const char ch = s[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        mantissa.push_back(ch);
        if (seen_dot) --exponent;
      } else if (ch == '.' && !seen_dot) {
        seen_dot = true;
      } else if (ch == 'e' || ch == 'E') {
        try {
          exponent += std::stol(s.substr(pos + 1));
        } catch (const std::exception&) {
          fail(ErrorCode::InvalidInput, "bad decimal literal '" + s + "'");
        }
        break;
      } else {
        fail(ErrorCode::InvalidInput, "bad decimal literal '" + s + "'");
      }
    }
    require(!mantissa.empty(), ErrorCode::InvalidInput, "bad decimal literal '" + s + "'");
    mpz_class num(mantissa, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    mpq_class out = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    out.canonicalize();
    return negative ? mpq_class(-out) : out;
  }
  mpq_class out;
  if (s[0] == '+') s.erase(0, 1);
  if (out.set_str(s, 10) != 0) fail(ErrorCode::InvalidInput, "bad rational literal '" + s + "'");
  require(out.get_den() != 0, ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  out.canonicalize();
  return out;
}

namespace {

// Splits "a - b*ζ5^2 + ζ5" into signed terms; '+'/'-' directly after '*', '^', '/',
// 'e' or at the start are part of a literal.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    const bool sign = (ch == '+' || ch == '-');
    const char prev = cur.empty() ? '\0' : cur.back();
    if (sign && !cur.empty() && prev != '*' && prev != '^' && prev != '/' && prev != 'e' && prev != 'E') {
      terms.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  require(!s.empty(), ErrorCode::InvalidInput, "empty scalar literal");
  Cyclotomic total;
  for (std::string term : split_terms(s)) {
    int sign = 1;
    if (term[0] == '+' || term[0] == '-') {
      sign = term[0] == '-' ? -1 : 1;
      term.erase(0, 1);
    }
    std::size_t zpos = std::string::npos;
    std::size_t zlen = 0;
    for (std::string_view marker : {std::string_view("ζ"), std::string_view("zeta")}) {
      if (auto p = term.find(marker); p != std::string::npos) {
        zpos = p;
        zlen = marker.size();
        break;
      }
    }
    mpq_class coeff = 1;
    Cyclotomic factor(1);
    if (zpos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string head = term.substr(0, zpos);
      if (!head.empty()) {
        require(head.back() == '*', ErrorCode::InvalidInput, "expected '*' before root of unity in '" + term + "'");
        head.pop_back();
        coeff = parse_rational(head);
      }
      std::string tail = term.substr(zpos + zlen);
      const auto caret = tail.find('^');
      const std::string order_text = tail.substr(0, caret);
      require(!order_text.empty(), ErrorCode::InvalidInput, "root of unity needs an order, e.g. ζ5^2: '" + term + "'");
      long power = 1;
      int order = 0;
      try {
        order = std::stoi(order_text);
        if (caret != std::string::npos) power = std::stol(tail.substr(caret + 1));
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidInput, "bad root of unity in '" + term + "'");
      }
      factor = root_of_unity(order, power);
    }
    total += Cyclotomic(mpq_class(sign * coeff)) * factor;
  }
  return total;
}

}  // namespace surfdyn
