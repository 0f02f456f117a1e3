#include "surfdyn/algebra/multi_index.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "surfdyn/error.hpp"

namespace surfdyn {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  require(!exponents_.empty(), ErrorCode::InvalidInput, "multi-index needs dimension >= 1");
  for (int e : exponents_) require(e >= 0, ErrorCode::InvalidInput, "negative exponent in multi-index");
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex MultiIndex::unit(int dimension, int coordinate) {
  std::vector<int> e(static_cast<std::size_t>(dimension), 0);
  e[static_cast<std::size_t>(coordinate)] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require(dimension() == other.dimension(), ErrorCode::DimensionMismatch, "multi-index dimensions differ");
  std::vector<int> e = exponents_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return MultiIndex(std::move(e));
}

long MultiIndex::dot(std::span<const long> weights) const {
  require(static_cast<int>(weights.size()) == dimension(), ErrorCode::DimensionMismatch, "weight vector size");
  long s = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) s += weights[i] * exponents_[i];
  return s;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exponents_.size(); ++i) os << (i ? "," : "") << exponents_[i];
  os << ')';
  return os.str();
}

namespace {

void append_degree(int dimension, int degree, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  const int slot = static_cast<int>(prefix.size());
  if (slot == dimension - 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    append_degree(dimension, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialBasis::MonomialBasis(int dimension, int order) : dimension_(dimension), order_(order) {
  require(dimension >= 1, ErrorCode::InvalidInput, "dimension must be >= 1");
  require(order >= 0, ErrorCode::InvalidInput, "order must be >= 0");
  std::vector<int> prefix;
  for (int d = 0; d <= order; ++d) {
    degree_begin_.push_back(static_cast<int>(monomials_.size()));
    append_degree(dimension, d, prefix, monomials_);
  }
  degree_begin_.push_back(static_cast<int>(monomials_.size()));

  // Mixed-radix codes in base 2*order+1 so that codes add without carry for
  // any product of two basis monomials (exponents stay <= 2*order).
  const long radix = 2L * order + 1;
  long span = 1;
  for (int i = 0; i < dimension; ++i) span *= radix;
  code_to_index_.assign(static_cast<std::size_t>(span), -1);
  for (std::size_t idx = 0; idx < monomials_.size(); ++idx) {
    long code = 0;
    long scale = 1;
    for (int i = 0; i < dimension; ++i) {
      code += monomials_[idx][i] * scale;
      scale *= radix;
    }
    codes_.push_back(code);
    code_to_index_[static_cast<std::size_t>(code)] = static_cast<int>(idx);
  }
}

int MonomialBasis::index_of(const MultiIndex& n) const {
  require(n.dimension() == dimension_, ErrorCode::DimensionMismatch, "multi-index dimension differs from basis");
  if (n.degree() > order_) return -1;
  const long radix = 2L * order_ + 1;
  long code = 0;
  long scale = 1;
  for (int i = 0; i < dimension_; ++i) {
    code += n[i] * scale;
    scale *= radix;
  }
  return code_to_index_[static_cast<std::size_t>(code)];
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int dimension, int order) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dimension, order}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(dimension, order);
  return slot;
}

}  // namespace surfdyn
