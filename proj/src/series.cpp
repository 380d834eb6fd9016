#include "patavoid/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace patavoid {

namespace {
const BigInt kZero = 0;
}

TruncSeries::TruncSeries(long offset, std::vector<BigInt> coeffs, long trunc)
    : offset_(offset), coeffs_(std::move(coeffs)), trunc_(trunc) {
  trim();
}

void TruncSeries::trim() {
  // drop coefficients above the truncation order
  if (offset_ + static_cast<long>(coeffs_.size()) - 1 > trunc_) {
    const long keep = trunc_ - offset_ + 1;
    coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    offset_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) offset_ = 0;
}

TruncSeries TruncSeries::zero(long trunc) { return TruncSeries(0, {}, trunc); }

TruncSeries TruncSeries::one(long trunc) {
  return TruncSeries(0, {BigInt(1)}, trunc);
}

TruncSeries TruncSeries::monomial(BigInt coef, long exp, long trunc) {
  return TruncSeries(exp, {std::move(coef)}, trunc);
}

TruncSeries TruncSeries::one_minus_xpow(long d, long trunc) {
  if (d < 1) throw std::invalid_argument("one_minus_xpow requires d >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, BigInt(0));
  c.front() = 1;
  c.back() = -1;
  return TruncSeries(0, std::move(c), trunc);
}

TruncSeries TruncSeries::from_coeffs(long offset, std::vector<BigInt> coeffs,
                                     long trunc) {
  return TruncSeries(offset, std::move(coeffs), trunc);
}

const BigInt& TruncSeries::coeff(long e) const {
  if (e > trunc_) {
    throw std::out_of_range("coefficient above truncation order is unknown");
  }
  if (e < offset_ || e >= offset_ + static_cast<long>(coeffs_.size())) {
    return kZero;
  }
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

std::vector<BigInt> TruncSeries::coeff_range(long lo, long hi) const {
  std::vector<BigInt> out;
  out.reserve(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0);
  for (long e = lo; e <= hi; ++e) out.push_back(coeff(e));
  return out;
}

TruncSeries TruncSeries::shifted(long e) const {
  TruncSeries out = *this;
  out.trunc_ += e;
  if (!out.coeffs_.empty()) out.offset_ += e;
  return out;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const long trunc = std::min(a.trunc_, b.trunc_);
  if (a.is_zero()) return TruncSeries(b.offset_, b.coeffs_, trunc);
  if (b.is_zero()) return TruncSeries(a.offset_, a.coeffs_, trunc);
  const long lo = std::min(a.offset_, b.offset_);
  const long hi = std::min(
      trunc, std::max(a.offset_ + static_cast<long>(a.coeffs_.size()),
                      b.offset_ + static_cast<long>(b.coeffs_.size())) -
                 1);
  if (hi < lo) return TruncSeries::zero(trunc);
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
  auto accumulate = [&](const TruncSeries& s) {
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      const long e = s.offset_ + static_cast<long>(i);
      if (e > hi) break;
      c[static_cast<std::size_t>(e - lo)] += s.coeffs_[i];
    }
  };
  accumulate(a);
  accumulate(b);
  return TruncSeries(lo, std::move(c), trunc);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  return a + (-b);
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    return TruncSeries::zero(std::min(a.trunc_, b.trunc_));
  }
  const long trunc = std::min(a.trunc_ + b.offset_, b.trunc_ + a.offset_);
  const long lo = a.offset_ + b.offset_;
  if (lo > trunc) return TruncSeries::zero(trunc);
  std::vector<BigInt> c(static_cast<std::size_t>(trunc - lo + 1), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    const long ea = a.offset_ + static_cast<long>(i);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const long e = ea + b.offset_ + static_cast<long>(j);
      if (e > trunc) break;
      if (b.coeffs_[j] == 0) continue;
      c[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncSeries(lo, std::move(c), trunc);
}

TruncSeries TruncSeries::inverse() const {
  if (is_zero() || offset_ != 0 || (coeffs_[0] != 1 && coeffs_[0] != -1)) {
    throw std::domain_error(
        "series inversion requires constant term +1 or -1");
  }
  if (trunc_ < 0) throw std::domain_error("cannot invert below order 0");
  const BigInt& c0 = coeffs_[0];  // self-inverse
  std::vector<BigInt> b(static_cast<std::size_t>(trunc_) + 1, BigInt(0));
  b[0] = c0;
  for (long n = 1; n <= trunc_; ++n) {
    BigInt s = 0;
    const long jmax = std::min<long>(n, static_cast<long>(coeffs_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) {
      s += coeffs_[static_cast<std::size_t>(j)] *
           b[static_cast<std::size_t>(n - j)];
    }
    b[static_cast<std::size_t>(n)] = -c0 * s;
  }
  return TruncSeries(0, std::move(b), trunc_);
}

bool TruncSeries::operator==(const TruncSeries& other) const {
  return trunc_ == other.trunc_ && offset_ == other.offset_ &&
         coeffs_ == other.coeffs_;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (any) os << " + ";
    os << coeffs_[i] << "*x^" << offset_ + static_cast<long>(i);
    any = true;
  }
  if (!any) os << "0";
  os << " (order " << trunc_ << ")";
  return os.str();
}

bool MultiPoly::GrlexLess::operator()(const Exponents& a,
                                      const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("nvars must be >= 0");
}

MultiPoly::MultiPoly(int nvars, std::vector<int> caps) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("nvars must be >= 0");
  if (static_cast<int>(caps.size()) != nvars) {
    throw std::invalid_argument("caps size must equal nvars");
  }
  for (int c : caps) {
    if (c < 0) throw std::invalid_argument("caps must be >= 0");
  }
  caps_ = std::move(caps);
}

MultiPoly MultiPoly::constant(int nvars, BigInt c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw std::invalid_argument("variable index out of range");
  }
  MultiPoly p(nvars);
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

bool MultiPoly::within_caps(const Exponents& e) const {
  if (!caps_) return true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > (*caps_)[i]) return false;
  }
  return true;
}

const BigInt& MultiPoly::coeff(const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_) {
    throw std::invalid_argument("exponent vector has wrong arity");
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw std::invalid_argument("exponent vector has wrong arity");
  }
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("exponents must be >= 0");
  }
  if (c == 0 || !within_caps(e)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::with_caps(std::vector<int> caps) const {
  MultiPoly out(nvars_, std::move(caps));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

namespace {

std::optional<std::vector<int>> combine_caps(const MultiPoly& a,
                                             const MultiPoly& b) {
  if (!a.caps() && !b.caps()) return std::nullopt;
  if (a.caps() && !b.caps()) return a.caps();
  if (!a.caps() && b.caps()) return b.caps();
  std::vector<int> out(a.caps()->size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::min((*a.caps())[i], (*b.caps())[i]);
  }
  return out;
}

MultiPoly make_result(int nvars, const std::optional<std::vector<int>>& caps) {
  return caps ? MultiPoly(nvars, *caps) : MultiPoly(nvars);
}

void require_same_arity(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("operands have different variable counts");
  }
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out = make_result(a.nvars(), combine_caps(a, b));
  for (const auto& [e, c] : a.terms()) out.add_term(e, c);
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = caps_ ? MultiPoly(nvars_, *caps_) : MultiPoly(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a, b);
  MultiPoly out = make_result(a.nvars(), combine_caps(a, b));
  MultiPoly::Exponents e(static_cast<std::size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& num, const MultiPoly& den) {
  require_same_arity(num, den);
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.caps() || den.caps()) {
    throw std::domain_error("exact division requires uncapped operands");
  }
  const auto& dlead = *den.terms_.rbegin();
  MultiPoly quotient(num.nvars_);
  MultiPoly rem = num;
  Exponents shift(static_cast<std::size_t>(num.nvars_));
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      const int d = rlead.first[i] - dlead.first[i];
      if (d < 0) {
        throw std::domain_error("polynomial division leaves a remainder");
      }
      shift[i] = d;
    }
    if (rlead.second % dlead.second != 0) {
      throw std::domain_error("polynomial division leaves a remainder");
    }
    const BigInt c = rlead.second / dlead.second;
    quotient.add_term(shift, c);
    // rem -= c * x^shift * den
    MultiPoly t(num.nvars_);
    t.add_term(shift, c);
    rem = rem - t * den;
  }
  return quotient;
}

TruncSeries MultiPoly::substitute_powers(long n_max) const {
  std::vector<BigInt> c(static_cast<std::size_t>(n_max) + 1, BigInt(0));
  for (const auto& [e, coef] : terms_) {
    long weight = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      weight += static_cast<long>(i + 1) * e[i];
    }
    if (weight <= n_max) c[static_cast<std::size_t>(weight)] += coef;
  }
  return TruncSeries::from_coeffs(0, std::move(c), n_max);
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::string MultiPoly::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& [e, c] : terms_) {
    if (any) os << " + ";
    os << c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) os << "*x" << i + 1 << "^" << e[i];
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

}  // namespace patavoid
