#include "surfgraph/polynomial.hpp"

#include <map>
#include <sstream>

#include "surfgraph/error.hpp"

namespace surfgraph {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw Error(ErrorKind::Parse, "bad rational '" + text + "'");
  }
}

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::constant(BigInt c) { return IntegerPolynomial({std::move(c)}); }

IntegerPolynomial IntegerPolynomial::monomial(BigInt c, int degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coefficient(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : BigInt(0);
}

BigInt IntegerPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::pow(int e) const {
  IntegerPolynomial result = constant(1);
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string IntegerPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<Rational> lagrange_interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n);
  for (std::size_t i = 0; i < n; ++i) {
    // basis numerator: prod_{j != i} (x - x_j), ascending coefficients
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    if (denom == 0) throw Error(ErrorKind::Internal, "repeated interpolation node");
    const Rational scale = Rational(ys[i]) / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * scale;
  }
  while (!result.empty() && result.back() == 0) result.pop_back();
  return result;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntegerPolynomial interpolate(const std::vector<BigInt>& counts_from_one) {
  std::vector<BigInt> xs(counts_from_one.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<long>(i + 1);
  const auto rational = lagrange_interpolate(xs, counts_from_one);
  std::vector<BigInt> coeffs;
  coeffs.reserve(rational.size());
  for (std::size_t i = 0; i < rational.size(); ++i) {
    if (boost::multiprecision::denominator(rational[i]) != 1) {
      throw Error(ErrorKind::NonIntegerCoefficients,
                  "coefficient of degree " + std::to_string(i) + " is " + to_string(rational[i]));
    }
    coeffs.push_back(boost::multiprecision::numerator(rational[i]));
  }
  return IntegerPolynomial(std::move(coeffs));
}

QuasiPolynomial::QuasiPolynomial(int period, std::vector<std::vector<Rational>> constituents)
    : period_(period), constituents_(std::move(constituents)) {
  if (period_ < 1 || static_cast<int>(constituents_.size()) != period_) {
    throw Error(ErrorKind::Internal, "quasipolynomial needs one constituent per residue class");
  }
}

const std::vector<Rational>& QuasiPolynomial::constituent_for(std::int64_t n) const {
  const std::int64_t r = ((n % period_) + period_) % period_;
  return constituents_[static_cast<std::size_t>(r)];
}

Rational QuasiPolynomial::evaluate(std::int64_t n) const {
  return surfgraph::evaluate(constituent_for(n), Rational(n));
}

namespace {

QuasiPolynomial fit_with(const std::function<BigInt(std::int64_t)>& sample, std::int64_t available,
                         int degree_bound, int max_period) {
  const int per_class = degree_bound + 2;
  for (int p = 1; p <= max_period; ++p) {
    if (static_cast<std::int64_t>(p) * per_class > available) break;
    std::vector<std::vector<Rational>> constituents(p);
    bool fits = true;
    for (int r = 0; r < p && fits; ++r) {
      // class r holds k ≡ r (mod p); the first such k ≥ 1
      const std::int64_t first = r == 0 ? p : r;
      std::vector<BigInt> xs, ys;
      for (int i = 0; i < degree_bound + 1; ++i) {
        const std::int64_t k = first + static_cast<std::int64_t>(i) * p;
        xs.emplace_back(k);
        ys.push_back(sample(k));
      }
      constituents[r] = lagrange_interpolate(xs, ys);
      const std::int64_t check = first + static_cast<std::int64_t>(degree_bound + 1) * p;
      fits = surfgraph::evaluate(constituents[r], Rational(check)) == Rational(sample(check));
    }
    if (fits) return QuasiPolynomial(p, std::move(constituents));
  }
  throw Error(ErrorKind::NoFit, "no period <= " + std::to_string(max_period) +
                                    " reproduces the samples with degree <= " +
                                    std::to_string(degree_bound));
}

}  // namespace

QuasiPolynomial fit_quasipolynomial(const std::function<BigInt(std::int64_t)>& count, int degree_bound,
                                    int max_period) {
  std::map<std::int64_t, BigInt> memo;
  auto sample = [&](std::int64_t k) -> BigInt {
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, count(k)).first;
    return it->second;
  };
  return fit_with(sample, static_cast<std::int64_t>(max_period) * (degree_bound + 2), degree_bound,
                  max_period);
}

QuasiPolynomial fit_quasipolynomial(const std::vector<BigInt>& samples_from_one, int degree_bound,
                                    int max_period) {
  auto sample = [&](std::int64_t k) { return samples_from_one[static_cast<std::size_t>(k - 1)]; };
  return fit_with(sample, static_cast<std::int64_t>(samples_from_one.size()), degree_bound, max_period);
}

}  // namespace surfgraph
