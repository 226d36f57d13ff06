#pragma once

// Exact rational arithmetic, fraction-free linear algebra over the rationals
// and exact polynomial / rational-function interpolation.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "betti_stab/error.hpp"

namespace betti {

// Expression templates off: values are captured by auto and passed to std::min.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "n" for integers, "num/den" otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

inline Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!digits_ok(num, true)) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(BigInt(num_str));
  const std::string_view den = text.substr(slash + 1);
  if (!digits_ok(den, false)) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  const BigInt d(std::string{den});
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(num_str), d);
}

/// Binomial coefficient with the out-of-range convention used by the Betti
/// number formulas: C(a, 0) = 1 for every a, C(a, b) = 0 for b < 0, and
/// C(a, b) = 0 whenever b > 0 and a < b (so every negative a gives 0 there).
inline BigInt binom(long long a, long long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < b) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (long long t = 1; t <= b; ++t) {
    result *= a - b + t;
    result /= t;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Dense matrices

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "matrix rows have inconsistent lengths");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }

  /// Submatrix made of the given columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix out(rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < columns.size(); ++c) out(r, c) = (*this)(r, columns[c]);
    return out;
  }

  std::vector<T> operator*(std::span<const T> x) const {
    if (x.size() != cols_) throw Error(ErrorKind::InvalidArgument, "matrix-vector dimension mismatch");
    std::vector<T> y(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

namespace detail {

/// Bareiss fraction-free forward elimination restricted to the first
/// `pivot_cols` columns (the remaining columns are carried along, as for an
/// augmented right-hand side). Returns the pivot column of each echelon row.
inline std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  BigInt previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous;
      }
      m(i, c) = 0;
    }
    previous = m(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Scales each row by the lcm of its denominators.
inline IntMatrix integer_rows(const RationalMatrix& a) {
  IntMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt scale = 1;
    for (const auto& v : a.row(r)) scale = boost::multiprecision::lcm(scale, denominator(v));
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = numerator(a(r, c)) * (scale / denominator(a(r, c)));
  }
  return m;
}

}  // namespace detail

inline std::size_t rank(IntMatrix m) { return detail::bareiss_echelon(m, m.cols()).size(); }

inline std::size_t rank(const RationalMatrix& a) {
  IntMatrix m = detail::integer_rows(a);
  return detail::bareiss_echelon(m, m.cols()).size();
}

struct LinearSolution {
  std::optional<RationalVector> particular;  // empty when A x = b is inconsistent
  std::vector<RationalVector> nullspace;     // basis of ker(A)
};

/// Solves A x = b exactly. The particular solution sets every free variable
/// to zero; nullspace vector f has a one in free column f and zeros in the
/// other free columns.
inline LinearSolution solve_exact(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length does not match matrix rows");
  const std::size_t n = a.cols();
  RationalMatrix augmented(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = b[r];
  }
  IntMatrix m = detail::integer_rows(augmented);
  const auto pivots = detail::bareiss_echelon(m, n);

  LinearSolution out;
  bool consistent = true;
  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (m(r, n) != 0) consistent = false;
  }

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  // Back-substitution for pivot variables given fixed free variables.
  auto back_substitute = [&](RationalVector x, bool homogeneous) {
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t p = pivots[r];
      Rational acc = homogeneous ? Rational(0) : Rational(m(r, n));
      for (std::size_t c = p + 1; c < n; ++c) {
        if (m(r, c) != 0) acc -= Rational(m(r, c)) * x[c];
      }
      x[p] = acc / Rational(m(r, p));
    }
    return x;
  };

  if (consistent) out.particular = back_substitute(RationalVector(n, Rational(0)), false);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n, Rational(0));
    x[f] = 1;
    out.nullspace.push_back(back_substitute(std::move(x), true));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials

/// Univariate polynomial, coefficients lowest degree first, trailing zeros
/// trimmed so the zero polynomial has no coefficients.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  /// x - root
  static Polynomial linear_factor(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }

  const std::vector<T>& coefficients() const noexcept { return coefficients_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  const T& leading() const { return coefficients_.back(); }

  template <typename U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coefficients_.size(), b.coefficients_.size()), T(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> c = a.coefficients_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coefficients_.size() + b.coefficients_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) { return constant(s) * a; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<T> coefficients_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <typename T>
std::string to_string(const Polynomial<T>& p, std::string_view var = "k") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    const Rational c(p.coefficients()[static_cast<std::size_t>(e)]);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) out << to_string(mag);
    if (e > 0 && denominator(mag) != 1) out << "*";
    if (e > 0) {
      out << var;
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

template <typename T>
RatPolynomial to_rational(const Polynomial<T>& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

/// Quotient and remainder over the rationals; b must be nonzero.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(rem.size() >= b.coefficients().size() ? rem.size() - b.coefficients().size() + 1 : 0);
  const auto& bc = b.coefficients();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rational factor = rem[i + bc.size() - 1] / bc.back();
    quot[i] = factor;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= factor * bc[j];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

/// Monic gcd over the rationals (zero if both inputs are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return RatPolynomial::constant(Rational(1) / a.leading()) * a;
}

// ---------------------------------------------------------------------------
// Rational functions

/// Reduced quotient of integer polynomials. Canonical form: coprime over the
/// rationals, joint content one, positive leading denominator coefficient;
/// zero is 0/1. Two equal functions therefore compare equal structurally.
class RationalFunctionFit {
 public:
  RationalFunctionFit() : denominator_(std::vector<BigInt>{1}) {}

  static RationalFunctionFit from(const RatPolynomial& num, const RatPolynomial& den) {
    if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
    RationalFunctionFit f;
    if (num.is_zero()) return f;
    const RatPolynomial g = gcd(num, den);
    const RatPolynomial p = divmod(num, g).first;
    const RatPolynomial q = divmod(den, g).first;

    BigInt scale = 1;
    for (const auto& c : p.coefficients()) scale = boost::multiprecision::lcm(scale, betti::denominator(c));
    for (const auto& c : q.coefficients()) scale = boost::multiprecision::lcm(scale, betti::denominator(c));
    auto to_int = [&](const RatPolynomial& r) {
      std::vector<BigInt> c;
      for (const auto& v : r.coefficients()) c.push_back(betti::numerator(v * Rational(scale)));
      return c;
    };
    std::vector<BigInt> pc = to_int(p);
    std::vector<BigInt> qc = to_int(q);
    BigInt content = 0;
    for (const auto& v : pc) content = boost::multiprecision::gcd(content, v);
    for (const auto& v : qc) content = boost::multiprecision::gcd(content, v);
    if (qc.back() < 0) content = -content;
    for (auto& v : pc) v /= content;
    for (auto& v : qc) v /= content;
    f.numerator_ = IntPolynomial(std::move(pc));
    f.denominator_ = IntPolynomial(std::move(qc));
    return f;
  }

  static RationalFunctionFit from(const IntPolynomial& num, const IntPolynomial& den) {
    return from(to_rational(num), to_rational(den));
  }

  static RationalFunctionFit constant(const Rational& c) {
    return from(RatPolynomial::constant(c), RatPolynomial::constant(Rational(1)));
  }

  const IntPolynomial& numerator() const noexcept { return numerator_; }
  const IntPolynomial& denominator() const noexcept { return denominator_; }

  /// Value at x, or nothing at a pole.
  std::optional<Rational> evaluate(const Rational& x) const {
    const Rational q = denominator_.evaluate(x);
    if (q == 0) return std::nullopt;
    return numerator_.evaluate(x) / q;
  }

  friend bool operator==(const RationalFunctionFit&, const RationalFunctionFit&) = default;

 private:
  IntPolynomial numerator_;
  IntPolynomial denominator_;
};

inline std::string to_string(const RationalFunctionFit& f, std::string_view var = "k") {
  if (f.denominator().degree() == 0 && f.denominator().leading() == 1) return to_string(f.numerator(), var);
  auto wrap = [var](const IntPolynomial& p) {
    const auto nonzero = std::count_if(p.coefficients().begin(), p.coefficients().end(), [](const BigInt& c) { return c != 0; });
    return nonzero > 1 ? "(" + to_string(p, var) + ")" : to_string(p, var);
  };
  return wrap(f.numerator()) + "/" + wrap(f.denominator());
}

struct Sample {
  long long k;
  Rational value;
};

namespace detail {

inline void check_distinct(std::span<const Sample> samples) {
  std::set<long long> seen;
  for (const auto& s : samples) {
    if (!seen.insert(s.k).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate sample abscissa k = " + std::to_string(s.k));
  }
}

}  // namespace detail

/// Finds p/q with deg p <= deg_num, deg q <= deg_den and q nonvanishing at
/// the samples such that p(k)/q(k) = v at every sample, by solving the
/// homogeneous system p(k) - v q(k) = 0. Needs at least deg_num + deg_den + 2
/// samples so that any fit found is unique.
inline std::optional<RationalFunctionFit> fit_rational_function(std::span<const Sample> samples, int deg_num,
                                                                int deg_den) {
  detail::check_distinct(samples);
  if (deg_num < 0 || deg_den < 0) throw Error(ErrorKind::InvalidArgument, "negative fit degree");
  if (samples.size() < static_cast<std::size_t>(deg_num + deg_den + 2))
    throw Error(ErrorKind::InvalidArgument, "rational fit of degrees (" + std::to_string(deg_num) + "," +
                                                std::to_string(deg_den) + ") needs at least " +
                                                std::to_string(deg_num + deg_den + 2) + " samples");

  const std::size_t unknowns = static_cast<std::size_t>(deg_num + deg_den + 2);
  RationalMatrix system(samples.size(), unknowns);
  for (std::size_t r = 0; r < samples.size(); ++r) {
    Rational power = 1;
    const Rational k(samples[r].k);
    for (int e = 0; e <= std::max(deg_num, deg_den); ++e) {
      if (e <= deg_num) system(r, static_cast<std::size_t>(e)) = power;
      if (e <= deg_den) system(r, static_cast<std::size_t>(deg_num + 1 + e)) = -samples[r].value * power;
      power *= k;
    }
  }
  const RationalVector zero(samples.size(), Rational(0));
  const auto solution = solve_exact(system, zero);

  for (const auto& v : solution.nullspace) {
    RatPolynomial p(std::vector<Rational>(v.begin(), v.begin() + deg_num + 1));
    RatPolynomial q(std::vector<Rational>(v.begin() + deg_num + 1, v.end()));
    if (q.is_zero()) continue;
    const auto fit = RationalFunctionFit::from(p, q);
    const bool reproduces = std::all_of(samples.begin(), samples.end(), [&](const Sample& s) {
      const auto value = fit.evaluate(Rational(s.k));
      return value && *value == s.value;
    });
    if (reproduces) return fit;
  }
  return std::nullopt;
}

/// Lowest-degree fit with deg p <= max_num and deg q <= max_den among the
/// degree pairs the sample count can identify; pairs are tried by increasing
/// total degree, then increasing numerator degree.
inline std::optional<RationalFunctionFit> fit_lowest_degree(std::span<const Sample> samples, int max_num,
                                                            int max_den) {
  detail::check_distinct(samples);
  const int budget = static_cast<int>(samples.size()) - 2;
  for (int total = 0; total <= std::min(budget, max_num + max_den); ++total) {
    for (int dn = std::max(0, total - max_den); dn <= std::min(total, max_num); ++dn) {
      if (auto fit = fit_rational_function(samples, dn, total - dn)) return fit;
    }
  }
  return std::nullopt;
}

/// Polynomial of degree <= deg through every sample (needs deg + 2 samples).
inline std::optional<RatPolynomial> fit_polynomial(std::span<const Sample> samples, int deg) {
  const auto fit = fit_rational_function(samples, deg, 0);
  if (!fit) return std::nullopt;
  const Rational scale = Rational(1) / Rational(fit->denominator().leading());
  return RatPolynomial::constant(scale) * to_rational(fit->numerator());
}

}  // namespace betti
