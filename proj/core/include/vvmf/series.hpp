#pragma once

#include "vvmf/rational.hpp"

#include <span>
#include <vector>

namespace vvmf {

/*
 * Truncated Puiseux series in q:
 *
 *     q^h * (c_0 + c_1 q^(1/e) + ... + c_N q^(N/e)) + O(q^precision)
 *
 * with rational leading exponent h, ramification e >= 1 and exact rational
 * coefficients. Coefficients are held as integer numerators over a single
 * positive common denominator, reduced so that the content is 1.
 *
 * Normal form of a nonzero series: c_0 != 0 and precision = h + (N+1)/e.
 * The zero series has no coefficients and only carries its precision.
 * The ramification is kept minimal (it is reduced whenever every stored index
 * and the coefficient count share a common factor with it).
 *
 * Values are immutable; all arithmetic returns new series and never reports
 * a coefficient beyond the precision both operands justify.
 */
class QExpansion {
public:
    /// The zero series known to O(q^0).
    QExpansion();

    static QExpansion zero(const Rational& precision);
    /// q^lead * sum coeffs[n] q^(n/e) + O(q^(lead + coeffs.size()/e)). Leading zeros are stripped.
    static QExpansion from_coefficients(const Rational& lead, std::span<const Rational> coeffs,
                                        long ramification = 1);
    /// Same, with coefficients numerators[n] / denominator.
    static QExpansion from_integers(const Rational& lead, std::vector<Integer> numerators,
                                    const Integer& denominator = 1, long ramification = 1);
    /// c * q^exponent with relative order `order`.
    static QExpansion monomial(const Rational& exponent, const Rational& c, long order);
    /// c + O(q^precision) for precision > 0.
    static QExpansion constant(const Rational& c, const Rational& precision);
    static QExpansion one(long order) { return monomial(Rational(0), Rational(1), order); }

    bool is_zero() const { return numerators_.empty(); }
    /// h; throws DomainError for the zero series.
    const Rational& leading_exponent() const;
    /// N (last valid index); -1 for the zero series.
    long order() const { return static_cast<long>(numerators_.size()) - 1; }
    long ramification() const { return ramification_; }
    /// First exponent not determined by the stored data.
    const Rational& precision() const { return precision_; }

    /// Coefficient of q^(h + n/e), 0 <= n <= N.
    Rational coefficient(long n) const;
    std::vector<Rational> coefficients() const;
    /// Coefficient of q^x for any x below the precision (0 off the lattice or below h).
    Rational coefficient_at(const Rational& exponent) const;

    std::span<const Integer> numerators() const { return numerators_; }
    const Integer& denominator() const { return denominator_; }

    /// Keeps indices 0..order.
    QExpansion truncated(long order) const;
    /// Drops everything at or above the absolute exponent `precision`.
    QExpansion truncated_at(const Rational& precision) const;

    friend bool operator==(const QExpansion&, const QExpansion&) = default;

private:
    friend struct SeriesAccess;

    void normalize();

    Rational lead_;
    long ramification_ = 1;
    std::vector<Integer> numerators_;
    Integer denominator_ = 1;
    Rational precision_;
};

QExpansion add(const QExpansion& f, const QExpansion& g);
QExpansion negate(const QExpansion& f);
QExpansion subtract(const QExpansion& f, const QExpansion& g);
QExpansion mul(const QExpansion& f, const QExpansion& g);
QExpansion scale(const QExpansion& f, const Rational& c);
/// q^r * f.
QExpansion shift(const QExpansion& f, const Rational& r);
/// Multiplicative inverse; DomainError on the zero series.
QExpansion invert(const QExpansion& f);
/// f^alpha. A fractional alpha needs leading coefficient 1, otherwise DomainError.
QExpansion pow_rational(const QExpansion& f, const Rational& alpha);
/// theta = q d/dq.
QExpansion theta(const QExpansion& f);
/// sum_n outer[n] * inner^n. Requires inner to vanish to order >= 1 at q = 0.
QExpansion compose(std::span<const Rational> outer, const QExpansion& inner);

inline QExpansion operator+(const QExpansion& f, const QExpansion& g) { return add(f, g); }
inline QExpansion operator-(const QExpansion& f, const QExpansion& g) { return subtract(f, g); }
inline QExpansion operator-(const QExpansion& f) { return negate(f); }
inline QExpansion operator*(const QExpansion& f, const QExpansion& g) { return mul(f, g); }
inline QExpansion operator*(const Rational& c, const QExpansion& f) { return scale(f, c); }

}  // namespace vvmf
