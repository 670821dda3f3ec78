#include "vvmf/series.hpp"

#include <algorithm>
#include <numeric>

namespace vvmf {

namespace {

long to_long(const Integer& n) {
    if (!n.fits_slong_p()) throw DomainError("series index out of machine range");
    return n.get_si();
}

// (x - base) * e, which must be an integer.
long lattice_index(const Rational& x, const Rational& base, long e) {
    Rational scaled = (x - base) * Rational(e);
    if (!scaled.is_integer()) throw DomainError("exponent off the coefficient lattice");
    return to_long(scaled.num());
}

long ceil_long(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return to_long(q);
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace

struct SeriesAccess {
    static QExpansion make(Rational lead, long e, std::vector<Integer> nums, Integer den, Rational precision) {
        QExpansion out;
        out.lead_ = std::move(lead);
        out.ramification_ = e;
        out.numerators_ = std::move(nums);
        out.denominator_ = std::move(den);
        out.precision_ = std::move(precision);
        out.normalize();
        return out;
    }
    static std::vector<Integer>& nums(QExpansion& f) { return f.numerators_; }
};

QExpansion::QExpansion() : precision_(0) {}

void QExpansion::normalize() {
    if (denominator_ < 0) {
        denominator_ = -denominator_;
        for (auto& c : numerators_) c = -c;
    }
    auto first = std::find_if(numerators_.begin(), numerators_.end(), [](const Integer& c) { return sgn(c) != 0; });
    if (first == numerators_.end()) {
        numerators_.clear();
        lead_ = Rational(0);
        ramification_ = 1;
        denominator_ = 1;
        return;
    }
    auto skipped = static_cast<long>(first - numerators_.begin());
    if (skipped > 0) {
        numerators_.erase(numerators_.begin(), first);
        lead_ += Rational(skipped, ramification_);
    }

    Integer g = denominator_;
    for (const auto& c : numerators_) {
        if (g == 1) break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& c : numerators_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
    }

    if (ramification_ > 1) {
        long r = std::gcd(ramification_, static_cast<long>(numerators_.size()));
        for (std::size_t i = 1; i < numerators_.size() && r > 1; ++i)
            if (sgn(numerators_[i]) != 0) r = std::gcd(r, static_cast<long>(i));
        if (r > 1) {
            std::vector<Integer> compact(numerators_.size() / static_cast<std::size_t>(r));
            for (std::size_t i = 0; i < compact.size(); ++i) compact[i] = std::move(numerators_[i * static_cast<std::size_t>(r)]);
            numerators_ = std::move(compact);
            ramification_ /= r;
        }
    }
}

QExpansion QExpansion::zero(const Rational& precision) {
    QExpansion out;
    out.precision_ = precision;
    return out;
}

QExpansion QExpansion::from_coefficients(const Rational& lead, std::span<const Rational> coeffs, long ramification) {
    if (ramification < 1) throw ParameterError("ramification must be >= 1");
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, c.den());
    std::vector<Integer> nums;
    nums.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Integer scaled = den / c.den();
        nums.push_back(c.num() * scaled);
    }
    Rational precision = lead + Rational(static_cast<long>(coeffs.size()), ramification);
    return SeriesAccess::make(lead, ramification, std::move(nums), den, precision);
}

QExpansion QExpansion::from_integers(const Rational& lead, std::vector<Integer> numerators, const Integer& denominator,
                                     long ramification) {
    if (ramification < 1) throw ParameterError("ramification must be >= 1");
    if (denominator == 0) throw DomainError("zero common denominator");
    Rational precision = lead + Rational(static_cast<long>(numerators.size()), ramification);
    return SeriesAccess::make(lead, ramification, std::move(numerators), denominator, precision);
}

QExpansion QExpansion::monomial(const Rational& exponent, const Rational& c, long order) {
    if (order < 0) throw ParameterError("series order must be >= 0");
    std::vector<Integer> nums(static_cast<std::size_t>(order) + 1);
    nums[0] = c.num();
    return from_integers(exponent, std::move(nums), c.den());
}

QExpansion QExpansion::constant(const Rational& c, const Rational& precision) {
    if (precision <= Rational(0)) return zero(precision);
    // Lattice of step 1/den(precision) so that the precision is representable.
    long e = to_long(precision.den());
    long count = lattice_index(precision, Rational(0), e);
    std::vector<Integer> nums(static_cast<std::size_t>(count));
    nums[0] = c.num();
    return SeriesAccess::make(Rational(0), e, std::move(nums), c.den(), precision);
}

const Rational& QExpansion::leading_exponent() const {
    if (is_zero()) throw DomainError("the zero series has no leading exponent");
    return lead_;
}

Rational QExpansion::coefficient(long n) const {
    if (n < 0 || n > order()) throw std::out_of_range("coefficient index " + std::to_string(n) + " beyond order");
    return Rational(numerators_[static_cast<std::size_t>(n)], denominator_);
}

std::vector<Rational> QExpansion::coefficients() const {
    std::vector<Rational> out;
    out.reserve(numerators_.size());
    for (const auto& c : numerators_) out.emplace_back(c, denominator_);
    return out;
}

Rational QExpansion::coefficient_at(const Rational& exponent) const {
    if (exponent >= precision_) throw std::out_of_range("exponent " + exponent.to_string() + " beyond precision");
    if (is_zero() || exponent < lead_) return Rational(0);
    Rational scaled = (exponent - lead_) * Rational(ramification_);
    if (!scaled.is_integer()) return Rational(0);
    return coefficient(to_long(scaled.num()));
}

QExpansion QExpansion::truncated(long order) const {
    if (is_zero() || order >= this->order()) return *this;
    if (order < 0) return zero(lead_);
    std::vector<Integer> nums(numerators_.begin(), numerators_.begin() + order + 1);
    return SeriesAccess::make(lead_, ramification_, std::move(nums), denominator_,
                              lead_ + Rational(order + 1, ramification_));
}

QExpansion QExpansion::truncated_at(const Rational& precision) const {
    if (precision >= precision_) return *this;
    if (is_zero() || precision <= lead_) return zero(precision);
    long count = ceil_long((precision - lead_) * Rational(ramification_));
    return truncated(count - 1);
}

QExpansion add(const QExpansion& f, const QExpansion& g) {
    if (f.is_zero() && g.is_zero()) return QExpansion::zero(std::min(f.precision(), g.precision()));
    if (f.is_zero()) return g.truncated_at(f.precision());
    if (g.is_zero()) return f.truncated_at(g.precision());

    const Rational& hf = f.leading_exponent();
    const Rational& hg = g.leading_exponent();
    Rational lead = std::min(hf, hg);
    Rational precision = std::min(f.precision(), g.precision());
    long e = std::lcm(f.ramification(), g.ramification());
    e = std::lcm(e, to_long((hf - hg).den()));
    long count = lattice_index(precision, lead, e);

    Integer den = lcm(f.denominator(), g.denominator());
    std::vector<Integer> nums(static_cast<std::size_t>(count));
    auto place = [&](const QExpansion& s) {
        Integer factor = den / s.denominator();
        long offset = lattice_index(s.leading_exponent(), lead, e);
        long stride = e / s.ramification();
        auto src = s.numerators();
        for (std::size_t n = 0; n < src.size(); ++n) {
            long idx = offset + static_cast<long>(n) * stride;
            if (idx >= count) break;
            mpz_addmul(nums[static_cast<std::size_t>(idx)].get_mpz_t(), src[n].get_mpz_t(), factor.get_mpz_t());
        }
    };
    place(f);
    place(g);
    return SeriesAccess::make(lead, e, std::move(nums), den, precision);
}

QExpansion negate(const QExpansion& f) { return scale(f, Rational(-1)); }

QExpansion subtract(const QExpansion& f, const QExpansion& g) { return add(f, negate(g)); }

QExpansion scale(const QExpansion& f, const Rational& c) {
    if (f.is_zero() || c.is_zero()) return QExpansion::zero(f.precision());
    std::vector<Integer> nums(f.numerators().begin(), f.numerators().end());
    for (auto& x : nums) x *= c.num();
    return SeriesAccess::make(f.leading_exponent(), f.ramification(), std::move(nums), f.denominator() * c.den(),
                              f.precision());
}

QExpansion shift(const QExpansion& f, const Rational& r) {
    if (f.is_zero()) return QExpansion::zero(f.precision() + r);
    std::vector<Integer> nums(f.numerators().begin(), f.numerators().end());
    return SeriesAccess::make(f.leading_exponent() + r, f.ramification(), std::move(nums), f.denominator(),
                              f.precision() + r);
}

QExpansion mul(const QExpansion& f, const QExpansion& g) {
    if (f.is_zero() || g.is_zero()) {
        Rational p = f.is_zero() && g.is_zero() ? f.precision() + g.precision()
                     : f.is_zero()              ? f.precision() + g.leading_exponent()
                                                : g.precision() + f.leading_exponent();
        return QExpansion::zero(p);
    }
    long e = std::lcm(f.ramification(), g.ramification());
    long sf = e / f.ramification(), sg = e / g.ramification();
    auto F = f.numerators();
    auto G = g.numerators();
    long count = std::min(static_cast<long>(F.size()) * sf, static_cast<long>(G.size()) * sg);
    Rational lead = f.leading_exponent() + g.leading_exponent();

    std::vector<Integer> nums(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < F.size(); ++i) {
        long fi = static_cast<long>(i) * sf;
        if (fi >= count) break;
        if (sgn(F[i]) == 0) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            long idx = fi + static_cast<long>(j) * sg;
            if (idx >= count) break;
            if (sgn(G[j]) == 0) continue;
            mpz_addmul(nums[static_cast<std::size_t>(idx)].get_mpz_t(), F[i].get_mpz_t(), G[j].get_mpz_t());
        }
    }
    return SeriesAccess::make(lead, e, std::move(nums), f.denominator() * g.denominator(),
                              lead + Rational(count, e));
}

QExpansion invert(const QExpansion& f) {
    if (f.is_zero()) throw DomainError("cannot invert the zero series");
    auto U = f.numerators();
    const std::size_t count = U.size();
    Rational lead = -f.leading_exponent();
    Rational precision = lead + Rational(static_cast<long>(count), f.ramification());

    if (f.denominator() == 1 && (U[0] == 1 || U[0] == -1)) {
        // Integral unit: the inverse stays integral.
        std::vector<Integer> X(count);
        X[0] = U[0];
        Integer acc;
        for (std::size_t n = 1; n < count; ++n) {
            acc = 0;
            for (std::size_t k = 1; k <= n; ++k)
                if (sgn(U[k]) != 0) mpz_addmul(acc.get_mpz_t(), U[k].get_mpz_t(), X[n - k].get_mpz_t());
            X[n] = U[0] == 1 ? Integer(-acc) : acc;
        }
        return SeriesAccess::make(lead, f.ramification(), std::move(X), Integer(1), precision);
    }

    std::vector<Rational> c = f.coefficients();
    std::vector<Rational> w(count);
    Rational inv0 = Rational(1) / c[0];
    w[0] = inv0;
    for (std::size_t n = 1; n < count; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!c[k].is_zero()) acc += c[k] * w[n - k];
        w[n] = -(acc * inv0);
    }
    return QExpansion::from_coefficients(lead, w, f.ramification()).truncated_at(precision);
}

QExpansion pow_rational(const QExpansion& f, const Rational& alpha) {
    if (f.is_zero()) throw DomainError("pow_rational of the zero series");
    auto U = f.numerators();
    const std::size_t count = U.size();
    const long e = f.ramification();
    Rational lead = f.leading_exponent() * alpha;
    Rational precision = lead + Rational(static_cast<long>(count), e);
    Rational c0 = f.coefficient(0);
    if (!alpha.is_integer() && c0 != Rational(1))
        throw DomainError("fractional power of a series whose leading coefficient is " + c0.to_string());

    // J.C.P. Miller recurrence: n c0 w_n = sum_{k=1}^{n} ((alpha+1)k - n) c_k w_{n-k}.
    if (alpha.is_integer() && f.denominator() == 1 && U[0] == 1) {
        const Integer a1 = alpha.num() + 1;
        std::vector<Integer> W(count);
        W[0] = 1;
        Integer acc, weight;
        for (std::size_t n = 1; n < count; ++n) {
            acc = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                if (sgn(U[k]) == 0) continue;
                weight = a1 * static_cast<unsigned long>(k);
                weight -= static_cast<unsigned long>(n);
                weight *= U[k];
                mpz_addmul(acc.get_mpz_t(), weight.get_mpz_t(), W[n - k].get_mpz_t());
            }
            mpz_divexact_ui(W[n].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
        }
        return SeriesAccess::make(lead, e, std::move(W), Integer(1), precision);
    }

    std::vector<Rational> c = f.coefficients();
    std::vector<Rational> w(count);
    w[0] = alpha.is_integer() ? pow(c0, to_long(alpha.num())) : Rational(1);
    const Rational a1 = alpha + Rational(1);
    for (std::size_t n = 1; n < count; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (c[k].is_zero()) continue;
            acc += (a1 * Rational(static_cast<long>(k)) - Rational(static_cast<long>(n))) * c[k] * w[n - k];
        }
        w[n] = acc / (Rational(static_cast<long>(n)) * c0);
    }
    return QExpansion::from_coefficients(lead, w, e).truncated_at(precision);
}

QExpansion theta(const QExpansion& f) {
    if (f.is_zero()) return f;
    const Rational& h = f.leading_exponent();
    const long e = f.ramification();
    // (h + n/e) = (hn*e + n*hd) / (hd*e)
    Integer he = h.num() * e;
    std::vector<Integer> nums(f.numerators().begin(), f.numerators().end());
    Integer factor;
    for (std::size_t n = 0; n < nums.size(); ++n) {
        factor = h.den() * static_cast<unsigned long>(n);
        factor += he;
        nums[n] *= factor;
    }
    return SeriesAccess::make(h, e, std::move(nums), f.denominator() * h.den() * e, f.precision());
}

QExpansion compose(std::span<const Rational> outer, const QExpansion& inner) {
    if (outer.empty()) throw ParameterError("compose: empty outer series");
    Rational precision = inner.precision();
    if (!inner.is_zero()) {
        const Rational& h = inner.leading_exponent();
        if (h < Rational(1)) throw DomainError("compose: inner series must have leading exponent >= 1");
        precision = std::min(precision, h * Rational(static_cast<long>(outer.size())));
    } else if (precision < Rational(1)) {
        throw DomainError("compose: inner series must vanish to order >= 1");
    }

    QExpansion result = QExpansion::constant(outer[0], precision);
    if (inner.is_zero()) return result;
    QExpansion power = inner.truncated_at(precision);
    for (std::size_t n = 1; n < outer.size(); ++n) {
        if (power.is_zero() || power.leading_exponent() >= precision) break;
        if (!outer[n].is_zero()) result = add(result, scale(power, outer[n]));
        if (n + 1 < outer.size()) power = mul(power, inner).truncated_at(precision);
    }
    return result;
}

}  // namespace vvmf
