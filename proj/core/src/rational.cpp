#include "vvmf/rational.hpp"

#include <ostream>

namespace vvmf {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    std::string s(first == std::string_view::npos ? std::string_view() : text.substr(first, last - first + 1));
    bool negative = false;
    if (s.rfind("−", 0) == 0) {
        negative = true;
        s.erase(0, std::string("−").size());
    } else if (!s.empty() && s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    }
    auto digits = [](const std::string& part) {
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num_part = s.substr(0, slash);
    std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num_part) || !digits(den_part))
        throw ParameterError("malformed rational: '" + std::string(text) + "'");
    Integer num(num_part, 10), den(den_part, 10);
    if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw DomainError("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

long Valuation::value() const {
    if (!value_) throw DomainError("valuation of zero is infinite");
    return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
    return Valuation::finite(*a.value_ + *b.value_);
}

std::string Valuation::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long padic_valuation_unchecked(const Integer& n, unsigned long p) {
    if (n == 0) return 0;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) return 0;
    Integer rest;
    Integer prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation padic_valuation(const Rational& r, long p) {
    if (p < 2 || !is_prime(Integer(p)))
        throw ParameterError("padic_valuation: " + std::to_string(p) + " is not prime");
    if (r.is_zero()) return Valuation::infinity();
    auto up = static_cast<unsigned long>(p);
    return Valuation::finite(padic_valuation_unchecked(r.num(), up) -
                             padic_valuation_unchecked(r.den(), up));
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
    return Rational(n, d);
}

}  // namespace vvmf
