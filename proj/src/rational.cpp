#include "playfront/rational.hpp"

#include <cmath>
#include <ostream>

#include "playfront/errors.hpp"

namespace playfront {

Rat::Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class v{mpz_class(text)};
            return Rat(std::move(v));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: " + text);
        mpq_class v(num, den);
        v.canonicalize();
        return Rat(std::move(v));
    } catch (const std::invalid_argument&) {
        throw SpecParseError("not a rational: \"" + text + "\"");
    }
}

Rat Rat::from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite double to rational");
    mpq_class v(x);  // exact: doubles are dyadic rationals
    return Rat(std::move(v));
}

std::string Rat::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rat::floor_long() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat clamp(const Rat& x, const Rat& lo, const Rat& hi) {
    if (hi < lo) throw DomainError("clamp with empty interval");
    if (x < lo) return lo;
    if (hi < x) return hi;
    return x;
}

}  // namespace playfront
