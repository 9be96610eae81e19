#include "uknap/rational.hpp"

#include "uknap/errors.hpp"

#include <cctype>
#include <ostream>

namespace uknap {

namespace {

mpz_class parse_mpz(std::string_view text, const std::string& context) {
    if (text.empty())
        throw FormatError("empty " + context + " in rational literal");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size())
        throw FormatError("missing digits in " + context + " of rational literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw FormatError("invalid character in " + context + " of rational literal: '" +
                              std::string(text) + "'");
    }
    return mpz_class(std::string(text), 10);
}

} // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0)
        throw PreconditionError("rational denominator must be nonzero");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_mpz(text, "numerator"));
    const mpz_class num = parse_mpz(text.substr(0, slash), "numerator");
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw FormatError("denominator must be positive in rational literal: '" +
                          std::string(text) + "'");
    const mpz_class den = parse_mpz(den_text, "denominator");
    if (den == 0)
        throw FormatError("zero denominator in rational literal: '" + std::string(text) + "'");
    return Rational(num, den);
}

mpz_class Rational::floor() const {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const {
    std::string out = q_.get_num().get_str();
    if (q_.get_den() != 1) {
        out += '/';
        out += q_.get_den().get_str();
    }
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw PreconditionError("division of rational by zero");
    q_ /= o.q_;
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    Rational out = a;
    out /= b;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

bool lt_phi_times(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0)
        throw PreconditionError("lt_phi_times requires strictly positive arguments");
    return a * a < a * b + b * b;
}

} // namespace uknap
