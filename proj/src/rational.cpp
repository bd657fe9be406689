#include "bezsub/rational.hpp"

#include <cctype>
#include <ostream>

namespace bezsub {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat Rat::from_string(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    std::string_view numpart = s;
    std::string_view denpart;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        numpart = trim(s.substr(0, slash));
        denpart = trim(s.substr(slash + 1));
    }

    std::string_view digits = numpart;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");

    mpz_class num(std::string(numpart), 10);
    if (denpart.data() == nullptr) return Rat(num);

    if (!all_digits(denpart))
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    mpz_class den(std::string(denpart), 10);
    if (den == 0) throw std::domain_error("rational with zero denominator");

    mpq_class q(num, den);
    q.canonicalize();
    return Rat(std::move(q), canonical_tag{});
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base.is_zero()) {
        if (exp < 0) throw std::domain_error("zero raised to a negative power");
        return Rat(0);
    }
    const unsigned long k = exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), k);
    mpq_class q = exp > 0 ? mpq_class(num, den) : mpq_class(den, num);
    q.canonicalize();  // fixes the sign position when inverting a negative base
    return Rat(std::move(q), Rat::canonical_tag{});
}

}  // namespace bezsub
