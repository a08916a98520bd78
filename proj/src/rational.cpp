#include "lie2/rational.hpp"

#include <cctype>

namespace lie2 {

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = (slash == std::string_view::npos) ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den) || den.front() == '-')
        throw std::domain_error("Rational: cannot parse '" + std::string(s) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    return Rational(std::move(n), std::move(d));
}

std::string Rational::str() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

} // namespace lie2
