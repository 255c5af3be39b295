#include "rsmzv/rational.hpp"

#include <stdexcept>

namespace rsmzv {

Rational parse_rational(std::string_view text)
{
    Rational q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("malformed rational '" + s + "': expected \"p/q\" or \"p\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Rational factorial(int n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace rsmzv
