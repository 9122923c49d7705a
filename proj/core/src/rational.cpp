#include "ainfty/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ainfty {

Scalar::Scalar(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    q_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::invalid_argument("Scalar: division by zero");
    q_ /= o.q_;
    return *this;
}

static bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

std::optional<Scalar> Scalar::parse(const std::string& s) {
    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    if (den[0] == '-') return std::nullopt;  // canonical form has positive denominators
    mpz_class n(num), d(den);
    if (d == 0) return std::nullopt;
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
}

std::string Scalar::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ainfty
