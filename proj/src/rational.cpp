#include "finkan/rational.hpp"

#include <cctype>
#include <ostream>

namespace finkan {

Rat::Rat(long num, long den) {
    if (den == 0)
        throw MalformedScalar("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    if (text.empty())
        throw MalformedScalar("empty rational literal");
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto valid_int = [](const std::string& s) {
        if (s.empty())
            return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        throw MalformedScalar("malformed rational '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        throw MalformedScalar("malformed rational '" + text + "': zero denominator");
    Rat r;
    r.q_ = mpq_class(n, d);
    r.q_.canonicalize();
    return r;
}

std::string Rat::str() const {
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw MalformedScalar("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rat abs(const Rat& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace finkan
