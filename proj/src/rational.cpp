#include "curvlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace curvlab {

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return Rational(q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(mpq_class(mpz_class(s, 10)));

    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : frac)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class ip(head, 10);
    mpz_class fp = frac.empty() ? mpz_class(0) : mpz_class(frac, 10);
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpq_class q(ip * den + fp, den);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace curvlab
