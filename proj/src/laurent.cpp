#include "afq/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace afq {

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return LaurentPoly();

    // Shift both operands into ordinary polynomials and long-divide.
    const int ns = num.min_exp(), ds = den.min_exp();
    std::vector<Rational> n(num.max_exp() - ns + 1), d(den.max_exp() - ds + 1);
    for (const auto& [e, c] : num.terms()) n[e - ns] = c;
    for (const auto& [e, c] : den.terms()) d[e - ds] = c;

    const int dn = static_cast<int>(n.size()) - 1;
    const int dd = static_cast<int>(d.size()) - 1;
    if (dn < dd) throw std::domain_error("inexact polynomial division");

    std::vector<Rational> quot(dn - dd + 1);
    for (int k = dn - dd; k >= 0; --k) {
        Rational c = n[k + dd] / d[dd];
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) n[k + j] -= c * d[j];
    }
    for (const Rational& c : n)
        if (c != 0) throw std::domain_error("inexact polynomial division");

    LaurentPoly r;
    for (int k = 0; k <= dn - dd; ++k)
        if (quot[k] != 0) r.terms_[k + ns - ds] = quot[k];
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Rational c = it->second;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            out << c.str();
        } else {
            if (c != 1) out << c.str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// One canonical term: [coef*]q[^exp], or a bare rational.
void parse_term(const std::string& t, int sign, LaurentPoly& acc) {
    const auto qpos = t.find('q');
    Rational c = 1;
    int e = 0;
    if (qpos == std::string::npos) {
        c = Rational(t);
    } else {
        std::string head = t.substr(0, qpos);
        if (!head.empty()) {
            if (head.back() != '*') throw std::invalid_argument("bad term: " + t);
            head.pop_back();
            c = Rational(head);
        }
        std::string tail = t.substr(qpos + 1);
        if (tail.empty()) {
            e = 1;
        } else {
            if (tail.front() != '^') throw std::invalid_argument("bad term: " + t);
            e = std::stoi(tail.substr(1));
        }
    }
    acc += LaurentPoly::monomial(e, sign * c);
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s) {
    if (s == "0") return LaurentPoly();
    LaurentPoly acc;
    std::size_t pos = 0;
    int sign = 1;
    if (!s.empty() && s[0] == '-') { sign = -1; pos = 1; }
    while (pos < s.size()) {
        std::size_t next = std::string::npos;
        int next_sign = 1;
        for (std::size_t i = pos; i + 2 < s.size(); ++i) {
            if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
                next = i;
                next_sign = s[i + 1] == '+' ? 1 : -1;
                break;
            }
        }
        const std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (term.empty()) throw std::invalid_argument("bad polynomial: " + s);
        parse_term(term, sign, acc);
        if (next == std::string::npos) break;
        pos = next + 3;
        sign = next_sign;
    }
    return acc;
}

LaurentPoly qint(int m, int d) {
    LaurentPoly r;
    const int a = std::abs(m);
    for (int k = 0; k < a; ++k) r += LaurentPoly::q_power(d * (a - 1 - 2 * k));
    if (m < 0) r = LaurentPoly(-1) * r;
    return r;
}

LaurentPoly qfact(int m, int d) {
    if (m < 0) throw std::domain_error("q-factorial of negative integer");
    LaurentPoly r(1);
    for (int k = 2; k <= m; ++k) r *= qint(k, d);
    return r;
}

LaurentPoly qbinom(int m, int r, int d) {
    if (r < 0 || r > m) throw std::domain_error("q-binomial out of range");
    return LaurentPoly::div_exact(qfact(m, d), qfact(r, d) * qfact(m - r, d));
}

}  // namespace afq
