// SPDX-License-Identifier: Apache-2.0
#include "tcalg/ratfun.hpp"

#include "tcalg/error.hpp"

namespace tcalg {

namespace {

using QPoly = std::vector<Rational>;  // dense, trailing zeros trimmed

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly to_qpoly(const IntPoly& p) {
    QPoly out;
    out.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) out.emplace_back(c);
    return out;
}

QPoly qscale(QPoly p, const Rational& s) {
    for (Rational& c : p) c *= s;
    qtrim(p);
    return p;
}

// Remainder of a by b (b nonzero), standard long division over Q.
QPoly qmod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= factor * b[k];
        a.pop_back();
        qtrim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exact quotient; requires b | a.
QPoly qdiv_exact(QPoly a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[shift + k] -= factor * b[k];
        a.pop_back();
        qtrim(a);
    }
    if (!a.empty()) throw std::domain_error("ratfun: inexact polynomial division");
    qtrim(q);
    return q;
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return qscale(std::move(a), Rational(1) / a.back());  // monic
}

}  // namespace

RationalFunction::RationalFunction(IntPoly numerator, IntPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) fail_invalid("rational function: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(BigInt(1));
        return;
    }
    QPoly qn = to_qpoly(num_), qd = to_qpoly(den_);
    QPoly g = qgcd(qn, qd);
    if (g.size() > 1) {
        qn = qdiv_exact(std::move(qn), g);
        qd = qdiv_exact(std::move(qd), g);
    }
    // Back to integers with a single common scale so the ratio is kept:
    // multiply both by one lcm, then strip one shared content.
    BigInt lcm(1);
    for (const QPoly* poly : {&qn, &qd})
        for (const Rational& c : *poly) {
            BigInt gg = BigInt::gcd(lcm, c.den());
            lcm = lcm / gg * c.den();
        }
    auto to_ints = [&](const QPoly& p) {
        std::vector<BigInt> out;
        out.reserve(p.size());
        for (const Rational& c : p) out.push_back(c.num() * (lcm / c.den()));
        return out;
    };
    std::vector<BigInt> ni = to_ints(qn), di = to_ints(qd);
    BigInt content;
    for (const BigInt& c : ni) content = BigInt::gcd(content, c);
    for (const BigInt& c : di) content = BigInt::gcd(content, c);
    if (!content.is_zero() && content != BigInt(1)) {
        for (BigInt& c : ni) c = c / content;
        for (BigInt& c : di) c = c / content;
    }
    IntPoly n{std::move(ni)}, d{std::move(di)};
    int sign = 0;
    for (const BigInt& c : d.coeffs())
        if (!c.is_zero()) {
            sign = c.sign();
            break;
        }
    if (sign < 0) {
        n = -n;
        d = -d;
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

std::optional<PoleForm> RationalFunction::pole_form() const {
    IntPoly rest = den_;
    unsigned order = 0;
    while (!rest.is_zero() && rest.eval_at_one().is_zero()) {
        rest = rest.divide_by_one_minus_t();
        ++order;
    }
    if (rest.degree() != 0 || order > 2) return std::nullopt;
    const BigInt c = rest.at(0);

    std::vector<BigInt> taylor = num_.taylor_at_one();  // num = sum a_k (1-t)^k
    auto coeff_at = [&](unsigned k) {
        return k < taylor.size() ? Rational(taylor[k], c) : Rational(0);
    };

    PoleForm out;
    out.A = order >= 2 ? coeff_at(0) : Rational(0);
    out.B = order == 2 ? coeff_at(1) : (order == 1 ? coeff_at(0) : Rational(0));
    // Remaining (1-t)-powers re-expanded in powers of t.
    for (unsigned k = order; k < taylor.size(); ++k) {
        IntPoly pow = one_minus_t_power(k - order);
        Rational scale = coeff_at(k);
        for (std::size_t idx = 0; idx < pow.coeffs().size(); ++idx) {
            if (out.p.size() <= idx) out.p.resize(idx + 1);
            out.p[idx] += scale * Rational(pow.coeffs()[idx]);
        }
    }
    while (!out.p.empty() && out.p.back().is_zero()) out.p.pop_back();
    return out;
}

std::pair<Rational, Rational> RationalFunction::principal_residues() const {
    auto pf = pole_form();
    if (!pf)
        fail_invalid("rational function: no pole form (poles away from t=1 or order > 2)");
    return {pf->A, pf->B};
}

std::vector<Rational> RationalFunction::expand_series(int count) const {
    if (count < 0) fail_invalid("expand_series: negative count");
    if (den_.at(0).is_zero())
        fail_invalid("expand_series: pole at t = 0");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    const Rational d0(den_.at(0));
    for (int k = 0; k < count; ++k) {
        Rational acc(num_.at(static_cast<std::size_t>(k)));
        for (int i = 1; i <= std::min(k, den_.degree()); ++i)
            acc -= Rational(den_.at(static_cast<std::size_t>(i))) * out[static_cast<std::size_t>(k - i)];
        out.push_back(acc / d0);
    }
    return out;
}

namespace {

std::string qpoly_to_string(const std::vector<Rational>& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        Rational mag = p[k].num().sign() < 0 ? -p[k] : p[k];
        if (first) {
            if (p[k].num().sign() < 0) out += "-";
            first = false;
        } else {
            out += p[k].num().sign() < 0 ? " - " : " + ";
        }
        bool unit = mag == Rational(1);
        if (k == 0 || !unit) out += mag.to_string();
        if (k > 0) {
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

void append_pole_term(std::string& out, const Rational& value, const char* pole) {
    if (value.is_zero()) return;
    Rational mag = value.num().sign() < 0 ? -value : value;
    if (out.empty()) {
        if (value.num().sign() < 0) out += "-";
    } else {
        out += value.num().sign() < 0 ? " - " : " + ";
    }
    out += mag.to_string();
    out += pole;
}

}  // namespace

std::string PoleForm::to_string() const {
    std::string out;
    append_pole_term(out, A, "/(1-t)^2");
    append_pole_term(out, B, "/(1-t)");
    if (!p.empty()) {
        std::string poly = qpoly_to_string(p);
        if (out.empty()) {
            out = poly;
        } else if (poly[0] == '-') {
            out += " - " + poly.substr(1);
        } else {
            out += " + " + poly;
        }
    }
    return out.empty() ? "0" : out;
}

std::string RationalFunction::to_string() const {
    if (den_ == IntPoly::constant(BigInt(1))) return num_.to_string();
    // Recognize c*(1-t)^e denominators for the usual compact rendering.
    IntPoly rest = den_;
    unsigned order = 0;
    while (!rest.is_zero() && rest.eval_at_one().is_zero()) {
        rest = rest.divide_by_one_minus_t();
        ++order;
    }
    std::string num_str = num_.to_string();
    bool simple_num = num_.coeffs().size() <= 1 ||
                      [&] {
                          int nonzero = 0;
                          for (const BigInt& c : num_.coeffs())
                              if (!c.is_zero()) ++nonzero;
                          return nonzero == 1 && num_str[0] != '-';
                      }();
    if (!simple_num) num_str = "(" + num_str + ")";
    std::string den_str;
    if (order > 0 && rest.degree() == 0) {
        const BigInt c = rest.at(0);
        den_str = order == 1 ? "(1-t)" : "(1-t)^" + std::to_string(order);
        if (c != BigInt(1)) den_str = c.to_string() + "*" + den_str;
    } else {
        den_str = "(" + den_.to_string() + ")";
    }
    return num_str + "/" + den_str;
}

}  // namespace tcalg
