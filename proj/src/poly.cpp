#include "msnake/poly.hpp"

#include <sstream>
#include <utility>

namespace msnake {

TriPoly TriPoly::constant(const mpz_class& c) { return monomial({0, 0, 0}, c); }

TriPoly TriPoly::monomial(ExpTriple e, const mpz_class& c) {
    TriPoly p;
    p.add_term(e, c);
    return p;
}

mpz_class TriPoly::coeff(ExpTriple e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void TriPoly::add_term(ExpTriple e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TriPoly::scale(ExpTriple e, const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    TermMap scaled;
    auto hint = scaled.end();
    for (const auto& [te, tc] : terms_) hint = scaled.emplace_hint(hint, te + e, tc * c);
    terms_ = std::move(scaled);
}

TriPoly& TriPoly::operator+=(const TriPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

TriPoly operator*(const TriPoly& p, const TriPoly& q) {
    TriPoly r;
    for (const auto& [pe, pc] : p.terms_)
        for (const auto& [qe, qc] : q.terms_) r.add_term(pe + qe, pc * qc);
    return r;
}

std::string TriPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool has_var = e.ex != 0 || e.ey != 0 || e.ez != 0;
        if (a != 1 || !has_var) out << a.get_str() << (has_var ? " " : "");
        auto var = [&out](const char* name, int k, bool lead) {
            if (k == 0) return lead;
            if (!lead) out << " ";
            out << name;
            if (k != 1) out << "^" << k;
            return false;
        };
        bool lead = true;
        lead = var("x", e.ex, lead);
        lead = var("y", e.ey, lead);
        var("z", e.ez, lead);
    }
    return out.str();
}

TriPoly poly_mul(const TriPoly& p, const TriPoly& q) { return p * q; }

namespace {

ExpTriple min_corner(const TriPoly& p) {
    ExpTriple m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms()) {
        m.ex = std::min(m.ex, e.ex);
        m.ey = std::min(m.ey, e.ey);
        m.ez = std::min(m.ez, e.ez);
    }
    return m;
}

}  // namespace

TriPoly poly_exact_div(const TriPoly& p, const TriPoly& q) {
    if (q.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    if (p.is_zero()) return {};
    // Shift both operands into nonnegative exponents.  Exactness is
    // preserved, and an exact quotient of the shifted operands has
    // nonnegative exponents too (the x-, y-, z-adic valuations of p are the
    // sums of those of q and the quotient), so greedy leading-term division
    // in lexicographic order terminates.
    ExpTriple mp = min_corner(p);
    ExpTriple mq = min_corner(q);
    TriPoly r = poly_shift(p, -mp);
    TriPoly d = poly_shift(q, -mq);
    const auto& [de, dc] = *d.terms().rbegin();
    TriPoly quot;
    while (!r.is_zero()) {
        const auto& [re, rc] = *r.terms().rbegin();
        ExpTriple qe = re - de;
        if (qe.ex < 0 || qe.ey < 0 || qe.ez < 0)
            throw NotDivisible("leading monomial " + TriPoly::monomial(re, rc).str() +
                               " not divisible by " + TriPoly::monomial(de, dc).str());
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rc.get_mpz_t(), dc.get_mpz_t());
        if (rem != 0)
            throw NotDivisible("leading coefficient " + rc.get_str() +
                               " not divisible by " + dc.get_str());
        quot.add_term(qe, qc);
        TriPoly sub = d;
        sub.scale(qe, qc);
        r -= sub;
    }
    return poly_shift(quot, mp - mq);
}

mpq_class poly_eval_ints(const TriPoly& p, const mpz_class& x0, const mpz_class& y0,
                         const mpz_class& z0) {
    auto power = [](const mpz_class& base, unsigned long k) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
        return r;
    };
    mpq_class total = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class num = c;
        mpz_class den = 1;
        auto apply = [&](const mpz_class& base, int k) {
            if (k >= 0) {
                num *= power(base, static_cast<unsigned long>(k));
            } else {
                if (base == 0)
                    throw DivisionByZero("negative exponent at zero base in poly_eval_ints");
                den *= power(base, static_cast<unsigned long>(-k));
            }
        };
        apply(x0, e.ex);
        apply(y0, e.ey);
        apply(z0, e.ez);
        mpq_class term(num, den);
        term.canonicalize();
        total += term;
    }
    return total;
}

std::vector<ExpTriple> poly_support(const TriPoly& p) {
    std::vector<ExpTriple> s;
    s.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) s.push_back(e);
    return s;
}

TriPoly poly_shift(const TriPoly& p, ExpTriple d) {
    TriPoly r = p;
    r.scale(d, 1);
    return r;
}

TriPoly poly_double_exponents(const TriPoly& p) {
    TriPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term({2 * e.ex, 2 * e.ey, 2 * e.ez}, c);
    return r;
}

TriPoly poly_halve_exponents(const TriPoly& p) {
    TriPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.ex % 2 != 0 || e.ey % 2 != 0 || e.ez % 2 != 0)
            throw std::logic_error("odd exponent where an even one is structural: " +
                                   TriPoly::monomial(e, c).str());
        r.add_term({e.ex / 2, e.ey / 2, e.ez / 2}, c);
    }
    return r;
}

Json poly_to_json(const TriPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"ex", e.ex}, {"ey", e.ey}, {"ez", e.ez}, {"c", c.get_str()}});
    return Json{{"terms", std::move(terms)}};
}

TriPoly poly_from_json(const Json& j) {
    TriPoly p;
    for (const auto& t : j.at("terms")) {
        ExpTriple e{t.at("ex").get<int>(), t.at("ey").get<int>(), t.at("ez").get<int>()};
        mpz_class c(t.at("c").get<std::string>());
        if (c == 0) throw std::invalid_argument("zero coefficient in polynomial JSON");
        if (p.coeff(e) != 0) throw std::invalid_argument("duplicate exponent triple in polynomial JSON");
        p.add_term(e, c);
    }
    return p;
}

}  // namespace msnake
