#include "twocrit/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace twocrit {

const char* var_name(Var v) {
    switch (v) {
        case Var::z: return "z";
        case Var::t: return "t";
        case Var::lambda: return "lambda";
        case Var::c: return "c";
        case Var::mu: return "mu";
    }
    return "?";
}

IntPoly IntPoly::constant(long v) { return constant(mpz_class(v)); }

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly p;
    if (v != 0) p.terms_.emplace(Monomial{}, v);
    return p;
}

IntPoly IntPoly::variable(Var v) {
    Monomial m;
    m.e[static_cast<int>(v)] = 1;
    return monomial(m, 1);
}

IntPoly IntPoly::monomial(const Monomial& mono, const mpz_class& coeff) {
    IntPoly p;
    if (coeff != 0) p.terms_.emplace(mono, coeff);
    return p;
}

bool IntPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::vector<Var> IntPoly::used_variables() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i) {
        const Var v = static_cast<Var>(i);
        for (const auto& [mono, coeff] : terms_)
            if (mono[v] > 0) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

int IntPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono[v]);
    return d;
}

int IntPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total_degree();
}

mpz_class IntPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant())
        throw std::logic_error("constant_value on a non-constant polynomial");
    return terms_.begin()->second;
}

IntPoly IntPoly::coefficient_of(Var v, int k) const {
    IntPoly out;
    const int vi = static_cast<int>(v);
    for (const auto& [mono, coeff] : terms_) {
        if (mono.e[vi] != k) continue;
        Monomial m = mono;
        m.e[vi] = 0;
        out.terms_.emplace(m, coeff);
    }
    return out;
}

IntPoly IntPoly::leading_coefficient(Var v) const {
    return coefficient_of(v, std::max(degree(v), 0));
}

mpz_class IntPoly::leading_coeff_grlex() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

mpz_class IntPoly::integer_content() const {
    mpz_class g = 0;
    for (const auto& [mono, coeff] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Monomial IntPoly::monomial_content() const {
    Monomial m{};
    if (terms_.empty()) return m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = INT16_MAX;
    for (const auto& [mono, coeff] : terms_)
        for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
    return m;
}

void IntPoly::insert_add(const Monomial& mono, const mpz_class& coeff) {
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator-() const {
    IntPoly out = *this;
    for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    for (const auto& [mono, coeff] : o.terms_) insert_add(mono, coeff);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    for (const auto& [mono, coeff] : o.terms_) insert_add(mono, -coeff);
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    IntPoly out;
    mpz_class prod;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) m.e[i] = int16_t(ma.e[i] + mb.e[i]);
            prod = ca * cb;
            out.insert_add(m, prod);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= s;
    return *this;
}

IntPoly IntPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("IntPoly::pow: negative exponent");
    IntPoly acc = constant(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

bool IntPoly::try_divide_exact(const IntPoly& divisor, IntPoly& quotient) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    quotient = IntPoly();
    IntPoly rem = *this;
    const auto& dlead = *divisor.terms_.rbegin();
    mpz_class q;
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        if (!dlead.first.divides(rlead.first)) return false;
        if (!mpz_divisible_p(rlead.second.get_mpz_t(), dlead.second.get_mpz_t()))
            return false;
        mpz_divexact(q.get_mpz_t(), rlead.second.get_mpz_t(),
                     dlead.second.get_mpz_t());
        Monomial m;
        for (int i = 0; i < kNumVars; ++i)
            m.e[i] = int16_t(rlead.first.e[i] - dlead.first.e[i]);
        const IntPoly qterm = monomial(m, q);
        quotient += qterm;
        rem -= qterm * divisor;
    }
    return true;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    IntPoly q;
    if (!try_divide_exact(divisor, q))
        throw std::logic_error("divide_exact: division is not exact");
    return q;
}

IntPoly IntPoly::substitute(Var v, const mpz_class& value) const {
    IntPoly out;
    const int vi = static_cast<int>(v);
    mpz_class pw, term;
    for (const auto& [mono, coeff] : terms_) {
        mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), mono.e[vi]);
        term = coeff * pw;
        Monomial m = mono;
        m.e[vi] = 0;
        out.insert_add(m, term);
    }
    return out;
}

IntPoly IntPoly::rename(Var from, Var to) const {
    if (from == to) return *this;
    if (uses(to))
        throw std::invalid_argument("rename: target variable already used");
    IntPoly out;
    const int fi = static_cast<int>(from), ti = static_cast<int>(to);
    for (const auto& [mono, coeff] : terms_) {
        Monomial m = mono;
        m.e[ti] = m.e[fi];
        m.e[fi] = 0;
        out.terms_.emplace(m, coeff);
    }
    return out;
}

std::complex<double> IntPoly::eval(
    const std::array<std::complex<double>, kNumVars>& point) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [mono, coeff] : terms_) {
        std::complex<double> term(coeff.get_d(), 0.0);
        for (int i = 0; i < kNumVars; ++i)
            for (int e = 0; e < mono.e[i]; ++e) term *= point[i];
        acc += term;
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& coeff = it->second;
        const bool neg = coeff < 0;
        mpz_class mag = neg ? mpz_class(-coeff) : coeff;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string parts;
        for (int i = 0; i < kNumVars; ++i) {
            if (it->first.e[i] == 0) continue;
            if (!parts.empty()) parts += "*";
            parts += var_name(static_cast<Var>(i));
            if (it->first.e[i] > 1)
                parts += "^" + std::to_string(it->first.e[i]);
        }
        if (parts.empty()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << parts;
        }
    }
    return os.str();
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a;
    return out *= b;
}
IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }

namespace {

// Dense univariate view used by the primitive PRS below.
struct Dense {
    Var v;
    std::vector<mpz_class> c;  // c[k] multiplies v^k

    int deg() const {
        int d = (int)c.size() - 1;
        while (d >= 0 && c[d] == 0) --d;
        return d;
    }
    void trim() { c.resize(deg() + 1); }
};

Dense to_dense(const IntPoly& p, Var v) {
    Dense d{v, {}};
    d.c.assign(std::max(p.degree(v), 0) + 1, 0);
    for (const auto& [mono, coeff] : p.terms()) d.c[mono[v]] = coeff;
    return d;
}

IntPoly from_dense(const Dense& d) {
    IntPoly out;
    for (int k = 0; k < (int)d.c.size(); ++k) {
        if (d.c[k] == 0) continue;
        Monomial m;
        m.e[static_cast<int>(d.v)] = int16_t(k);
        out += IntPoly::monomial(m, d.c[k]);
    }
    return out;
}

mpz_class dense_content(const Dense& d) {
    mpz_class g = 0;
    for (const auto& x : d.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

void make_primitive(Dense& d) {
    d.trim();
    const mpz_class g = dense_content(d);
    if (g > 1)
        for (auto& x : d.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (!d.c.empty() && d.c.back() < 0)
        for (auto& x : d.c) x = -x;
}

// Pseudo-remainder of a by b: lc(b)^{da-db+1} a mod b.
Dense prem(const Dense& a, const Dense& b) {
    Dense r = a;
    r.trim();
    const int db = b.deg();
    const mpz_class lb = b.c[db];
    int dr = r.deg();
    while (dr >= db && dr >= 0) {
        const mpz_class lead = r.c[dr];
        for (int i = 0; i <= dr; ++i) r.c[i] *= lb;
        for (int i = 0; i <= db; ++i) r.c[dr - db + i] -= lead * b.c[i];
        r.trim();
        dr = r.deg();
    }
    return r;
}

}  // namespace

IntPoly gcd_univariate(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto ua = a.used_variables();
    const auto ub = b.used_variables();
    if (ua.size() > 1 || ub.size() > 1 ||
        (!ua.empty() && !ub.empty() && ua[0] != ub[0]))
        throw std::invalid_argument(
            "gcd_univariate requires polynomials in one shared variable");
    const mpz_class ca = a.integer_content(), cb = b.integer_content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (ua.empty() || ub.empty()) return IntPoly::constant(cg);

    const Var v = ua[0];
    Dense A = to_dense(a, v), B = to_dense(b, v);
    make_primitive(A);
    make_primitive(B);
    if (A.deg() < B.deg()) std::swap(A, B);
    while (B.deg() >= 0) {
        Dense R = prem(A, B);
        make_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    make_primitive(A);
    IntPoly g = from_dense(A);
    return cg * g;
}

}  // namespace twocrit
