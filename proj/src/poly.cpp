#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bhc {

bool GrlexGreater::operator()(const Exps& a, const Exps& b) const {
    int64_t da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da > db;
    return a > b;  // lexicographic on the declared variable order
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const mpq_class& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exps(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, size_t index) {
    MultiPoly p(std::move(vars));
    Exps e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.terms_.emplace(e, 1);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

bool MultiPoly::is_integer() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

int MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

void MultiPoly::add_term(const Exps& e, const mpq_class& c) {
    if (e.size() != vars_.size()) throw internal_error("exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const mpq_class& MultiPoly::coeff(const Exps& e) const {
    static const mpq_class zero = 0;
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int64_t d = 0;
    for (auto v : terms_.begin()->first) d += v;  // leading term has max degree
    return static_cast<int>(d);
}

int MultiPoly::degree_in(size_t var) const {
    if (terms_.empty()) return -1;
    int32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw internal_error("variable context mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ != o.vars_) throw internal_error("variable context mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw internal_error("variable context mismatch");
    MultiPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw internal_error("negative power");
    MultiPoly r = constant(vars_, 1);
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::coeff_in_var(size_t var, int k) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exps f = e;
        f[var] = 0;
        r.add_term(f, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
    }
    return r;
}

MultiPoly MultiPoly::eval_partial(const std::map<size_t, Rat>& assignment) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        mpq_class k = c;
        Exps f = e;
        for (const auto& [v, t] : assignment) {
            for (int32_t i = 0; i < e[v]; ++i) k *= t;
            f[v] = 0;
        }
        r.add_term(f, k);
    }
    return r;
}

MultiPoly MultiPoly::substitute(size_t var, const MultiPoly& value) const {
    if (value.vars_ != vars_) throw internal_error("variable context mismatch");
    // Horner in the substituted variable
    int d = degree_in(var);
    if (d <= 0) {
        MultiPoly r = coeff_in_var(var, 0);
        return terms_.empty() ? MultiPoly(vars_) : r;
    }
    MultiPoly r = coeff_in_var(var, d);
    for (int k = d - 1; k >= 0; --k) r = r * value + coeff_in_var(var, k);
    return r;
}

mpq_class MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw internal_error("point arity mismatch");
    mpq_class s = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class k = c;
        for (size_t i = 0; i < point.size(); ++i)
            for (int32_t j = 0; j < e[i]; ++j) k *= point[i];
        s += k;
    }
    return s;
}

mpz_class MultiPoly::eval_int(const std::vector<mpz_class>& point) const {
    if (point.size() != vars_.size()) throw internal_error("point arity mismatch");
    mpz_class s = 0;
    mpz_class k, p;
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) throw internal_error("eval_int on non-integer polynomial");
        k = c.get_num();
        for (size_t i = 0; i < point.size(); ++i) {
            if (e[i] == 0) continue;
            mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), e[i]);
            k *= p;
        }
        s += k;
    }
    return s;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& newvars) const {
    std::vector<int> where(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (size_t j = 0; j < newvars.size(); ++j)
            if (newvars[j] == vars_[i]) where[i] = static_cast<int>(j);
    }
    MultiPoly r(newvars);
    Exps f(newvars.size());
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0) throw internal_error("dropped variable still in use: " + vars_[i]);
            f[where[i]] = e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool has_var = false;
        for (auto v : e)
            if (v > 0) has_var = true;
        if (!has_var || a != 1) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
            if (has_var) os << "*";
        }
        bool need_star = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

mpz_class poly_norm(const MultiPoly& f) {
    if (f.is_zero()) throw input_error("norm of the zero polynomial");
    mpz_class m = 2;
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() != 1) throw input_error("norm requires integer coefficients");
        mpz_class a = abs(c.get_num());
        if (a > m) m = a;
    }
    return m;
}

mpz_class int_content(const MultiPoly& f) {
    mpz_class g = 0;
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() != 1) throw internal_error("int_content on non-integer polynomial");
        g = gcd(g, c.get_num());
    }
    return g;
}

mpq_class rational_content(const MultiPoly& f) {
    if (f.is_zero()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    return mpq_class(num_gcd, den_lcm);
}

MultiPoly primitive_part_keep_sign(const MultiPoly& f) {
    if (f.is_zero()) return f;
    mpq_class c = rational_content(f);
    return f.scaled(1 / c);
}

MultiPoly primitive_part_canonical(const MultiPoly& f) {
    if (f.is_zero()) return f;
    MultiPoly p = primitive_part_keep_sign(f);
    if (p.terms().begin()->second < 0) p = -p;
    return p;
}

MultiPoly specialise_clear(const MultiPoly& f, const std::map<std::string, Rat>& assignment) {
    std::map<size_t, Rat> byindex;
    for (const auto& [name, t] : assignment) {
        int i = f.var_index(name);
        if (i < 0) throw input_error("unknown variable in specialisation: " + name);
        byindex.emplace(static_cast<size_t>(i), t);
    }
    MultiPoly raw = f.eval_partial(byindex);
    std::vector<std::string> rest;
    for (const auto& v : f.vars())
        if (!assignment.count(v)) rest.push_back(v);
    MultiPoly r = raw.with_vars(rest);
    if (r.is_zero()) return r;
    return primitive_part_keep_sign(r);
}

MultiPoly homogenise(const MultiPoly& f, const std::string& newvar) {
    if (f.is_zero()) throw input_error("homogenise of the zero polynomial");
    if (f.var_index(newvar) >= 0) throw input_error("homogenising variable already present");
    std::vector<std::string> vars = f.vars();
    vars.push_back(newvar);
    int d = f.total_degree();
    MultiPoly r(vars);
    for (const auto& [e, c] : f.terms()) {
        Exps g = e;
        int64_t t = 0;
        for (auto v : e) t += v;
        g.push_back(static_cast<int32_t>(d - t));
        r.add_term(g, c);
    }
    return r;
}

bool is_homogeneous(const MultiPoly& f) {
    if (f.is_zero()) return true;
    int d = f.total_degree();
    for (const auto& [e, c] : f.terms()) {
        int64_t t = 0;
        for (auto v : e) t += v;
        if (t != d) return false;
    }
    return true;
}

BihomResult bihomogenise(const MultiPoly& f) {
    if (f.is_zero()) throw input_error("bihomogenise of the zero polynomial");
    if (f.vars().size() != 2) throw input_error("bihomogenise requires a bivariate polynomial");
    int dx = std::max(f.degree_in(0), 0);
    int dy = std::max(f.degree_in(1), 0);
    std::vector<std::string> vars = {"X1", "X2", "Y1", "Y2"};
    MultiPoly g(vars);
    for (const auto& [e, c] : f.terms()) {
        Exps h = {e[0], dx - e[0], e[1], dy - e[1]};
        g.add_term(h, c);
    }
    return {g, {dx, dy}};
}

std::optional<BiDegree> bidegree_of(const MultiPoly& f) {
    if (f.vars().size() != 4 || f.is_zero()) return std::nullopt;
    int d1 = -1, d2 = -1;
    for (const auto& [e, c] : f.terms()) {
        int a = e[0] + e[1], b = e[2] + e[3];
        if (d1 < 0) {
            d1 = a;
            d2 = b;
        } else if (a != d1 || b != d2) {
            return std::nullopt;
        }
    }
    return BiDegree{d1, d2};
}

KroneckerResult kronecker(const MultiPoly& f, size_t keep) {
    if (f.is_zero()) throw input_error("kronecker of the zero polynomial");
    const auto& vars = f.vars();
    if (keep >= vars.size()) throw input_error("kronecker: nothing to collapse");
    int64_t a = 0;
    for (size_t i = keep; i < vars.size(); ++i) a = std::max<int64_t>(a, f.degree_in(i));
    a += 1;
    std::vector<std::string> newvars(vars.begin(), vars.begin() + keep);
    newvars.push_back(vars[keep]);
    MultiPoly r(newvars);
    Exps g(newvars.size());
    for (const auto& [e, c] : f.terms()) {
        for (size_t i = 0; i < keep; ++i) g[i] = e[i];
        int64_t z = 0, w = 1;
        for (size_t i = keep; i < vars.size(); ++i) {
            z += e[i] * w;
            w *= a;
        }
        if (z > INT32_MAX) throw input_error("kronecker exponent overflow");
        g[keep] = static_cast<int32_t>(z);
        r.add_term(g, c);
    }
    return {r, a};
}

std::optional<MultiPoly> inverse_kronecker(const MultiPoly& g, size_t collapsed_var,
                                           int64_t base, int r,
                                           const std::vector<std::string>& names) {
    if (base < 2) throw input_error("inverse_kronecker: base must be >= 2");
    if (r < 1 || names.size() != static_cast<size_t>(r))
        throw input_error("inverse_kronecker: bad variable list");
    std::vector<std::string> newvars;
    for (size_t i = 0; i < g.vars().size(); ++i)
        if (i != collapsed_var) newvars.push_back(g.vars()[i]);
    newvars.insert(newvars.end(), names.begin(), names.end());
    MultiPoly out(newvars);
    Exps f(newvars.size());
    for (const auto& [e, c] : g.terms()) {
        std::fill(f.begin(), f.end(), 0);
        size_t k = 0;
        for (size_t i = 0; i < g.vars().size(); ++i)
            if (i != collapsed_var) f[k++] = e[i];
        int64_t z = e[collapsed_var];
        for (int i = 0; i < r; ++i) {
            f[k + i] = static_cast<int32_t>(z % base);
            z /= base;
        }
        if (z != 0) return std::nullopt;  // digit beyond position r-1
        out.add_term(f, c);
    }
    return out;
}

MultiPoly shift_transform(const MultiPoly& f, int64_t E) {
    if (f.is_zero()) throw input_error("shift_transform of the zero polynomial");
    if (f.vars().size() != 2) throw input_error("shift_transform requires a bivariate polynomial");
    if (E < 1) throw input_error("shift_transform: E must be >= 1");
    MultiPoly value(f.vars());
    value.add_term({static_cast<int32_t>(E), 0}, 1);  // T^E
    value.add_term({0, 1}, 1);                        // + Y
    return f.substitute(1, value);
}

// single-divisor reduction: repeatedly cancel leading terms divisible by LT(f)
static bool divide_impl(const MultiPoly& f, const MultiPoly& g, MultiPoly* quotient) {
    if (f.is_zero()) throw input_error("division by the zero polynomial");
    if (f.vars() != g.vars()) throw internal_error("variable context mismatch");
    MultiPoly r = g;
    MultiPoly q(f.vars());
    const Exps& lf = f.terms().begin()->first;
    const mpq_class& cf = f.terms().begin()->second;
    Exps diff(lf.size());
    while (!r.is_zero()) {
        const Exps& lr = r.terms().begin()->first;
        bool ok = true;
        for (size_t i = 0; i < lf.size(); ++i) {
            diff[i] = lr[i] - lf[i];
            if (diff[i] < 0) ok = false;
        }
        if (!ok) return false;
        mpq_class c = r.terms().begin()->second / cf;
        MultiPoly m(f.vars());
        m.add_term(diff, c);
        r -= m * f;
        if (quotient) q += m;
    }
    if (quotient) *quotient = q;
    return true;
}

bool divides(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return true;
    return divide_impl(f, g, nullptr);
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return MultiPoly(f.vars());
    MultiPoly q;
    if (!divide_impl(f, g, &q)) throw internal_error("exact_divide: not divisible");
    return q;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    Parser(const std::string& text, const std::vector<std::string>& v) : s(text), vars(v) {}

    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("syntax error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    MultiPoly parse() {
        MultiPoly r = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected character");
        return r;
    }

    MultiPoly expr() {
        skip_ws();
        bool neg = false;
        while (accept('+') || peek('-')) {
            if (accept('-')) neg = !neg;
        }
        MultiPoly r = term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    MultiPoly term() {
        MultiPoly r = factor();
        while (accept('*')) r = r * factor();
        return r;
    }

    MultiPoly factor() {
        MultiPoly b = primary();
        if (accept('^')) {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected integer exponent");
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long e = std::stol(s.substr(start, pos - start));
            if (e > 100000) fail("exponent too large");
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    MultiPoly primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            MultiPoly r = expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return r;
        }
        if (c == '-') {
            ++pos;
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class v(s.substr(start, pos - start));
            return MultiPoly::constant(vars, mpq_class(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return MultiPoly::variable(vars, i);
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw input_error("empty variable name");
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw input_error("duplicate variable name: " + vars[i]);
    }
    Parser p(text, vars);
    return p.parse();
}

}  // namespace bhc
