#include "braidties/ratfunc.hpp"

namespace braidties {

// ---------------------------------------------------------------- Poly

Poly::Poly(Rational c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational c, int degree) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(d)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw MathError("Poly: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    std::vector<Rational> r = a.c_;
    const Rational inv_lead = b.leading().inverse();
    for (int d = a.degree(); d >= b.degree(); --d) {
        const Rational& top = r[static_cast<std::size_t>(d)];
        if (top.is_zero()) continue;
        Rational f = top * inv_lead;
        int shift = d - b.degree();
        for (int k = 0; k <= b.degree(); ++k)
            r[static_cast<std::size_t>(shift + k)] -= f * b.c_[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(shift)] = std::move(f);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Rational Poly::eval(const Rational& q) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q;
        acc += *it;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = c_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        first = false;
        std::string mono;
        if (d == 1) mono = "u";
        else if (d > 1) mono = "u^" + std::to_string(d);
        if (mono.empty()) out += mag.to_string();
        else if (mag.is_one()) out += mono;
        else out += mag.to_string() + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
    }
    if (!den_.leading().is_one()) {
        Rational inv = den_.leading().inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFunc::constant() const {
    if (!is_constant()) throw std::logic_error("RatFunc::constant on non-constant value");
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel before multiplying to keep degrees small.
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly a = g1.degree() > 0 ? Poly::divmod(num_, g1).first : num_;
    Poly d = g1.degree() > 0 ? Poly::divmod(o.den_, g1).first : o.den_;
    Poly c = g2.degree() > 0 ? Poly::divmod(o.num_, g2).first : o.num_;
    Poly b = g2.degree() > 0 ? Poly::divmod(den_, g2).first : den_;
    num_ = a * c;
    den_ = b * d;
    if (!den_.leading().is_one()) {
        Rational inv = den_.leading().inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw MathError("RatFunc: division by zero");
    return *this *= o.inverse();
}

std::optional<RatFunc> RatFunc::try_divide(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw MathError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

std::optional<Rational> RatFunc::try_eval(const Rational& q) const {
    Rational d = den_.eval(q);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(q) / d;
}

Rational RatFunc::eval(const Rational& q) const {
    auto v = try_eval(q);
    if (!v) throw MathError("RatFunc: pole at u = " + q.to_string() + " in " + to_string());
    return *v;
}

namespace {
int term_count(const Poly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) ++n;
    return n;
}
}  // namespace

bool RatFunc::needs_parens() const { return den_.is_one() && term_count(num_) > 1; }

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (term_count(num_) > 1) n = "(" + n + ")";
    if (term_count(den_) > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace braidties
