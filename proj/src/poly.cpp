#include "bhz/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bhz {

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(Rat c, int k) {
    Poly p;
    if (c == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rat(0));
    p.coeffs_.back() = std::move(c);
    return p;
}

Poly Poly::from_coeffs(std::vector<Rat> cs) {
    Poly p;
    p.coeffs_ = std::move(cs);
    p.trim();
    return p;
}

bool Poly::is_monomial(Rat& c, int& k) const {
    if (is_zero()) return false;
    for (int i = 0; i < deg(); ++i)
        if (coeffs_[static_cast<size_t>(i)] != 0) return false;
    c = coeffs_.back();
    k = deg();
    return true;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(k), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + static_cast<size_t>(k)] = coeffs_[i];
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::one();
    Poly b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

bool Poly::exact_div(const Poly& d, Poly& q) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    if (is_zero()) {
        q = Poly();
        return true;
    }
    if (deg() < d.deg()) return false;
    std::vector<Rat> rem = coeffs_;
    std::vector<Rat> quot(static_cast<size_t>(deg() - d.deg()) + 1, Rat(0));
    for (int i = deg() - d.deg(); i >= 0; --i) {
        Rat c = rem[static_cast<size_t>(i + d.deg())] / d.lc();
        quot[static_cast<size_t>(i)] = c;
        if (c != 0)
            for (int j = 0; j <= d.deg(); ++j)
                rem[static_cast<size_t>(i + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
    }
    for (int j = 0; j < d.deg(); ++j)
        if (rem[static_cast<size_t>(j)] != 0) return false;
    q = Poly::from_coeffs(std::move(quot));
    return true;
}

Poly Poly::rem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero");
    std::vector<Rat> rem = coeffs_;
    for (int i = deg() - d.deg(); i >= 0; --i) {
        Rat c = rem[static_cast<size_t>(i + d.deg())] / d.lc();
        if (c != 0)
            for (int j = 0; j <= d.deg(); ++j)
                rem[static_cast<size_t>(i + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
    }
    if (d.deg() >= 0) rem.resize(static_cast<size_t>(d.deg()));
    return Poly::from_coeffs(std::move(rem));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.rem(y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rat(1) / x.lc());
}

Rat Poly::eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
    return v;
}

Rat Poly::content_and_primitive(Poly& primitive) const {
    if (is_zero()) {
        primitive = Poly();
        return Rat(0);
    }
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (lc() < 0) content = -content;
    primitive = scaled(Rat(1) / content);
    return content;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rat& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int i = a.deg(); i >= 0; --i) {
        int c = ::cmp(a.coeffs_[static_cast<size_t>(i)], b.coeffs_[static_cast<size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace bhz
