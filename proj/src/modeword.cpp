#include "bhz/modeword.hpp"

#include <sstream>
#include <stdexcept>

namespace bhz {

AffineScalar AffineScalar::minus_hb(long mult) const {
    AffineScalar a = *this;
    if (mult != 0) a.c_h -= ParamScalar::frakb().scaled(Rat(mult));
    return a;
}

AffineScalar AffineScalar::negated() const {
    AffineScalar a;
    a.c0 = -c0;
    a.c_h = -c_h;
    for (const auto& [v, c] : lin) a.lin.push_back({v, -c});
    return a;
}

AffineScalar AffineScalar::plus(const AffineScalar& o) const {
    AffineScalar a = *this;
    a.c0 += o.c0;
    a.c_h += o.c_h;
    for (const auto& [v, c] : o.lin) {
        bool merged = false;
        for (auto& [w, d] : a.lin)
            if (w == v) {
                d += c;
                merged = true;
                break;
            }
        if (!merged) a.lin.push_back({v, c});
    }
    return a;
}

bool AffineScalar::is_zero() const {
    if (!c0.is_zero() || !c_h.is_zero()) return false;
    for (const auto& [v, c] : lin)
        if (c != 0) return false;
    return true;
}

ModeWord ModeWord::composed(const ModeWord& other) const {
    ModeWord w = *this;
    w.coeff = w.coeff * other.coeff;
    w.h_shift += other.h_shift;
    w.lam_shift += other.lam_shift;
    w.factors.insert(w.factors.end(), other.factors.begin(), other.factors.end());
    return w;
}

std::string ModeWord::str() const {
    std::ostringstream os;
    if (!(coeff == ParamScalar::one()) || h_shift || lam_shift) {
        os << "[" << coeff.str();
        if (h_shift) os << " hbar^" << h_shift;
        if (lam_shift) os << " Lambda^" << lam_shift;
        os << "] ";
    }
    if (factors.empty()) os << "1";
    for (const auto& f : factors) {
        if (f.kind == Factor::Kind::Gen) {
            if (f.mode == 0 && f.zshift != 0)
                os << "(J^" << f.color << "_0 - " << f.zshift << "*bh)";
            else
                os << "J^" << f.color << "_{" << f.mode << "}";
        } else {
            os << "(";
            bool any = false;
            if (!f.sc.c0.is_zero()) {
                os << f.sc.c0.str();
                any = true;
            }
            for (const auto& [v, c] : f.sc.lin) {
                if (any) os << " + ";
                if (c != 1) os << rat_str(c) << "*";
                os << var_name(v);
                any = true;
            }
            if (!f.sc.c_h.is_zero()) {
                if (any) os << " + ";
                os << "(" << f.sc.c_h.str() << ")*hbar";
                any = true;
            }
            if (!any) os << "0";
            os << ")";
        }
        os << " ";
    }
    return os.str();
}

OperatorSpec OperatorSpec::scaled(const ParamScalar& c) const {
    OperatorSpec r;
    if (c.is_zero()) return r;
    r.words.reserve(words.size());
    for (const auto& w : words) r.words.push_back(w.scaled(c));
    return r;
}

OperatorSpec OperatorSpec::composed(const OperatorSpec& other) const {
    OperatorSpec r;
    r.words.reserve(words.size() * other.words.size());
    for (const auto& a : words)
        for (const auto& b : other.words) r.words.push_back(a.composed(b));
    return r;
}

std::string OperatorSpec::str() const {
    std::ostringstream os;
    if (words.empty()) return "0\n";
    for (const auto& w : words) os << w.str() << "\n";
    return os.str();
}

ModeWord tilde_weight(const Path& gamma, const std::vector<AffineScalar>& u, int diag_shift) {
    if (static_cast<int>(u.size()) != gamma.length())
        throw std::invalid_argument("tilde_weight: u-vector length mismatch");
    ModeWord w;
    for (int j = 1; j <= gamma.length(); ++j) {
        int g = gamma.gamma(j);
        if (g != 0) {
            w.factors.push_back(Factor::gen(1, g));  // step (1,k): J^1_{-k} = J^1_{gamma}
        } else {
            int level = gamma.height(j);  // flat step at its height
            w.factors.push_back(
                Factor::scalar(u[static_cast<size_t>(j - 1)].minus_hb(level + diag_shift)));
        }
    }
    return w;
}

ModeWord colored_weight(const Path& gamma, const std::vector<int>& coloring, int keep_first) {
    if (static_cast<int>(coloring.size()) != gamma.length())
        throw std::invalid_argument("colored_weight: coloring length mismatch");
    int keep = keep_first < 0 ? gamma.length() : keep_first;
    ModeWord w;
    for (int j = 1; j <= keep; ++j) {
        int g = gamma.gamma(j);
        int color = coloring[static_cast<size_t>(j - 1)];
        if (g != 0) {
            w.factors.push_back(Factor::gen(color, g));
        } else {
            int shift = gamma.gamma_suffix(j) + gamma.length() - j;
            w.factors.push_back(Factor::zero_mode(color, shift));
        }
    }
    return w;
}

}  // namespace bhz
