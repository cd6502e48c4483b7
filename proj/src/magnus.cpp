#include "biorder/magnus.hpp"

#include <stdexcept>

namespace biorder {

TruncatedSeries::TruncatedSeries(int vars, int maxDegree)
    : p_(vars), n_(maxDegree), constant_(0)
{
    if (vars < 1) throw std::invalid_argument("TruncatedSeries: need at least one variable");
    if (maxDegree < 1) throw std::invalid_argument("TruncatedSeries: truncation degree must be >= 1");
}

TruncatedSeries TruncatedSeries::one(int vars, int maxDegree)
{
    TruncatedSeries s(vars, maxDegree);
    s.constant_ = 1;
    return s;
}

TruncatedSeries TruncatedSeries::generator(int vars, int maxDegree, int gen, int unitSign)
{
    if (gen < 1 || gen > vars) throw std::invalid_argument("TruncatedSeries: generator out of range");
    TruncatedSeries s = one(vars, maxDegree);
    Monomial m;
    Int c = unitSign >= 0 ? 1 : -1;
    for (int d = 1; d <= maxDegree; ++d) {
        m.push_back(gen);
        s.terms_[m] = c;
        if (unitSign >= 0) break; // 1 + X_g only
        c = -c;                   // geometric series for the inverse
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    if (p_ != o.p_ || n_ != o.n_)
        throw std::invalid_argument("TruncatedSeries: mismatched shapes");
    TruncatedSeries r(p_, n_);
    r.constant_ = constant_ * o.constant_;
    auto add = [&r](const Monomial& m, const Int& c) {
        if (sign(c) == 0) return;
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (sign(it->second) == 0) r.terms_.erase(it);
        }
    };
    if (sign(o.constant_) != 0)
        for (const auto& [m, c] : terms_) add(m, c * o.constant_);
    if (sign(constant_) != 0)
        for (const auto& [m, c] : o.terms_) add(m, c * constant_);
    for (const auto& [m1, c1] : terms_) {
        if (static_cast<int>(m1.size()) >= n_) continue;
        for (const auto& [m2, c2] : o.terms_) {
            if (static_cast<int>(m1.size() + m2.size()) > n_) continue;
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            add(m, c1 * c2);
        }
    }
    return r;
}

int TruncatedSeries::lowest_degree() const
{
    int best = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        const int d = static_cast<int>(m.size());
        if (best == 0 || d < best) best = d;
    }
    return best;
}

std::vector<Int> TruncatedSeries::component(int n) const
{
    if (n < 1 || n > n_) throw std::invalid_argument("TruncatedSeries::component: degree out of range");
    size_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= static_cast<size_t>(p_);
    std::vector<Int> out(dim, Int(0));
    for (const auto& [m, c] : terms_) {
        if (static_cast<int>(m.size()) != n) continue;
        size_t idx = 0;
        for (int g : m) idx = idx * static_cast<size_t>(p_) + static_cast<size_t>(g - 1);
        out[idx] = c;
    }
    return out;
}

TruncatedSeries magnus_expand(const FreeWord& w, int vars, int maxDegree)
{
    if (w.max_generator() > vars)
        throw std::invalid_argument("magnus_expand: generator index out of range");
    TruncatedSeries acc = TruncatedSeries::one(vars, maxDegree);
    for (const Letter& l : w.letters()) {
        const TruncatedSeries g =
            TruncatedSeries::generator(vars, maxDegree, l.gen, l.exp >= 0 ? 1 : -1);
        const long long reps = l.exp >= 0 ? l.exp : -l.exp;
        for (long long i = 0; i < reps; ++i) acc = acc * g;
    }
    return acc;
}

} // namespace biorder
