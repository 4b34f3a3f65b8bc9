#include "wv/formal.hpp"

#include <algorithm>
#include <numeric>

namespace wv {

FormalElement formal_one(std::size_t dim) {
    FormalElement f;
    f.add_term(wzero(dim), 1);
    return f;
}

FormalElement formal_mul(const FormalElement& a, const FormalElement& b) {
    FormalElement out;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) out.add_term(wadd(wa, wb), ca * cb);
    return out;
}

long long key_height(const std::vector<int>& q) { return std::accumulate(q.begin(), q.end(), 0LL); }

std::vector<int> key_add(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<int> lattice_key(const RootDatum& d, const Weight& x) {
    std::vector<Rat> c = d.simple_root_coords(x);
    std::vector<int> q(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!rat_is_integer(c[i])) throw Error("weight is not in the root lattice");
        q[i] = static_cast<int>(c[i].numerator());
    }
    return q;
}

LatticeSeries lattice_unit(const Weight& base, int rank) {
    LatticeSeries s;
    s.base = base;
    s.terms.emplace(std::vector<int>(static_cast<std::size_t>(rank), 0), 1);
    return s;
}

void lattice_add_shifted(LatticeSeries& a, const LatticeSeries& b, const std::vector<int>& offset,
                         long long scale, long long depth) {
    for (const auto& [q, c] : b.terms) {
        std::vector<int> k = key_add(q, offset);
        if (key_height(k) > depth) continue;
        a.add_term(k, scale * c);
    }
}

void lattice_mul_inv_linear(LatticeSeries& a, const std::vector<int>& eta, long long depth) {
    long long he = key_height(eta);
    if (he <= 0) throw Error("geometric factor needs positive height");
    // Ascending prefix sums along the eta direction: g[q] = f[q] + g[q - eta].
    for (long long h = 0; h <= depth; ++h) {
        std::vector<std::vector<int>> level;
        for (const auto& [q, c] : a.terms)
            if (key_height(q) == h) level.push_back(q);
        for (const auto& q : level) {
            std::vector<int> up = key_add(q, eta);
            if (key_height(up) > depth) continue;
            a.add_term(up, a.coeff(q));
        }
    }
}

void lattice_mul_linear(LatticeSeries& a, const std::vector<int>& eta, long long depth) {
    LatticeSeries shifted;
    shifted.base = a.base;
    for (const auto& [q, c] : a.terms) {
        std::vector<int> k = key_add(q, eta);
        if (key_height(k) > depth) continue;
        shifted.add_term(k, c);
    }
    for (const auto& [q, c] : shifted.terms) a.add_term(q, -c);
}

void lattice_truncate(LatticeSeries& a, long long depth) {
    for (auto it = a.terms.begin(); it != a.terms.end();) {
        if (key_height(it->first) > depth)
            it = a.terms.erase(it);
        else
            ++it;
    }
}

LatticeSeries lattice_divide(const LatticeSeries& numer, const LatticeSeries& denom, long long depth) {
    std::vector<int> zero;
    if (denom.terms.empty()) throw Error("division by empty series");
    zero.assign(denom.terms.begin()->first.size(), 0);
    long long lead = denom.coeff(zero);
    if (lead != 1 && lead != -1) throw Error("series division needs unit leading coefficient");
    for (const auto& [q, c] : denom.terms)
        if (q != zero && key_height(q) <= 0) throw Error("series division needs graded denominator");

    LatticeSeries quot;
    quot.base = numer.base;
    LatticeSeries rem = numer;
    lattice_truncate(rem, depth);
    auto cmp = [](const std::vector<int>& x, const std::vector<int>& y) {
        long long hx = key_height(x), hy = key_height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    };
    while (!rem.terms.empty()) {
        auto leading = rem.terms.begin();
        for (auto it = rem.terms.begin(); it != rem.terms.end(); ++it)
            if (cmp(it->first, leading->first)) leading = it;
        std::vector<int> q0 = leading->first;
        long long c = leading->second * lead; // lead is +/-1
        quot.add_term(q0, c);
        for (const auto& [k, g] : denom.terms) {
            std::vector<int> pos = key_add(q0, k);
            if (key_height(pos) > depth) continue;
            rem.add_term(pos, -c * g);
        }
    }
    return quot;
}

FormalElement lattice_to_formal(const RootDatum& d, const LatticeSeries& s) {
    FormalElement f;
    for (const auto& [q, c] : s.terms) {
        Weight w = s.base;
        for (std::size_t i = 0; i < q.size(); ++i)
            w = wsub(w, wscale(Rat(q[i]), d.simple_roots[i]));
        f.add_term(w, c);
    }
    return f;
}

} // namespace wv
