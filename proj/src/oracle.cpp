#include "wv/oracle.hpp"

#include "wv/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <set>

namespace wv {

using BigInt = boost::multiprecision::cpp_int;

long long WeightDiagram::dimension() const {
    long long n = 0;
    for (const auto& [w, m] : multiplicities) n += m;
    return n;
}

SubRootSystem full_system(const RootDatum& d) {
    SubRootSystem s;
    s.simple_roots = d.simple_roots;
    for (const auto& [root, mult] : d.positive_roots) s.positive_roots.push_back(root);
    s.rho = d.rho;
    return s;
}

Weight sub_dominant_representative(const SubRootSystem& sub, const Weight& x) {
    Weight y = x;
    for (;;) {
        bool moved = false;
        for (const Weight& s : sub.simple_roots) {
            if (wdot(y, s) < Rat(0)) {
                y = wsub(y, wscale(Rat(2) * wdot(y, s) / wdot(s, s), s));
                moved = true;
                break;
            }
        }
        if (!moved) return y;
    }
}

std::vector<Weight> sub_orbit(const SubRootSystem& sub, const Weight& x) {
    std::set<Weight> seen{x};
    std::vector<Weight> frontier{x};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& y : frontier)
            for (const Weight& s : sub.simple_roots) {
                Weight img = wsub(y, wscale(Rat(2) * wdot(y, s) / wdot(s, s), s));
                if (seen.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

long long sub_weyl_dimension(const SubRootSystem& sub, const Weight& mu) {
    if (!sub.is_dominant(mu)) throw Error("dimension formula needs a dominant weight");
    Weight num = wadd(mu, sub.rho);
    BigInt n = 1, d = 1;
    for (const Weight& alpha : sub.positive_roots) {
        Rat a = wdot(num, alpha);
        Rat b = wdot(sub.rho, alpha);
        n *= BigInt(a.numerator()) * BigInt(b.denominator());
        d *= BigInt(a.denominator()) * BigInt(b.numerator());
    }
    if (d == 0 || n % d != 0) throw Error("internal: non-integral Weyl dimension");
    BigInt dim = n / d;
    if (dim <= 0 || dim > BigInt(std::numeric_limits<long long>::max()))
        throw Error("Weyl dimension out of range");
    return static_cast<long long>(dim);
}

long long weyl_dimension(const RootDatum& d, const Weight& mu) {
    if (!d.is_integral(mu)) throw Error("dimension formula needs an integral weight");
    return sub_weyl_dimension(full_system(d), mu);
}

WeightDiagram sub_freudenthal(const SubRootSystem& sub, const Weight& mu) {
    if (!sub.is_dominant(mu)) throw Error("Freudenthal needs a dominant highest weight");
    if (!sub.is_integral(mu)) throw Error("Freudenthal needs an integral highest weight");

    WeightDiagram diagram;
    diagram.hw = mu;
    if (sub.simple_roots.empty()) {
        diagram.multiplicities[mu] = 1;
        return diagram;
    }

    // Multiplicities at dominant representatives, filled level by level in
    // the height of mu - nu; lookups mirror through the chamber.
    std::map<Weight, long long> dom_mult;
    dom_mult[mu] = 1;
    auto lookup = [&](const Weight& w) -> long long {
        auto it = dom_mult.find(sub_dominant_representative(sub, w));
        return it == dom_mult.end() ? 0 : it->second;
    };

    Rat mu_norm = wdot(wadd(mu, sub.rho), wadd(mu, sub.rho));
    std::set<Weight> level{mu};
    std::set<Weight> visited{mu};
    while (!level.empty()) {
        std::set<Weight> next;
        for (const Weight& xi : level)
            for (const Weight& s : sub.simple_roots) {
                Weight child = wsub(xi, s);
                if (visited.insert(child).second) next.insert(child);
            }
        // Two passes: fresh dominant weights first, since a wall orbit-mate in
        // the same level must see its representative's multiplicity.
        for (const Weight& xi : next) {
            if (sub_dominant_representative(sub, xi) != xi) continue;
            Rat denom = mu_norm - wdot(wadd(xi, sub.rho), wadd(xi, sub.rho));
            Rat acc(0);
            for (const Weight& alpha : sub.positive_roots) {
                Weight up = xi;
                for (;;) {
                    up = wadd(up, alpha);
                    long long m = lookup(up);
                    if (m == 0) break; // strings above xi are contiguous inside the diagram
                    acc += Rat(2 * m) * wdot(up, alpha);
                }
            }
            if (denom == Rat(0)) throw Error("internal: Freudenthal denominator vanished");
            Rat m = acc / denom;
            if (!rat_is_integer(m) || m < Rat(0)) throw Error("internal: non-integral multiplicity");
            if (m > Rat(0)) dom_mult[xi] = m.numerator();
        }
        std::set<Weight> kept;
        for (const Weight& xi : next)
            if (dom_mult.count(sub_dominant_representative(sub, xi))) kept.insert(xi);
        level = std::move(kept);
    }

    for (const auto& [nu, m] : dom_mult)
        for (const Weight& w : sub_orbit(sub, nu)) diagram.multiplicities[w] = m;
    if (diagram.dimension() != sub_weyl_dimension(sub, mu))
        throw Error("internal: Freudenthal dimension mismatch");
    return diagram;
}

WeightDiagram freudenthal(const RootDatum& d, const Weight& mu) {
    if (!d.is_dominant(mu) || !d.is_integral(mu)) throw Error("highest weight must be dominant integral");
    return sub_freudenthal(full_system(d), mu);
}

std::map<Weight, long long> brute_force_branch(const EmbeddingSpec& spec, const Weight& mu,
                                               const WeightDiagram* ambient_diagram) {
    WeightDiagram local;
    if (!ambient_diagram) {
        local = freudenthal(spec.ambient, mu);
        ambient_diagram = &local;
    }

    std::map<Weight, long long> projected;
    for (const auto& [w, m] : ambient_diagram->multiplicities) {
        Weight p = spec.project_atilde(w);
        projected[p] += m;
    }

    // Peel: highest remaining projected weight by (ambient height, lex).
    auto higher = [&](const Weight& x, const Weight& y) {
        Rat hx = spec.ambient.height(x), hy = spec.ambient.height(y);
        if (hx != hy) return hx > hy;
        return x > y;
    };
    std::map<Weight, long long> b;
    std::map<Weight, WeightDiagram> sub_diagrams;
    while (!projected.empty()) {
        auto top = projected.begin();
        for (auto it = projected.begin(); it != projected.end(); ++it)
            if (higher(it->first, top->first)) top = it;
        Weight nu = top->first;
        long long count = top->second;
        if (count < 0 || !spec.is_atilde_dominant(nu))
            throw Error("internal: inconsistent projection while peeling");
        auto cached = sub_diagrams.find(nu);
        if (cached == sub_diagrams.end())
            cached = sub_diagrams.emplace(nu, sub_freudenthal(spec.a, nu)).first;
        for (const auto& [w, m] : cached->second.multiplicities) {
            auto it = projected.find(w);
            long long have = it == projected.end() ? 0 : it->second;
            long long left = have - count * m;
            if (left < 0) throw Error("internal: negative multiplicity while peeling");
            if (left == 0) {
                if (it != projected.end()) projected.erase(it);
            } else {
                projected[w] = left;
            }
        }
        b[nu] += count;
    }
    return b;
}

FormalElement character_by_division(const RootDatum& d, const Weight& mu, long long depth) {
    if (!d.is_dominant(mu) || !d.is_integral(mu)) throw Error("highest weight must be dominant integral");
    const std::vector<WeylElement> group = enumerate_group(d);

    LatticeSeries num;
    num.base = mu;
    Weight shifted = wadd(mu, d.rho);
    for (const WeylElement& w : group)
        num.add_term(lattice_key(d, wsub(shifted, act(d, w, shifted))), w.sign());

    LatticeSeries den;
    den.base = wzero(static_cast<std::size_t>(d.ambient_dim));
    for (const WeylElement& w : group)
        den.add_term(lattice_key(d, wsub(d.rho, act(d, w, d.rho))), w.sign());

    LatticeSeries q = lattice_divide(num, den, depth);
    q.base = mu;
    return lattice_to_formal(d, q);
}

} // namespace wv
