#include "wv/verma.hpp"

#include <algorithm>
#include <set>

namespace wv {

ParabolicData parabolic_data(const EmbeddingSpec& spec) {
    const RootDatum& d = spec.ambient;
    ParabolicData pd;
    pd.ambient = d;
    pd.levi = spec.perp;
    pd.levi_weyl = spec.perp_weyl;

    std::map<Weight, int> simple_index;
    for (int i = 0; i < d.rank(); ++i) simple_index.emplace(d.simple_roots[static_cast<std::size_t>(i)], i);

    bool found = false;
    for (const WeylElement& w : enumerate_group(d)) {
        std::set<int> image;
        bool ok = true;
        for (const Weight& s : spec.perp.simple_roots) {
            auto it = simple_index.find(act(d, w, s));
            if (it == simple_index.end()) {
                ok = false;
                break;
            }
            image.insert(it->second);
        }
        if (ok) {
            pd.levi_subset.assign(image.begin(), image.end());
            pd.witness = w;
            found = true;
            break;
        }
    }
    if (!found)
        throw Error("no Weyl rotation maps the orthogonal partner onto a simple-root subset");

    std::set<Weight> levi_set(spec.perp.positive_roots.begin(), spec.perp.positive_roots.end());
    for (const auto& [root, mult] : d.positive_roots)
        if (!levi_set.count(root)) pd.nilradical_roots.push_back(root);
    return pd;
}

namespace {

// ch L_levi^lambda as a truncated lattice series with base lambda, computed by
// dividing the levi singular elements (Weyl character formula in the Levi).
LatticeSeries levi_character(const ParabolicData& pd, const Weight& lambda, long long depth) {
    const RootDatum& d = pd.ambient;
    LatticeSeries num;
    num.base = lambda;
    Weight shifted = wadd(lambda, pd.levi.rho);
    for (const WeylElement& v : pd.levi_weyl)
        num.add_term(lattice_key(d, wsub(shifted, act(d, v, shifted))), v.sign());
    LatticeSeries den;
    den.base = wzero(static_cast<std::size_t>(d.ambient_dim));
    for (const WeylElement& v : pd.levi_weyl)
        den.add_term(lattice_key(d, wsub(pd.levi.rho, act(d, v, pd.levi.rho))), v.sign());
    LatticeSeries q = lattice_divide(num, den, depth);
    q.base = lambda;
    return q;
}

} // namespace

GVChar gv_character(const ParabolicData& pd, const Weight& lambda, long long depth) {
    if (depth < 1) throw Error("character window depth must be positive");
    if (!pd.levi.is_dominant(lambda) || !pd.levi.is_integral(lambda))
        throw Error("generalized Verma highest weight must be Levi-dominant integral");

    const RootDatum& d = pd.ambient;
    GVChar gv;
    gv.highest_weight = lambda;
    gv.depth = depth;
    gv.lattice = levi_character(pd, lambda, depth);
    for (const Weight& eta : pd.nilradical_roots)
        lattice_mul_inv_linear(gv.lattice, lattice_key(d, eta), depth);
    gv.terms = lattice_to_formal(d, gv.lattice);
    return gv;
}

std::vector<GVEntry> weyl_verma_decompose(const EmbeddingSpec& spec, const Weight& mu, long long depth) {
    ParabolicData pd = parabolic_data(spec);
    std::vector<GVEntry> out;
    for (const SingularEntry& e : decompose(spec, mu).entries) {
        GVEntry g;
        g.u = e.u;
        g.sign = e.sign;
        g.carrier = e.carrier;
        g.gv = gv_character(pd, e.perp_hw, depth);
        out.push_back(std::move(g));
    }
    return out;
}

FormalElement gv_to_ordinary(const ParabolicData& pd, const Weight& lambda, long long depth) {
    if (!pd.levi.is_dominant(lambda)) throw Error("weight must be Levi-dominant");
    const RootDatum& d = pd.ambient;
    // sum over W_levi of eps(v) ch M^{v(lambda+rho_levi)-rho_levi}
    //   = Psi_levi^lambda expanded against the full Kostant denominator.
    LatticeSeries s;
    s.base = lambda;
    Weight shifted = wadd(lambda, pd.levi.rho);
    for (const WeylElement& v : pd.levi_weyl)
        s.add_term(lattice_key(d, wsub(shifted, act(d, v, shifted))), v.sign());
    lattice_truncate(s, depth); // the Kostant factors only move downward
    for (const auto& [alpha, mult] : d.positive_roots)
        for (int i = 0; i < mult; ++i) lattice_mul_inv_linear(s, lattice_key(d, alpha), depth);
    return lattice_to_formal(d, s);
}

FormalElement standard_weyl_verma(const RootDatum& d, const Weight& mu, long long depth) {
    if (!d.is_dominant(mu) || !d.is_integral(mu)) throw Error("highest weight must be dominant integral");
    // sum over W of eps(w) ch M^{w(mu+rho)-rho}: the singular element expanded
    // against the Kostant denominator.
    LatticeSeries s;
    s.base = mu;
    FormalElement psi = singular_element(d, mu);
    for (const auto& [w, c] : psi.terms) s.add_term(lattice_key(d, wsub(mu, w)), c);
    lattice_truncate(s, depth);
    for (const auto& [alpha, mult] : d.positive_roots)
        for (int i = 0; i < mult; ++i) lattice_mul_inv_linear(s, lattice_key(d, alpha), depth);
    return lattice_to_formal(d, s);
}

FormalElement character_window(const RootDatum& d, const Weight& mu, long long depth) {
    LatticeSeries num;
    num.base = mu;
    FormalElement psi_mu = singular_element(d, mu);
    for (const auto& [w, c] : psi_mu.terms) num.add_term(lattice_key(d, wsub(mu, w)), c);
    LatticeSeries den;
    den.base = wzero(static_cast<std::size_t>(d.ambient_dim));
    FormalElement psi_0 = singular_element(d, wzero(static_cast<std::size_t>(d.ambient_dim)));
    for (const auto& [w, c] : psi_0.terms) den.add_term(lattice_key(d, wneg(w)), c);
    LatticeSeries q = lattice_divide(num, den, depth);
    q.base = mu;
    return lattice_to_formal(d, q);
}

FormalElement euler_sum(const RootDatum& d, const std::vector<GVEntry>& entries, const Weight& mu,
                        long long depth) {
    LatticeSeries acc;
    acc.base = mu;
    for (const GVEntry& e : entries) {
        // mu - (carrier + hw) = mu + rho - u(mu+rho) lies in the root lattice.
        std::vector<int> offset = lattice_key(d, wsub(mu, wadd(e.carrier, e.gv.highest_weight)));
        lattice_add_shifted(acc, e.gv.lattice, offset, e.sign, depth);
    }
    return lattice_to_formal(d, acc);
}

FormalElement truncate_to_window(const RootDatum& d, const FormalElement& f, const Weight& mu,
                                 long long depth) {
    FormalElement out;
    for (const auto& [w, c] : f.terms)
        if (d.height(wsub(mu, w)) <= Rat(depth)) out.add_term(w, c);
    return out;
}

} // namespace wv
