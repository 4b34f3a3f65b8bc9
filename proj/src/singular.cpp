#include "wv/singular.hpp"

namespace wv {

static void require_dominant_integral(const RootDatum& d, const Weight& mu) {
    if (static_cast<int>(mu.size()) != d.ambient_dim) throw Error("weight dimension mismatch");
    if (!d.is_dominant(mu) || !d.is_integral(mu))
        throw Error("highest weight must be dominant integral");
}

FormalElement singular_element(const RootDatum& d, const Weight& mu) {
    require_dominant_integral(d, mu);
    Weight shifted = wadd(mu, d.rho);
    FormalElement out;
    const std::vector<WeylElement> group = enumerate_group(d);
    for (const WeylElement& w : group)
        out.add_term(wsub(act(d, w, shifted), d.rho), w.sign());
    if (out.size() != group.size()) throw Error("internal: singular element term collision");
    return out;
}

FormalElement sub_singular_element(const RootDatum& ambient, const SubRootSystem& sub,
                                   const std::vector<WeylElement>& sub_weyl, const Weight& nu) {
    Weight shifted = wadd(nu, sub.rho);
    FormalElement out;
    for (const WeylElement& v : sub_weyl)
        out.add_term(wsub(act(ambient, v, shifted), sub.rho), v.sign());
    return out;
}

std::vector<WeylElement> compute_U(const EmbeddingSpec& spec, const Weight& mu) {
    require_dominant_integral(spec.ambient, mu);
    Weight shifted = wadd(mu, spec.ambient.rho);
    const std::vector<WeylElement> group = enumerate_group(spec.ambient);
    std::vector<WeylElement> u;
    for (const WeylElement& w : group) {
        Weight img = act(spec.ambient, w, shifted);
        // mu_perp(w) + rho_perp = pi_perp[w(mu+rho)]; strict dominance picks
        // one representative per class of W_{a_perp}\W and never meets a wall
        // (w(mu+rho) is regular and the test roots are roots of g).
        bool inside = true;
        for (const Weight& s : spec.perp.simple_roots) {
            Rat p = wdot(img, s);
            if (p == Rat(0)) throw Error("internal: regular weight paired to zero with a perp root");
            if (p < Rat(0)) {
                inside = false;
                break;
            }
        }
        if (inside) u.push_back(w);
    }
    std::size_t expected = group.size() / spec.perp_weyl.size();
    if (u.size() != expected) throw Error("internal: wrong number of coset representatives");
    return u;
}

SingularDecomposition decompose(const EmbeddingSpec& spec, const Weight& mu) {
    const RootDatum& d = spec.ambient;
    SingularDecomposition dec;
    dec.mu = mu;
    Weight shifted = wadd(mu, d.rho);
    for (const WeylElement& u : compute_U(spec, mu)) {
        Weight linked = wsub(act(d, u, shifted), d.rho);
        SingularEntry e;
        e.u = u;
        e.sign = u.sign();
        e.carrier = wadd(spec.project_atilde(linked), spec.defect_perp);
        e.perp_hw = wsub(spec.project_perp(linked), spec.defect_perp);
        if (!spec.perp.is_dominant(e.perp_hw)) throw Error("internal: perp highest weight not dominant");
        dec.entries.push_back(e);
    }
    return dec;
}

FormalElement expand_decomposition(const EmbeddingSpec& spec, const SingularDecomposition& dec) {
    FormalElement out;
    for (const SingularEntry& e : dec.entries) {
        FormalElement psi = sub_singular_element(spec.ambient, spec.perp, spec.perp_weyl, e.perp_hw);
        out.add_shifted(psi, e.carrier, e.sign);
    }
    return out;
}

} // namespace wv
