#include "wv/branching.hpp"

#include "wv/oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace wv {

namespace {

// (ambient height, lex) comparison used for the fan base point.
bool height_lex_less(const RootDatum& d, const Weight& x, const Weight& y) {
    Rat hx = d.height(x), hy = d.height(y);
    if (hx != hy) return hx < hy;
    return x < y;
}

std::map<Weight, long long> poly_mul(const std::map<Weight, long long>& a,
                                     const std::map<Weight, long long>& b) {
    std::map<Weight, long long> out;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) {
            Weight g = wadd(ga, gb);
            long long c = out[g] += ca * cb;
            if (c == 0) out.erase(g);
        }
    return out;
}

} // namespace

std::map<Weight, long long> fan_factor(const Weight& xi, long long power, long long depth) {
    std::map<Weight, long long> f;
    std::size_t dim = xi.size();
    f[wzero(dim)] = 1;
    if (power >= 0) {
        std::map<Weight, long long> lin;
        lin[wzero(dim)] = 1;
        lin[xi] = -1; // keyed by gamma: (1 - e^{-xi}) has s-support {0, xi}
        for (long long i = 0; i < power; ++i) f = poly_mul(f, lin);
        return f;
    }
    // geometric hook: (1 - e^{-xi})^{-m} = sum_k C(k+m-1, m-1) e^{-k xi}
    long long m = -power;
    std::map<Weight, long long> geo;
    long long coeff = 1;
    Weight g = wzero(dim);
    for (long long k = 0; k <= depth; ++k) {
        geo[g] = coeff;
        g = wadd(g, xi);
        coeff = coeff * (k + m) / (k + 1);
    }
    return geo;
}

Fan compute_fan(const EmbeddingSpec& spec, long long depth) {
    if (depth < 1) throw Error("fan depth must be positive");
    const RootDatum& d = spec.ambient;

    // Group the non-orthogonal positive roots by their projection.
    std::map<Weight, long long> proj_count;
    std::set<Weight> perp_set(spec.perp.positive_roots.begin(), spec.perp.positive_roots.end());
    for (const auto& [alpha, mult] : d.positive_roots) {
        if (perp_set.count(alpha)) continue;
        Weight xi = spec.project_atilde(alpha);
        if (wis_zero(xi)) throw Error("internal: vanishing projection of a non-orthogonal root");
        proj_count[xi] += mult;
    }

    Fan fan;
    fan.depth = depth;
    std::map<Weight, long long> product;
    product[wzero(static_cast<std::size_t>(d.ambient_dim))] = 1;
    for (const auto& [xi, count] : proj_count) {
        long long mult_a = 0;
        for (const Weight& beta : spec.a.positive_roots)
            if (beta == xi) mult_a = 1;
        long long power = count - mult_a;
        if (power == 0) continue;
        if (power < 0) fan.exact = false;
        product = poly_mul(product, fan_factor(xi, power, depth));
    }

    // product = -sum s(gamma) e^{-gamma}; pick gamma0 as the lowest carrier.
    auto it0 = product.begin();
    for (auto it = product.begin(); it != product.end(); ++it)
        if (height_lex_less(d, it->first, it0->first)) it0 = it;
    fan.gamma0 = it0->first;
    fan.s0 = -it0->second;
    if (fan.s0 == 0) throw Error("internal: vanishing fan base coefficient");
    for (const auto& [g, c] : product) {
        if (g == fan.gamma0) continue;
        fan.shifts[wsub(g, fan.gamma0)] = -c;
    }
    return fan;
}

long long perp_dimension(const EmbeddingSpec& spec, const WeylElement& u, const Weight& mu) {
    const RootDatum& d = spec.ambient;
    Weight img = act(d, u, wadd(mu, d.rho));
    Weight perp_hw = wsub(spec.project_perp(img), spec.perp.rho);
    return sub_weyl_dimension(spec.perp, perp_hw);
}

BranchingRun::BranchingRun(const EmbeddingSpec& spec, const Weight& mu, long long fan_depth)
    : spec_(spec), mu_(mu), fan_(compute_fan(spec, fan_depth)) {
    const RootDatum& d = spec.ambient;
    if (!d.is_dominant(mu) || !d.is_integral(mu)) throw Error("highest weight must be dominant integral");

    // Ambient height as a covector: h(x) = <hv, x> with hv = sum t_i alpha_i,
    // t solving Gram t = ones.
    const int r = d.rank();
    std::vector<std::vector<Rat>> gram(static_cast<std::size_t>(r), std::vector<Rat>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                wdot(d.simple_roots[static_cast<std::size_t>(i)], d.simple_roots[static_cast<std::size_t>(j)]);
    std::vector<Rat> t = solve_linear(gram, std::vector<Rat>(static_cast<std::size_t>(r), Rat(1)));
    Weight hv = wzero(static_cast<std::size_t>(d.ambient_dim));
    for (int i = 0; i < r; ++i) hv = wadd(hv, wscale(t[static_cast<std::size_t>(i)], d.simple_roots[static_cast<std::size_t>(i)]));

    // Perturb by powers of a small epsilon so that phi is strictly positive on
    // every fan shift (shifts are (height, lex)-positive by choice of gamma0).
    Rat eps(1, 2);
    for (const auto& [g, s] : fan_.shifts) {
        Rat hg = wdot(hv, g);
        Rat total(0);
        for (const Rat& c : g) total += (c < Rat(0) ? -c : c);
        if (hg > Rat(0)) {
            Rat bound = hg / (total + 1);
            if (bound < eps) eps = bound;
        } else {
            // leading coordinate is positive; epsilon below lead/(sum+1) works
            Rat lead(0);
            for (const Rat& c : g)
                if (c != Rat(0)) {
                    lead = c;
                    break;
                }
            if (lead <= Rat(0)) throw Error("internal: fan shift is not height-lex positive");
            Rat bound = lead / (total + 1);
            if (bound < eps) eps = bound;
        }
    }
    phi_vec_ = hv;
    Rat p = eps;
    for (std::size_t j = 0; j < phi_vec_.size(); ++j) {
        phi_vec_[j] += p;
        p *= eps;
    }
    for (const auto& [g, s] : fan_.shifts)
        if (phi(g) <= Rat(0)) throw Error("internal: phi not positive on a fan shift");

    // Source positions: eps(u) dim(L_perp^{mu_perp(u)}) at pi_atilde[u(mu+rho)-rho] + gamma0.
    const RootDatum& amb = spec.ambient;
    Weight shifted = wadd(mu, amb.rho);
    for (const WeylElement& u : compute_U(spec, mu)) {
        Weight linked = wsub(act(amb, u, shifted), amb.rho);
        Weight pos = wadd(spec.project_atilde(linked), fan_.gamma0);
        long long contrib = static_cast<long long>(u.sign()) * perp_dimension(spec, u, mu);
        auto [it, fresh] = sources_.emplace(pos, contrib);
        if (!fresh) it->second += contrib;
    }
    for (auto it = sources_.begin(); it != sources_.end();)
        it = it->second == 0 ? sources_.erase(it) : std::next(it);

    phi_top_ = Rat(0);
    bool first = true;
    for (const auto& [pos, c] : sources_) {
        Rat p2 = phi(pos);
        if (first || p2 > phi_top_) phi_top_ = p2;
        first = false;
    }
    if (first) throw Error("internal: no branching sources");
}

Rat BranchingRun::phi(const Weight& x) const { return wdot(phi_vec_, x); }

long long BranchingRun::k(const Weight& xi) {
    std::vector<Weight> stack{xi};
    while (!stack.empty()) {
        Weight t = stack.back();
        if (memo_.count(t)) {
            stack.pop_back();
            continue;
        }
        if (phi(t) > phi_top_) {
            memo_[t] = 0;
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (const auto& [g, s] : fan_.shifts) {
            Weight up = wadd(t, g);
            if (!memo_.count(up) && phi(up) <= phi_top_) {
                stack.push_back(up);
                ready = false;
            }
        }
        if (!ready) continue;
        long long acc = 0;
        auto src = sources_.find(t);
        if (src != sources_.end()) acc += src->second;
        for (const auto& [g, s] : fan_.shifts) {
            Weight up = wadd(t, g);
            auto it = memo_.find(up);
            long long kv = it == memo_.end() ? 0 : it->second;
            acc += s * kv;
        }
        if (acc % fan_.s0 != 0) throw Error("internal: recurrence value not divisible by s0");
        memo_[t] = -acc / fan_.s0;
        stack.pop_back();
    }
    return memo_.at(xi);
}

std::map<Weight, long long> BranchingRun::extract_b() {
    const RootDatum& d = spec_.ambient;
    // Every constituent's highest weight is a projected weight of L^mu, so
    // phi is bounded below by the projected orbit hull corners.
    Rat phi_bottom(0);
    bool first = true;
    for (const WeylElement& w : enumerate_group(d)) {
        Rat p = phi(spec_.project_atilde(act(d, w, mu_)));
        if (first || p < phi_bottom) phi_bottom = p;
        first = false;
    }

    // Reachable set: sources minus sums of fan shifts, pruned by phi.
    std::set<Weight> visited;
    std::vector<Weight> work;
    for (const auto& [pos, c] : sources_)
        if (visited.insert(pos).second) work.push_back(pos);
    std::map<Weight, long long> b;
    while (!work.empty()) {
        Weight x = work.back();
        work.pop_back();
        long long kx = k(x);
        if (kx != 0 && spec_.is_atilde_dominant(x)) {
            if (kx < 0) throw Error("internal: negative branching coefficient");
            b[x] = kx;
        }
        for (const auto& [g, s] : fan_.shifts) {
            Weight down = wsub(x, g);
            if (phi(down) < phi_bottom) continue;
            if (visited.insert(down).second) work.push_back(down);
        }
    }

    // Sum rule: dimensions must add up to dim L^mu.
    long long total = 0;
    for (const auto& [nu, m] : b) total += m * sub_weyl_dimension(spec_.a, nu);
    if (total != sub_weyl_dimension(full_system(d), mu_))
        throw Error("internal: branching sum rule failed");
    return b;
}

BranchingResult branch(const EmbeddingSpec& spec, const Weight& mu, long long depth) {
    const RootDatum& d = spec.ambient;
    Weight proj_top = spec.project_atilde(wadd(mu, d.rho));
    long long auto_depth = rat_floor(d.height(wscale(Rat(2), proj_top))) + 2;
    if (auto_depth < 2) auto_depth = 2;
    long long fan_depth = depth > 0 ? depth : auto_depth;

    BranchingRun run(spec, mu, fan_depth);
    BranchingResult res;
    res.mu = mu;
    res.b = run.extract_b();
    res.fan = run.fan();
    res.k_table = run.k_table();

    if (depth > 0) {
        // The caller pinned the window; reject it if the support leaks out.
        Rat top_h(0);
        bool first = true;
        for (const auto& [pos, c] : run.source_positions()) {
            Rat h = d.height(pos);
            if (first || h > top_h) top_h = h;
            first = false;
        }
        for (const auto& [xi, kv] : res.k_table)
            if (kv != 0 && top_h - d.height(xi) > Rat(depth))
                throw Error("depth insufficient: nonzero coefficient at the window boundary");
    }
    return res;
}

} // namespace wv
