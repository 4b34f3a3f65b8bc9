#include "wv/resolution.hpp"

#include <algorithm>
#include <set>

namespace wv {

namespace {

void sort_grade(std::vector<ResolutionEntry>& grade) {
    std::sort(grade.begin(), grade.end(),
              [](const ResolutionEntry& a, const ResolutionEntry& b) { return a.u < b.u; });
}

} // namespace

ResolutionSequence bgg_resolution(const EmbeddingSpec& spec, const Weight& mu) {
    const RootDatum& d = spec.ambient;
    SingularDecomposition dec = decompose(spec, mu);
    int max_len = 0;
    for (const SingularEntry& e : dec.entries) max_len = std::max(max_len, e.u.length());

    ResolutionSequence seq;
    seq.mu = mu;
    seq.grades.resize(static_cast<std::size_t>(max_len) + 1);
    Weight shifted = wadd(mu, d.rho);
    for (const SingularEntry& e : dec.entries) {
        ResolutionEntry r;
        r.u = e.u;
        r.sign = e.sign;
        r.g_hw = wsub(act(d, e.u, shifted), d.rho);
        r.carrier = e.carrier;
        r.perp_hw = e.perp_hw;
        seq.grades[static_cast<std::size_t>(e.u.length())].push_back(std::move(r));
    }
    for (auto& g : seq.grades) sort_grade(g);
    if (seq.grades[0].size() != 1 || !seq.grades[0][0].u.word.empty())
        throw Error("internal: grade zero is not the single identity entry");
    return seq;
}

bool verify_euler(const ResolutionSequence& seq, const EmbeddingSpec& spec, long long depth) {
    ParabolicData pd = parabolic_data(spec);
    std::vector<GVEntry> entries;
    for (std::size_t k = 0; k < seq.grades.size(); ++k) {
        int sign = k % 2 == 0 ? 1 : -1;
        for (const ResolutionEntry& r : seq.grades[k]) {
            GVEntry e;
            e.u = r.u;
            e.sign = sign;
            e.carrier = r.carrier;
            e.gv = gv_character(pd, r.perp_hw, depth);
            entries.push_back(std::move(e));
        }
    }
    FormalElement sum = euler_sum(spec.ambient, entries, seq.mu, depth);
    FormalElement reference = character_window(spec.ambient, seq.mu, depth);
    return sum == reference;
}

ResolutionSequence resolution_from_branching(const EmbeddingSpec& spec, const Weight& mu, long long depth) {
    if (spec.perp.rank() != 1)
        throw Error("branching reconstruction needs an orthogonal partner of rank 1");
    const RootDatum& d = spec.ambient;
    const Weight& beta = spec.perp.simple_roots.front();

    long long fan_depth = depth > 0 ? depth : rat_floor(d.height(wscale(Rat(2), spec.project_atilde(wadd(mu, d.rho))))) + 2;
    if (fan_depth < 2) fan_depth = 2;
    BranchingRun run(spec, mu, fan_depth);
    const Fan& fan = run.fan();

    // Candidate positions: projections of the linked weights, shifted by
    // gamma0. The recurrence combination recovers eps(u) dim(L_perp) there.
    std::set<Weight> candidates;
    Weight shifted = wadd(mu, d.rho);
    for (const WeylElement& w : enumerate_group(d))
        candidates.insert(wadd(spec.project_atilde(wsub(act(d, w, shifted), d.rho)), fan.gamma0));

    std::vector<ResolutionEntry> entries;
    for (const Weight& xi : candidates) {
        long long combo = -fan.s0 * run.k(xi);
        for (const auto& [g, s] : fan.shifts) combo -= s * run.k(wadd(xi, g));
        if (combo == 0) continue;
        long long dim = combo > 0 ? combo : -combo;
        ResolutionEntry r;
        r.sign = combo > 0 ? 1 : -1;
        // dim = m+1 fixes the rank-1 highest weight (m/2) beta.
        r.perp_hw = wscale(Rat(dim - 1, 2), beta);
        r.carrier = wadd(wsub(xi, fan.gamma0), spec.defect_perp);
        r.g_hw = wadd(r.carrier, r.perp_hw);
        Weight target = wadd(r.g_hw, d.rho);
        DominantResult dom = to_dominant(d, target);
        if (dom.dominant != shifted)
            throw Error("internal: recovered weight is not linked to mu");
        r.u = inverse(d, dom.w);
        if (r.sign != r.u.sign())
            throw Error("internal: recovered sign disagrees with the Weyl length");
        entries.push_back(std::move(r));
    }

    std::size_t expected = enumerate_group(d).size() / spec.perp_weyl.size();
    if (entries.size() != expected)
        throw Error("branching data does not determine the representatives uniquely");

    int max_len = 0;
    for (const ResolutionEntry& e : entries) max_len = std::max(max_len, e.u.length());
    ResolutionSequence seq;
    seq.mu = mu;
    seq.grades.resize(static_cast<std::size_t>(max_len) + 1);
    for (ResolutionEntry& e : entries) {
        std::size_t k = static_cast<std::size_t>(e.u.length());
        seq.grades[k].push_back(std::move(e));
    }
    for (auto& g : seq.grades) sort_grade(g);
    return seq;
}

bool sequences_equal(const ResolutionSequence& a, const ResolutionSequence& b) {
    if (a.mu != b.mu || a.grades.size() != b.grades.size()) return false;
    for (std::size_t k = 0; k < a.grades.size(); ++k) {
        if (a.grades[k].size() != b.grades[k].size()) return false;
        for (std::size_t i = 0; i < a.grades[k].size(); ++i) {
            const ResolutionEntry& x = a.grades[k][i];
            const ResolutionEntry& y = b.grades[k][i];
            if (!(x.u == y.u) || x.sign != y.sign || x.g_hw != y.g_hw || x.carrier != y.carrier ||
                x.perp_hw != y.perp_hw)
                return false;
        }
    }
    return true;
}

} // namespace wv
