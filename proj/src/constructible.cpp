#include "singclass/constructible.hpp"

namespace singclass {

const Stratum* Stratification::find(const std::string& id) const {
    for (auto& s : strata)
        if (s.id == id) return &s;
    return nullptr;
}

void Stratification::add(Stratum s) {
    if (find(s.id)) throw UsageError("duplicate stratum id '" + s.id + "'");
    strata.push_back(std::move(s));
}

long ConstructibleFunction::weight(const std::string& id) const {
    auto it = w_.find(id);
    return it == w_.end() ? 0 : it->second;
}

void ConstructibleFunction::set_weight(const std::string& id, long w) {
    if (!base_.find(id)) throw UsageError("unknown stratum id '" + id + "'");
    if (w == 0)
        w_.erase(id);
    else
        w_[id] = w;
}

static void require_same_base(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    if (a.base().strata.size() != b.base().strata.size())
        throw UsageError("constructible functions live on different stratifications");
    for (auto& s : a.base().strata)
        if (!b.base().find(s.id))
            throw UsageError("constructible functions live on different stratifications");
}

ConstructibleFunction& ConstructibleFunction::operator+=(const ConstructibleFunction& o) {
    require_same_base(*this, o);
    for (auto& [id, w] : o.w_) set_weight(id, weight(id) + w);
    return *this;
}

ConstructibleFunction& ConstructibleFunction::operator-=(const ConstructibleFunction& o) {
    require_same_base(*this, o);
    for (auto& [id, w] : o.w_) set_weight(id, weight(id) - w);
    return *this;
}

ConstructibleFunction& ConstructibleFunction::operator*=(long s) {
    if (s == 0) {
        w_.clear();
        return *this;
    }
    for (auto& [id, w] : w_) w *= s;
    return *this;
}

bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    require_same_base(a, b);
    return a.w_ == b.w_;
}

bool ConstructibleFunction::is_zero() const { return w_.empty(); }

long euler_integral(const ConstructibleFunction& alpha) {
    long acc = 0;
    for (auto& [id, w] : alpha.weights()) acc += w * alpha.base().find(id)->chi_c;
    return acc;
}

ConstructibleFunction exterior_product(const ConstructibleFunction& alpha,
                                       const ConstructibleFunction& beta) {
    Stratification prod;
    for (auto& s : alpha.base().strata)
        for (auto& t : beta.base().strata)
            prod.add({s.id + "|" + t.id, s.chi_c * t.chi_c, s.dim + t.dim});
    ConstructibleFunction r(std::move(prod));
    for (auto& [i, u] : alpha.weights())
        for (auto& [j, v] : beta.weights()) r.set_weight(i + "|" + j, u * v);
    return r;
}

long smooth_member_euler(int n, const std::vector<int>& degrees) {
    GenusSpec chern = builtin_genus(GenusKind::chern, n + 1);
    BundleClass tv(n);
    tv.twists = tvir_twists(n, degrees);
    CohomologyClass cls = genus_of_bundle(chern, tv) * fundamental_class(n, degrees);
    Rational e = cls.degree().constant_coeff();
    if (!e.is_integer()) throw DomainError("non-integer Euler characteristic");
    return static_cast<long>(e.num().get_si());
}

namespace {

/* Reduced Euler characteristic (-1)^n mu at each point entry; complete
 * intersections take it from the user-supplied tuple data instead. */
std::vector<long> local_phi_values(const Scene& s) {
    std::vector<long> vals;
    if (s.mode == SceneMode::complete_intersection && !s.options.ci_local.empty()) {
        for (auto& c : s.options.ci_local) vals.push_back(c.chi_tilde);
        return vals;
    }
    if (!s.points.empty() && s.mode != SceneMode::hypersurface)
        throw DomainError("nearby/vanishing cycles need a hypersurface scene or "
                          "user-supplied complete-intersection data");
    int sign = s.dim() % 2 == 0 ? 1 : -1;
    for (auto& p : s.points) vals.push_back(sign * p.germ.mu_long());
    return vals;
}

struct PointEntry {
    std::string id;
    long count;
    long phi;   // reduced Euler characteristic of the local fiber
};

std::vector<PointEntry> point_entries(const Scene& s) {
    std::vector<PointEntry> entries;
    std::vector<long> phi = local_phi_values(s);
    bool from_ci = s.mode == SceneMode::complete_intersection && !s.options.ci_local.empty();
    if (from_ci) {
        for (size_t i = 0; i < s.options.ci_local.size(); ++i)
            entries.push_back({"x" + std::to_string(i), s.options.ci_local[i].count, phi[i]});
    } else {
        for (size_t i = 0; i < s.points.size(); ++i) {
            std::string id = s.points[i].germ.label().empty()
                                 ? "x" + std::to_string(i)
                                 : s.points[i].germ.label() + "#" + std::to_string(i);
            entries.push_back({id, s.points[i].count, phi[i]});
        }
    }
    return entries;
}

} // namespace

Stratification scene_stratification(const Scene& s) {
    s.validate();
    std::vector<PointEntry> entries = point_entries(s);
    long e_nearby = smooth_member_euler(s.ambient_dim, s.degrees);
    long e_special = e_nearby;
    long npoints = 0;
    for (auto& p : entries) {
        e_special -= p.phi * p.count;   // e(X) = e(X_t) - sum chi~(F_x)
        npoints += p.count;
    }
    Stratification st;
    st.add({"smooth", e_special - npoints, s.dim()});
    for (auto& p : entries) st.add({p.id, p.count, 0});
    return st;
}

ConstructibleFunction one_scene(const Scene& s) {
    ConstructibleFunction f(scene_stratification(s));
    for (auto& str : f.base().strata) f.set_weight(str.id, 1);
    return f;
}

ConstructibleFunction psi_scene(const Scene& s) {
    std::vector<PointEntry> entries = point_entries(s);
    ConstructibleFunction f(scene_stratification(s));
    f.set_weight("smooth", 1);
    for (auto& p : entries) f.set_weight(p.id, 1 + p.phi);
    return f;
}

ConstructibleFunction phi_scene(const Scene& s) {
    std::vector<PointEntry> entries = point_entries(s);
    ConstructibleFunction f(scene_stratification(s));
    for (auto& p : entries) f.set_weight(p.id, p.phi);
    return f;
}

} // namespace singclass
