#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "map_model.hpp"

namespace biratlab {

/// Direction class at a blown-up centre: a tangent triple modulo the span of
/// the base point.  Reduction rule: the pivot coordinate of the (canonical)
/// base is zeroed, then the remainder is scaled to canonical form.
inline Vec3 reduce_direction(const ProjPoint& base, const Vec3& raw) {
    int piv = base.pivot();
    Vec3 d = raw - base.v * raw[static_cast<std::size_t>(piv)];
    if (is_zero(d))
        throw Error("direction is proportional to the base point");
    return detail::canonicalize(d);
}

/// A point of the blown-up surface: a base point of P^2 plus, when the base
/// is a blow-up centre, the tangent direction class on its exceptional fibre.
struct InfNearPoint {
    ProjPoint base;
    std::optional<Vec3> dir; // reduced and canonical

    InfNearPoint() = default;
    explicit InfNearPoint(ProjPoint b) : base(std::move(b)) {}
    InfNearPoint(ProjPoint b, const Vec3& raw_dir) : base(std::move(b)) {
        dir = reduce_direction(base, raw_dir);
    }

    bool is_fibre_point() const { return dir.has_value(); }

    /// Fibre coordinates [u:v]: the two non-pivot entries of the direction,
    /// in coordinate order (matches the chart of the exceptional fibre).
    std::pair<GaussianRational, GaussianRational> fibre_coords() const {
        if (!dir) throw Error("not a fibre point");
        int piv = base.pivot();
        std::vector<GaussianRational> rest;
        for (int i = 0; i < 3; ++i)
            if (i != piv) rest.push_back((*dir)[static_cast<std::size_t>(i)]);
        return {rest[0], rest[1]};
    }

    friend bool operator==(const InfNearPoint& a, const InfNearPoint& b) {
        return a.base == b.base && a.dir == b.dir;
    }
    friend bool operator!=(const InfNearPoint& a, const InfNearPoint& b) { return !(a == b); }
    friend bool operator<(const InfNearPoint& a, const InfNearPoint& b) {
        if (a.base != b.base) return a.base < b.base;
        if (a.dir.has_value() != b.dir.has_value()) return b.dir.has_value();
        if (!a.dir) return false;
        for (int i = 0; i < 3; ++i) {
            const auto& x = (*a.dir)[static_cast<std::size_t>(i)];
            const auto& y = (*b.dir)[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    }

    std::string str() const {
        if (!dir) return base.str();
        auto [u, v] = fibre_coords();
        return "[" + u.str() + ":" + v.str() + "]_E(" + base.str() + ")";
    }
};

/// Ordered list of base points that have been blown up.
struct BlowupRegistry {
    std::vector<ProjPoint> centers;

    bool contains(const ProjPoint& p) const {
        for (const auto& c : centers)
            if (c == p) return true;
        return false;
    }
    void add(const ProjPoint& p) {
        if (!contains(p)) centers.push_back(p);
    }
};

namespace detail {

/// Image of the curve t -> base + t*lift under F, as a point of the blown-up
/// surface.  The direction class is attached whenever the image base is a
/// registry centre, taken from the first t-coefficient off the image span.
inline InfNearPoint jet_image(const QuadraticMap& map, const BlowupRegistry& reg,
                              const Vec3& base, const Vec3& lift) {
    LineRestriction jet = restrict_to_line(map.comp, base, lift);
    ProjPoint q(jet.value_at_zero());
    if (!reg.contains(q)) return InfNearPoint(q);
    for (int j = 1; j <= jet.max_order(); ++j) {
        Vec3 cj = jet.coeff(static_cast<std::size_t>(j));
        if (is_zero(cj) || proportional(cj, q.v)) continue;
        return InfNearPoint(q, cj);
    }
    throw JetOrderExceeded("all t-coefficients at " + ProjPoint(base).str() +
                           " are proportional to the image " + q.str() +
                           "; second-order data would be required");
}

} // namespace detail

/// One step of the blown-up map.  Ordinary points evaluate like eval_point;
/// points whose image is a centre pick up a fibre direction; fibre points
/// evaluate by first-order jets along their tangent line.
inline InfNearPoint extended_eval(const QuadraticMap& map, const BlowupRegistry& reg,
                                  const InfNearPoint& P) {
    if (P.dir) return detail::jet_image(map, reg, P.base.v, *P.dir);

    bool indet = map.in_indeterminacy(P.base);
    if (indet) {
        if (!reg.contains(P.base))
            throw UnresolvedIndeterminacy("unresolved indeterminacy point " + P.base.str());
        throw UnresolvedIndeterminacy("centre " + P.base.str() +
                                      " requires a fibre direction to evaluate");
    }

    ProjPoint q = ProjPoint(map.eval_raw(P.base));
    if (!reg.contains(q)) return InfNearPoint(q);

    // The image is a centre.  When P sits on a collapsing curve the incoming
    // direction class does not depend on the approach line; evaluate along two
    // independent transversals and require agreement.
    std::vector<InfNearPoint> results;
    for (int i = 0; i < 3 && results.size() < 2; ++i) {
        Vec3 v{GaussianRational(0), GaussianRational(0), GaussianRational(0)};
        v[static_cast<std::size_t>(i)] = GaussianRational(1);
        if (proportional(v, P.base.v)) continue;
        try {
            results.push_back(detail::jet_image(map, reg, P.base.v, v));
        } catch (const JetOrderExceeded&) {
            // approach line tangent to the collapsing curve; try another
        }
    }
    if (results.empty())
        throw JetOrderExceeded("no approach line at " + P.base.str() + " yields a fibre direction");
    if (results.size() == 2 && !(results[0] == results[1]))
        throw JetOrderExceeded("image direction at " + P.base.str() +
                               " depends on the approach line");
    return results[0];
}

struct OrbitRecord {
    enum class Outcome { HitIndeterminacy, Cycle, BudgetExhausted, Collapsed };

    InfNearPoint seed;
    std::vector<InfNearPoint> points; // points[0] == seed; complete unless noted
    bool points_complete = true;      // false once coordinates outgrew the exact window
    int steps = 0;                    // evaluations actually performed
    Outcome outcome = Outcome::BudgetExhausted;
    int hit_target = -1; // index j of O_j for HitIndeterminacy
    int hit_step = -1;
    int period = 0;      // for Cycle
    std::string diagnostics;

    int length() const { return static_cast<int>(points.size()); }
    bool hit() const { return outcome == Outcome::HitIndeterminacy; }
    /// True when some non-fibre point of the orbit equals p.
    bool passes_through(const ProjPoint& p) const {
        for (const auto& q : points)
            if (!q.dir && q.base == p) return true;
        return false;
    }
};

namespace detail {

// Exact orbit coordinates grow like the degree sequence, which doubles per
// step off the zero-entropy locus.  Past this per-coordinate bit budget the
// tracker switches to sound modular filtering (misses nothing: candidate
// hits re-run exactly).
constexpr std::uint64_t kExactHeightBits = 4096;

inline std::uint64_t rational_bits(const Rational& r) {
    using boost::multiprecision::msb;
    std::uint64_t nb = num(r) == 0 ? 0 : static_cast<std::uint64_t>(msb(boost::multiprecision::abs(num(r))));
    std::uint64_t db = den(r) == 1 ? 0 : static_cast<std::uint64_t>(msb(den(r)));
    return nb + db;
}

inline std::uint64_t point_bits(const ProjPoint& p) {
    std::uint64_t m = 0;
    for (const auto& c : p.v) m = std::max({m, rational_bits(c.re), rational_bits(c.im)});
    return m;
}

// --- arithmetic in F_{p^2} = (Z/p)[i], p = 3 (mod 4) -----------------------

struct Gp {
    std::uint64_t re = 0, im = 0;
    bool operator==(const Gp&) const = default;
};

struct FpCtx {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t reduce_int(const BigInt& n) const {
        BigInt r = n % BigInt(p);
        if (r < 0) r += BigInt(p);
        return static_cast<std::uint64_t>(r);
    }
    std::uint64_t powmod(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }
    std::uint64_t inv(std::uint64_t a) const { return powmod(a, p - 2); }

    Gp reduce(const GaussianRational& z) const {
        std::uint64_t re = mul(reduce_int(num(z.re)), inv(reduce_int(den(z.re))));
        std::uint64_t im = mul(reduce_int(num(z.im)), inv(reduce_int(den(z.im))));
        return {re, im};
    }
    Gp add(const Gp& a, const Gp& b) const { return {add(a.re, b.re), add(a.im, b.im)}; }
    Gp sub(const Gp& a, const Gp& b) const { return {sub(a.re, b.re), sub(a.im, b.im)}; }
    Gp mul(const Gp& a, const Gp& b) const {
        return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
    }
    bool is_zero(const Gp& a) const { return a.re == 0 && a.im == 0; }
};

using GpVec = std::array<Gp, 3>;

/// Residue stream of one orbit modulo one prime.
struct FpStream {
    FpCtx ctx;
    bool alive = true;
    GpVec v{};
    GpVec alpha{}, beta{}, gamma{};

    void seed_params(const MapParams& pr) {
        for (int i = 0; i < 3; ++i) {
            alpha[static_cast<std::size_t>(i)] = ctx.reduce(pr.alpha[static_cast<std::size_t>(i)]);
            beta[static_cast<std::size_t>(i)] = ctx.reduce(pr.beta[static_cast<std::size_t>(i)]);
            gamma[static_cast<std::size_t>(i)] = ctx.reduce(pr.gamma[static_cast<std::size_t>(i)]);
        }
    }
    void seed_point(const ProjPoint& q) {
        for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = ctx.reduce(q.v[static_cast<std::size_t>(i)]);
        if (ctx.is_zero(v[0]) && ctx.is_zero(v[1]) && ctx.is_zero(v[2])) alive = false;
    }
    Gp dot3(const GpVec& c, const GpVec& x) const {
        return ctx.add(ctx.add(ctx.mul(c[0], x[0]), ctx.mul(c[1], x[1])), ctx.mul(c[2], x[2]));
    }
    void step() {
        Gp A = dot3(alpha, v), B = dot3(beta, v), C = dot3(gamma, v);
        GpVec img = {ctx.mul(v[0], C), ctx.mul(A, C), ctx.mul(v[0], B)};
        v = img;
        if (ctx.is_zero(v[0]) && ctx.is_zero(v[1]) && ctx.is_zero(v[2])) alive = false;
    }
    /// All 2x2 minors of (v, w) vanish mod p.
    bool matches(const GpVec& w) const {
        Gp m01 = ctx.sub(ctx.mul(v[0], w[1]), ctx.mul(v[1], w[0]));
        Gp m02 = ctx.sub(ctx.mul(v[0], w[2]), ctx.mul(v[2], w[0]));
        Gp m12 = ctx.sub(ctx.mul(v[1], w[2]), ctx.mul(v[2], w[1]));
        return ctx.is_zero(m01) && ctx.is_zero(m02) && ctx.is_zero(m12);
    }
};

constexpr std::uint64_t kOrbitPrime1 = 4611686018427387847ULL; // 3 (mod 4)
constexpr std::uint64_t kOrbitPrime2 = 4611686018427387787ULL; // 3 (mod 4)

inline OrbitRecord track_orbit_impl(const QuadraticMap& map, const BlowupRegistry& reg,
                                    const InfNearPoint& seed, int budget,
                                    std::uint64_t height_cap_bits, bool fp_allowed);

/// Modular continuation of a wandering orbit: certifies "no hit, no centre
/// entry" step by step, escalating to an uncapped exact re-run on the rare
/// residue coincidence.
inline OrbitRecord fp_continue(const QuadraticMap& map, const BlowupRegistry& reg,
                               const InfNearPoint& seed, int budget, OrbitRecord rec,
                               const ProjPoint& from) {
    rec.points_complete = false;

    std::array<FpStream, 2> st;
    st[0].ctx = FpCtx{kOrbitPrime1};
    st[1].ctx = FpCtx{kOrbitPrime2};
    for (auto& s : st) {
        s.seed_params(map.params);
        s.seed_point(from);
    }

    // residual indeterminacy points and all centres, reduced per prime
    std::vector<std::array<GpVec, 2>> targets;
    std::vector<int> target_o_index;
    for (int j = 0; j < 3; ++j) {
        const ProjPoint& o = map.O[static_cast<std::size_t>(j)];
        if (reg.contains(o)) continue;
        std::array<GpVec, 2> t;
        for (int k = 0; k < 2; ++k) {
            FpStream tmp;
            tmp.ctx = st[static_cast<std::size_t>(k)].ctx;
            tmp.seed_point(o);
            t[static_cast<std::size_t>(k)] = tmp.v;
        }
        targets.push_back(t);
        target_o_index.push_back(j);
    }
    std::vector<std::array<GpVec, 2>> centre_res;
    for (const auto& c : reg.centers) {
        std::array<GpVec, 2> t;
        for (int k = 0; k < 2; ++k) {
            FpStream tmp;
            tmp.ctx = st[static_cast<std::size_t>(k)].ctx;
            tmp.seed_point(c);
            t[static_cast<std::size_t>(k)] = tmp.v;
        }
        centre_res.push_back(t);
    }

    std::map<std::array<std::uint64_t, 12>, int> fp_seen;
    auto key_of = [&]() {
        std::array<std::uint64_t, 12> k{};
        for (int s = 0; s < 2; ++s)
            for (int i = 0; i < 3; ++i) {
                k[static_cast<std::size_t>(s * 6 + 2 * i)] = st[static_cast<std::size_t>(s)].v[static_cast<std::size_t>(i)].re;
                k[static_cast<std::size_t>(s * 6 + 2 * i + 1)] = st[static_cast<std::size_t>(s)].v[static_cast<std::size_t>(i)].im;
            }
        return k;
    };

    // Confirm a residue coincidence by an exact re-run inside a much larger
    // (but still bounded) height window; no further modular fallback.
    auto escalate = [&]() {
        return track_orbit_impl(map, reg, seed, budget, std::uint64_t{1} << 20, false);
    };

    for (int step = rec.steps;; ++step) {
        bool any_alive = st[0].alive || st[1].alive;
        if (!any_alive) {
            rec.outcome = OrbitRecord::Outcome::BudgetExhausted;
            rec.diagnostics = "modular streams degenerated at step " + std::to_string(step);
            rec.steps = step;
            return rec;
        }
        // hit / centre-entry candidates must match on every live stream
        for (std::size_t t = 0; t < targets.size(); ++t) {
            bool cand = true;
            for (int s = 0; s < 2; ++s)
                if (st[static_cast<std::size_t>(s)].alive &&
                    !st[static_cast<std::size_t>(s)].matches(targets[t][static_cast<std::size_t>(s)]))
                    cand = false;
            if (cand) return escalate();
        }
        for (std::size_t c = 0; c < centre_res.size(); ++c) {
            bool cand = true;
            for (int s = 0; s < 2; ++s)
                if (st[static_cast<std::size_t>(s)].alive &&
                    !st[static_cast<std::size_t>(s)].matches(centre_res[c][static_cast<std::size_t>(s)]))
                    cand = false;
            if (cand) return escalate();
        }
        if (st[0].alive && st[1].alive) {
            auto [it, fresh] = fp_seen.emplace(key_of(), step);
            if (!fresh) {
                rec.outcome = OrbitRecord::Outcome::Cycle;
                rec.period = step - it->second;
                rec.steps = step;
                return rec;
            }
        }
        if (step == budget) {
            rec.outcome = OrbitRecord::Outcome::BudgetExhausted;
            rec.steps = step;
            return rec;
        }
        for (auto& s : st)
            if (s.alive) s.step();
    }
}

inline OrbitRecord track_orbit_impl(const QuadraticMap& map, const BlowupRegistry& reg,
                                    const InfNearPoint& seed, int budget,
                                    std::uint64_t height_cap_bits, bool fp_allowed) {
    OrbitRecord rec;
    rec.seed = seed;
    rec.points.push_back(seed);
    std::map<InfNearPoint, int> seen;
    seen.emplace(seed, 0);

    for (int step = 0;; ++step) {
        const InfNearPoint& cur = rec.points.back();
        rec.steps = step;
        if (!cur.dir && !reg.contains(cur.base) && map.in_indeterminacy(cur.base)) {
            rec.outcome = OrbitRecord::Outcome::HitIndeterminacy;
            rec.hit_target = map.which_O(cur.base);
            rec.hit_step = step;
            if (rec.hit_target < 0)
                throw Inconsistency("indeterminacy point is none of O_0,O_1,O_2");
            return rec;
        }
        if (step == budget) {
            rec.outcome = OrbitRecord::Outcome::BudgetExhausted;
            return rec;
        }
        if (!cur.dir && point_bits(cur.base) > height_cap_bits) {
            if (fp_allowed) return fp_continue(map, reg, seed, budget, rec, cur.base);
            rec.outcome = OrbitRecord::Outcome::BudgetExhausted;
            rec.points_complete = false;
            rec.diagnostics = "coordinate height window exceeded at step " + std::to_string(step);
            return rec;
        }
        InfNearPoint next;
        try {
            next = extended_eval(map, reg, cur);
        } catch (const JetOrderExceeded& e) {
            rec.outcome = OrbitRecord::Outcome::Collapsed;
            rec.diagnostics = e.what();
            return rec;
        }
        auto it = seen.find(next);
        if (it != seen.end()) {
            rec.outcome = OrbitRecord::Outcome::Cycle;
            rec.period = step + 1 - it->second;
            rec.steps = step + 1;
            return rec;
        }
        seen.emplace(next, step + 1);
        rec.points.push_back(next);
    }
}

} // namespace detail

/// Iterates extended_eval from the seed.  Terminates on the first residual
/// indeterminacy point, on revisiting a stored canonical point, on a jet
/// failure, or when the budget runs out.  The registry is never grown here.
/// Once exact coordinates outgrow the internal height window the tracking
/// continues on residue streams; any candidate event there triggers an exact
/// uncapped re-run, so reported hits are always exact.
inline OrbitRecord track_orbit(const QuadraticMap& map, const BlowupRegistry& reg,
                               const InfNearPoint& seed, int budget) {
    if (budget < 1) throw Error("orbit budget must be at least 1");
    return detail::track_orbit_impl(map, reg, seed, budget, detail::kExactHeightBits, true);
}

/// Smallest k <= k_max with a1^2(c0+b2)(1+a1+...+a1^{k-1}) + a2*b1 = 0,
/// evaluated exactly.  Only meaningful on the gamma1=0, alpha2!=0 branch.
inline std::optional<int> condition_k(const QuadraticMap& m, int k_max) {
    const Vec3 &al = m.params.alpha, &be = m.params.beta, &ga = m.params.gamma;
    if (!ga[1].is_zero() || al[2].is_zero())
        throw WrongBranch("condition-k requires gamma1 = 0 and alpha2 != 0");
    GaussianRational head = al[1] * al[1] * (ga[0] + be[2]);
    GaussianRational tail = al[2] * be[1];
    GaussianRational sum(0), apow(1);
    for (int k = 1; k <= k_max; ++k) {
        sum += apow;       // 1 + a1 + ... + a1^{k-1}
        apow *= al[1];
        if ((head * sum + tail).is_zero()) return k;
    }
    return std::nullopt;
}

/// Result of the blow-up regularization: SE orbits, the terminal map tau,
/// the residual orbits of the still-exceptional curves, and the bounded AS
/// certificate.
struct RegularizedModel {
    BlowupRegistry registry;
    std::map<int, OrbitRecord> se_orbits;       // seed index -> SE orbit
    std::map<int, int> tau;                     // seed index -> terminal O index
    std::map<int, OrbitRecord> residual_orbits; // non-SE seed orbits
    bool as_certificate = false;
    int budget = 0;

    bool seed_is_se(int i) const { return se_orbits.count(i) > 0; }
    int orbit_length(int i) const { return se_orbits.at(i).length(); }
};

/// Blow-up driver.  Tracks the A_i seeds, blows up complete SE orbits
/// (shortest uncontaminated hit first, so orbit collisions are re-tracked on
/// the grown surface), and repeats until no further seed reaches residual
/// indeterminacy within the budget.
inline RegularizedModel regularize(const QuadraticMap& map, int orbit_budget) {
    if (map.degenerate) throw DegenerateMap(map.degeneracy_witness);
    const auto& A = map.a_points();

    RegularizedModel M;
    M.budget = orbit_budget;
    std::set<int> unresolved = {0, 1, 2};
    std::map<int, OrbitRecord> records;

    for (int round = 0; round <= 4; ++round) {
        records.clear();
        for (int i : unresolved)
            records.emplace(i, track_orbit(map, M.registry,
                                           InfNearPoint(A[static_cast<std::size_t>(i)]),
                                           orbit_budget));
        std::vector<int> clean;
        bool any_hit = false;
        for (const auto& [i, rec] : records) {
            if (!rec.hit()) continue;
            any_hit = true;
            bool contaminated = false;
            for (int j : unresolved) {
                if (j == i) continue;
                if (rec.passes_through(A[static_cast<std::size_t>(j)])) { contaminated = true; break; }
            }
            if (!contaminated) clean.push_back(i);
        }
        if (clean.empty()) {
            if (any_hit)
                throw Inconsistency("every orbit reaching indeterminacy collides with an unresolved seed");
            break;
        }
        int best = clean.front();
        for (int i : clean) {
            if (records.at(i).length() < records.at(best).length()) best = i;
        }
        for (int i : clean) {
            if (i != best && records.at(i).hit_target == records.at(best).hit_target &&
                records.at(i).length() == records.at(best).length())
                throw Inconsistency("two SE orbits of equal length terminate at O_" +
                                    std::to_string(records.at(best).hit_target));
        }
        const OrbitRecord& rec = records.at(best);
        if (!rec.points_complete)
            throw Inconsistency("SE orbit outgrew the exact height window; cannot blow up");
        for (const auto& p : rec.points)
            if (!p.dir) M.registry.add(p.base);
        M.se_orbits.emplace(best, rec);
        M.tau.emplace(best, rec.hit_target);
        unresolved.erase(best);
        if (unresolved.empty()) break;
    }

    bool collapsed = false;
    for (int i : unresolved) {
        const OrbitRecord& rec = records.at(i);
        if (rec.outcome == OrbitRecord::Outcome::Collapsed) collapsed = true;
        M.residual_orbits.emplace(i, rec);
    }
    M.as_certificate = !collapsed;
    return M;
}

} // namespace biratlab
