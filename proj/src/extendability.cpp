#include "symx/extendability.hpp"

#include "symx/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

namespace symx {

std::string to_string(ExtensionType t)
{
    switch (t) {
    case ExtensionType::PP: return "PP";
    case ExtensionType::MM: return "MM";
    case ExtensionType::PM: return "PM";
    case ExtensionType::MP: return "MP";
    }
    return "?";
}

std::optional<ExtensionType> parse_extension_type(const std::string& s)
{
    std::string u;
    for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "PP") return ExtensionType::PP;
    if (u == "MM") return ExtensionType::MM;
    if (u == "PM") return ExtensionType::PM;
    if (u == "MP") return ExtensionType::MP;
    return std::nullopt;
}

namespace {

std::vector<Int> sorted(std::vector<Int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

void append(std::vector<Int>& out, Int value, Int count, Int n)
{
    for (Int i = 0; i < count; ++i) out.push_back(mod(value, n));
}

Int ceil_half(Int s) { return (s + 1) / 2; }
Int floor_half(Int s) { return s / 2; }

// Cones of the (+,-) normal form for generator a.
std::vector<Int> pm_pattern(Int a, Int n, Int s)
{
    std::vector<Int> out;
    out.push_back(mod(a, n));
    out.push_back(mod((s % 2 == 1 ? 1 : -1) * a, n));
    for (Int i = 1; i <= s - 2; ++i) out.push_back(mod((i % 2 == 0 ? 2 : -2) * a, n));
    return out;
}

// Boundary and cone values of the (-,-) clause (1) normal form.
std::pair<std::vector<Int>, std::vector<Int>> mm1_pattern(Int a, Int n, Int b, Int s, Int t)
{
    std::vector<Int> bd, cn;
    append(bd, 2 * a, t - ceil_half(s), n);
    append(bd, -2 * a, t - floor_half(s), n);
    append(bd, 0, s + b - 2 * t, n);
    append(cn, 2 * a, ceil_half(s), n);
    append(cn, -2 * a, floor_half(s), n);
    return {bd, cn};
}

std::vector<Int> mp1_cones(Int a, Int n, Int s)
{
    std::vector<Int> cn;
    append(cn, 2 * a, (s - 1) / 2, n);
    append(cn, -2 * a, (s + 1) / 2, n);
    return cn;
}

bool all_in(const std::vector<Int>& vs, std::initializer_list<Int> allowed)
{
    return std::all_of(vs.begin(), vs.end(), [&](Int v) {
        return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
    });
}

void require_preserving(const SymmetryDatum& d)
{
    check_structure(d);
    if (is_orientation_reversing(d)) throw TypeMismatchError("predicate/type mismatch: datum is orientation-reversing");
}

void require_reversing(const SymmetryDatum& d)
{
    check_structure(d);
    if (!is_orientation_reversing(d)) throw TypeMismatchError("predicate/type mismatch: datum is orientation-preserving");
}

ExtendabilityVerdict no(ExtensionType t) { return ExtendabilityVerdict{t, false, std::nullopt}; }

ExtendabilityVerdict yes(ExtensionType t, Witness w) { return ExtendabilityVerdict{t, true, std::move(w)}; }

// +-classes of the values, keyed by min(v, n - v).
std::map<Int, Int> pm_classes(const std::vector<Int>& vs, Int n)
{
    std::map<Int, Int> out;
    for (Int v : vs) ++out[std::min(v, mod(n - v, n))];
    return out;
}

Int expected_mm3_h1(Int a, Int n, Int s)
{
    Int a2 = mod(2 * a, n);
    return a2 <= n / 2 - 2 ? mod(-s * a, n) : mod(s * a, n);
}

struct Labeling {
    Int beta = 0, gamma = 0, t = 0, p = 1, q = 1;
};

// Assignments of the cone +-classes to the roles of beta (t copies, order p)
// and gamma (s - t copies, order q) permitted by clause (3), larger odd p first.
std::vector<Labeling> mp3_labelings(const SymmetryDatum& d)
{
    const Int n = d.n, s = d.s();
    auto classes = pm_classes(d.cones, n);
    std::vector<Labeling> cand;
    if (classes.size() > 2) return {};
    if (classes.empty()) {
        cand.push_back({0, 0, 0, 1, 1});
    } else if (classes.size() == 1) {
        auto [c, cnt] = *classes.begin();
        Int o = order_mod(Residue(c, n));
        cand.push_back({c, 0, cnt, o, 1});
        cand.push_back({0, c, 0, 1, o});
    } else {
        auto it = classes.begin();
        auto [c1, n1] = *it++;
        auto [c2, n2] = *it;
        Int o1 = order_mod(Residue(c1, n)), o2 = order_mod(Residue(c2, n));
        if (gcd(o1, o2) != 1) return {};
        cand.push_back({c1, c2, n1, o1, o2});
        cand.push_back({c2, c1, n2, o2, o1});
    }
    std::vector<Labeling> out;
    for (const auto& lb : cand) {
        if (lb.p % 2 == 0) continue;
        if (lb.t > 0 && lb.t % 2 == 0) continue;
        if (s - lb.t > 0 && (s - lb.t) % 2 == 0) continue;
        out.push_back(lb);
    }
    std::stable_sort(out.begin(), out.end(), [](const Labeling& a, const Labeling& b) { return a.p > b.p; });
    return out;
}

bool matches_some_twist(const SymmetryDatum& d, const ConjugacyInvariant& target)
{
    for (Int u : units_of(d.n))
        if (conjugacy_invariant(scale_values(d, u)) == target) return true;
    return false;
}

// Clause (3) conditions for a fixed labeling; fills l, k, m0 on success.
bool mp3_holds(const SymmetryDatum& d, const Labeling& lb, Witness& w)
{
    const Int n = d.n, h = d.h, s = d.s();
    if (n % (lb.p * lb.q) != 0) return false;
    Int l = n / (lb.p * lb.q);
    if (l % 2 != 0) return false;
    if ((l / 2 - h) % 2 != 0) return false;
    if (h == 1 && l != 2) return false;
    if (auto v = h1(d); v && mod(*v, l) != l / 2) return false;
    w = Witness{};
    w.clause = 3;
    w.beta = lb.beta;
    w.gamma = lb.gamma;
    w.t = lb.t;
    w.p = lb.p;
    w.q = lb.q;
    w.l = l;
    if (h == 2) {
        if (!matches_some_twist(d, canonical_f0_invariant(lb.p, lb.q, l, s, lb.t))) return false;
        w.m0 = compute_m0(lb.p, l);
        w.k = compute_k(lb.p, lb.q, l);
    }
    return true;
}

} // namespace

bool type_applies(const SymmetryDatum& d, ExtensionType type)
{
    bool rev = is_orientation_reversing(d);
    return (type == ExtensionType::MM || type == ExtensionType::MP) == rev;
}

ExtendabilityVerdict check_pp(const SymmetryDatum& d)
{
    require_preserving(d);
    const Int n = d.n;
    std::map<Int, Int> count;
    for (Int v : d.cones) ++count[v];
    for (auto [v, c] : count) {
        Int neg = mod(n - v, n);
        if (neg == v) {
            if (c % 2 != 0) return no(ExtensionType::PP);
        } else if (count.count(neg) == 0 || count.at(neg) != c) {
            return no(ExtensionType::PP);
        }
    }
    auto classes = pm_classes(d.cones, n);
    if (classes.size() > 2) return no(ExtensionType::PP);

    std::vector<std::pair<Int, Int>> fam; // (order, class)
    for (auto [c, cnt] : classes) fam.push_back({order_mod(Residue(c, n)), c});
    std::sort(fam.rbegin(), fam.rend());
    if (fam.size() == 2 && gcd(fam[0].first, fam[1].first) != 1) return no(ExtensionType::PP);

    Witness w;
    w.clause = 0;
    w.alpha = fam.size() > 0 ? fam[0].second : 0;
    w.beta = fam.size() > 1 ? fam[1].second : 0;
    w.p = fam.size() > 0 ? fam[0].first : 1;
    w.q = fam.size() > 1 ? fam[1].first : 1;
    w.t = fam.size() > 0 ? classes.at(fam[0].second) / 2 : 0;
    if (n > *w.p * *w.q && d.h < 1) return no(ExtensionType::PP);
    return yes(ExtensionType::PP, w);
}

ExtendabilityVerdict check_pm(const SymmetryDatum& d)
{
    require_preserving(d);
    const Int n = d.n, s = d.s();
    if (n % 2 != 0 || s < 2) return no(ExtensionType::PM);
    if (n == 2 && s != 2) return no(ExtensionType::PM);
    auto target = sorted(d.cones);
    for (Int a : units_of(n)) {
        if (sorted(pm_pattern(a, n, s)) == target) {
            Witness w;
            w.alpha = mod(a, n);
            return yes(ExtensionType::PM, w);
        }
    }
    return no(ExtensionType::PM);
}

ExtendabilityVerdict check_mm(const SymmetryDatum& d)
{
    require_reversing(d);
    const Int n = d.n, s = d.s(), b = d.b(), h = d.h;
    if (n % 2 != 0) return no(ExtensionType::MM);
    for (Int a : units_of(n)) {
        Int p2 = mod(2 * a, n), m2 = mod(-2 * a, n);
        if (!all_in(d.boundary, {p2, m2, 0}) || !all_in(d.cones, {p2, m2})) continue;
        Witness w;
        w.alpha = mod(a, n);
        if (d.orientable) {
            if ((n / 2) % 2 != 1) continue;
            w.clause = 1;
            if (n == 2) return yes(ExtensionType::MM, w);
            auto bd = sorted(d.boundary), cn = sorted(d.cones);
            for (Int t = ceil_half(s); t <= floor_half(s + b); ++t) {
                auto [pb, pc] = mm1_pattern(a, n, b, s, t);
                if (sorted(pb) == bd && sorted(pc) == cn) {
                    w.t = t;
                    return yes(ExtensionType::MM, w);
                }
            }
        } else if (b == 0) {
            if ((n / 2) % 2 == 1) {
                if (n > 2 && (h - s) % 2 != 0) continue;
                w.clause = 2;
                return yes(ExtensionType::MM, w);
            }
            if (n > 4) {
                auto v = h1(d);
                if (!v || *v != expected_mm3_h1(a, n, s)) continue;
            } else if (n == 4 && s == 0) {
                auto v = h1(d);
                if (!v || *v != 0) continue;
            }
            w.clause = 3;
            return yes(ExtensionType::MM, w);
        }
    }
    return no(ExtensionType::MM);
}

ExtendabilityVerdict check_mp(const SymmetryDatum& d)
{
    require_reversing(d);
    const Int n = d.n, s = d.s(), b = d.b();
    if (n % 2 != 0) return no(ExtensionType::MP);

    if (d.orientable) {
        if (b != 1 || (n / 2) % 2 != 1) return no(ExtensionType::MP);
        Witness w;
        w.clause = 1;
        if (n == 2) return yes(ExtensionType::MP, w);
        if (s % 2 != 1) return no(ExtensionType::MP);
        auto cn = sorted(d.cones);
        for (Int a : units_of(n)) {
            if (d.boundary[0] == mod(2 * a, n) && sorted(mp1_cones(a, n, s)) == cn) {
                w.alpha = mod(a, n);
                return yes(ExtensionType::MP, w);
            }
        }
        return no(ExtensionType::MP);
    }

    if (b == 1) {
        if ((n / 2) % 2 != 1) return no(ExtensionType::MP);
        if (s > 0 && s % 2 != 1) return no(ExtensionType::MP);
        Int eps = d.boundary[0];
        for (Int a : units_of(n)) {
            if (eps != mod(2 * a, n) && eps != mod(-2 * a, n)) continue;
            Witness w;
            w.clause = 2;
            w.alpha = mod(a, n);
            if (s == 0) {
                w.l = n / 2;
                return yes(ExtensionType::MP, w);
            }
            for (Int l : divisors_of(n / 2)) {
                if (l == n / 2) continue;
                if (all_in(d.cones, {mod(2 * l * a, n), mod(-2 * l * a, n)})) {
                    w.l = l;
                    return yes(ExtensionType::MP, w);
                }
            }
        }
        return no(ExtensionType::MP);
    }

    if (b == 0) {
        for (const auto& lb : mp3_labelings(d)) {
            Witness w;
            if (mp3_holds(d, lb, w)) return yes(ExtensionType::MP, w);
        }
    }
    return no(ExtensionType::MP);
}

ExtendabilityVerdict check(const SymmetryDatum& d, ExtensionType type)
{
    switch (type) {
    case ExtensionType::PP: return check_pp(d);
    case ExtensionType::MM: return check_mm(d);
    case ExtensionType::PM: return check_pm(d);
    case ExtensionType::MP: return check_mp(d);
    }
    throw PreconditionError("unknown extension type");
}

Int compute_m0(Int p, Int l)
{
    if (p < 1 || p % 2 == 0) throw PreconditionError("p must be odd");
    if (l < 2 || l % 2 != 0) throw PreconditionError("l must be even");
    for (Int m0 = 1;; ++m0)
        if (mod(m0, l) == mod(l / 2 + 1, l) && gcd(m0, p) == 1) return m0;
}

Int compute_k(Int p, Int q, Int l)
{
    if (p < 1 || p % 2 == 0) throw PreconditionError("p must be odd");
    if (q < 1 || gcd(p, q) != 1) throw PreconditionError("p and q must be coprime");
    if (l < 2 || l % 2 != 0) throw PreconditionError("l must be even");
    Int m0 = compute_m0(p, l);
    Int n = p * q * l;
    Int limit = 4 * n + 4;
    for (Int k = 1; k <= limit; ++k)
        if (mod(k - q * m0, p) == 0 && mod(k - p, 2 * q) == 0 && gcd(k, n) == 1) return k;
    throw Error("compute_k: no solution");
}

ConjugacyInvariant canonical_f0_invariant(Int p, Int q, Int l, Int s, Int t)
{
    if (p < 1 || q < 1 || p % 2 == 0 || gcd(p, q) != 1)
        throw PreconditionError("f0 requires p odd and gcd(p, q) = 1");
    if (l < 2 || l % 2 != 0) throw PreconditionError("f0 requires l even");
    if (t < 0 || t > s) throw PreconditionError("f0 requires 0 <= t <= s");
    if (t == 0 ? p != 1 : t % 2 == 0) throw PreconditionError("f0 parity rule on t violated");
    if (t == s ? q != 1 : (s - t) % 2 == 0) throw PreconditionError("f0 parity rule on s - t violated");

    const Int n = p * q * l;
    std::vector<Int> cn;
    append(cn, q * l, t, n);
    append(cn, p * l, s - t, n);

    ConjugacyInvariant inv;
    inv.n = n;
    inv.orientable = false;
    inv.h = 2;
    inv.b = 0;
    inv.isotropy = make_isotropy(n, SignMode::Entrywise, {}, cn);
    bool half_cone = std::any_of(cn.begin(), cn.end(), [&](Int v) { return v == n / 2; });
    if (n % 4 == 0 && !half_cone)
        inv.h1 = mod(n / 2 - std::max<Int>(t, 1) * q * l / 2 - std::max<Int>(s - t, 1) * p * l / 2, n);
    Int k = compute_k(p, q, l);
    inv.h2 = make_h2(l / 2, k, l / 2 - k);
    return inv;
}

std::vector<ExtensionType> classify_all(const SymmetryDatum& d)
{
    check_structure(d);
    bool rev = is_orientation_reversing(d);
    auto g = try_euler_genus(d);
    std::vector<ExtensionType> types = rev ? std::vector{ExtensionType::MM, ExtensionType::MP}
                                           : std::vector{ExtensionType::PP, ExtensionType::PM};
    if (g && *g == 0) return types;
    std::vector<ExtensionType> out;
    for (auto t : types)
        if (check(d, t).extendable) out.push_back(t);
    return out;
}

std::pair<std::vector<Int>, std::vector<Int>> reference_layout(ExtensionType type, const Witness& w,
                                                               Int n, Int b, Int s)
{
    std::vector<Int> bd, cn;
    switch (type) {
    case ExtensionType::PP: {
        Int p = w.p.value_or(1), q = w.q.value_or(1), t = w.t.value_or(0);
        append(cn, n / p, t, n);
        append(cn, -(n / p), t, n);
        append(cn, n / q, s / 2 - t, n);
        append(cn, -(n / q), s / 2 - t, n);
        break;
    }
    case ExtensionType::PM:
        cn = pm_pattern(1, n, s);
        break;
    case ExtensionType::MM:
        if (w.clause == 1) {
            if (n == 2) {
                append(bd, 0, b, n);
            } else {
                std::tie(bd, cn) = mm1_pattern(1, n, b, s, w.t.value_or(0));
            }
        } else {
            append(cn, 2, s, n);
        }
        break;
    case ExtensionType::MP:
        if (w.clause == 1) {
            bd.push_back(mod(2, n));
            if (n > 2) cn = mp1_cones(1, n, s);
        } else if (w.clause == 2) {
            bd.push_back(mod(2, n));
            append(cn, 2 * w.l.value_or(n / 2), s, n);
        } else {
            Int p = w.p.value_or(1), q = w.q.value_or(1), t = w.t.value_or(0);
            append(cn, n / p, t, n);
            append(cn, n / q, s - t, n);
        }
        break;
    }
    return {bd, cn};
}

namespace {

bool global_mode(ExtensionType type, const Witness& w)
{
    return type == ExtensionType::PP || type == ExtensionType::PM || w.clause == 1;
}

} // namespace

IsotropyInvariant reference_isotropy(ExtensionType type, const Witness& w, Int n, Int b, Int s)
{
    auto [bd, cn] = reference_layout(type, w, n, b, s);
    return make_isotropy(n, global_mode(type, w) ? SignMode::Global : SignMode::Entrywise, bd, cn);
}

std::pair<Int, SymmetryDatum> normalize(const SymmetryDatum& d, ExtensionType type)
{
    if (!type_applies(d, type)) throw TypeMismatchError("predicate/type mismatch");
    auto v = check(d, type);
    if (!v.extendable) throw PreconditionError("datum is not extendable in type " + to_string(type));
    const Witness& w = *v.witness;

    std::optional<ConjugacyInvariant> exact;
    if (type == ExtensionType::MP && w.clause == 3 && d.h == 2)
        exact = canonical_f0_invariant(*w.p, *w.q, *w.l, d.s(), *w.t);
    IsotropyInvariant ref = reference_isotropy(type, w, d.n, d.b(), d.s());

    std::optional<std::pair<ConjugacyInvariant, Int>> best;
    for (Int u : units_of(d.n)) {
        SymmetryDatum tw = scale_values(d, u);
        ConjugacyInvariant c = conjugacy_invariant(tw);
        if (exact ? c != *exact : c.isotropy != ref) continue;
        Int m = d.n == 1 ? 1 : inverse_mod(u, d.n);
        if (!best || c < best->first || (c == best->first && m < best->second)) best = {c, m};
    }
    if (!best) throw Error("normalize: no unit twist reaches the normal form");
    return {best->second, power_twist(d, best->second)};
}

bool recheck(const SymmetryDatum& d, const ExtendabilityVerdict& v)
{
    if (!v.extendable || !v.witness) return false;
    if (!type_applies(d, v.type)) return false;
    const Witness& w = *v.witness;
    const Int n = d.n, s = d.s(), b = d.b(), h = d.h;
    auto cn = sorted(d.cones);
    auto unit = [&](std::optional<Int> a) { return a && gcd(*a, n) == 1; };

    switch (v.type) {
    case ExtensionType::PP: {
        if (!w.p || !w.q || !w.t || !w.alpha || !w.beta) return false;
        Int p = *w.p, q = *w.q, t = *w.t;
        if (gcd(p, q) != 1 || 2 * t > s || s % 2 != 0) return false;
        if (t > 0 && order_mod(Residue(*w.alpha, n)) != p) return false;
        if (s / 2 - t > 0 && order_mod(Residue(*w.beta, n)) != q) return false;
        std::vector<Int> pat;
        append(pat, *w.alpha, t, n);
        append(pat, -*w.alpha, t, n);
        append(pat, *w.beta, s / 2 - t, n);
        append(pat, -*w.beta, s / 2 - t, n);
        if (make_isotropy(n, SignMode::Global, {}, pat) != isotropy(d)) return false;
        return !(n > p * q && h < 1);
    }
    case ExtensionType::PM:
        if (!unit(w.alpha) || n % 2 != 0 || s < 2 || (n == 2 && s != 2)) return false;
        return make_isotropy(n, SignMode::Global, {}, pm_pattern(*w.alpha, n, s)) == isotropy(d);
    case ExtensionType::MM: {
        if (!unit(w.alpha)) return false;
        Int a = *w.alpha, p2 = mod(2 * a, n), m2 = mod(-2 * a, n);
        if (!all_in(d.boundary, {p2, m2, 0}) || !all_in(d.cones, {p2, m2})) return false;
        if (w.clause == 1) {
            if (!d.orientable || b == 0 || (n / 2) % 2 != 1) return false;
            if (n == 2) return true;
            if (!w.t || *w.t < ceil_half(s) || *w.t > floor_half(s + b)) return false;
            auto [pb, pc] = mm1_pattern(a, n, b, s, *w.t);
            return make_isotropy(n, SignMode::Global, pb, pc) == isotropy(d);
        }
        if (d.orientable || b != 0) return false;
        if (w.clause == 2) return (n / 2) % 2 == 1 && (n == 2 || (h - s) % 2 == 0);
        if (w.clause != 3 || n % 4 != 0) return false;
        if (n > 4) return h1(d) == expected_mm3_h1(a, n, s);
        if (s == 0) return h1(d) == Int{0};
        return true;
    }
    case ExtensionType::MP: {
        if (w.clause == 1) {
            if (!d.orientable || b != 1 || (n / 2) % 2 != 1) return false;
            if (n == 2) return true;
            if (!unit(w.alpha) || s % 2 != 1) return false;
            return make_isotropy(n, SignMode::Global, {mod(2 * *w.alpha, n)}, mp1_cones(*w.alpha, n, s)) ==
                   isotropy(d);
        }
        if (d.orientable) return false;
        if (w.clause == 2) {
            if (b != 1 || (n / 2) % 2 != 1 || !unit(w.alpha) || !w.l) return false;
            Int a = *w.alpha, l = *w.l;
            if (isotropy(d).boundary != std::vector<Int>{std::min(mod(2 * a, n), mod(-2 * a, n))}) return false;
            if (s == 0) return l == n / 2;
            if (s % 2 != 1 || (n / 2) % l != 0 || l == n / 2) return false;
            std::vector<Int> pat;
            append(pat, 2 * l * a, s, n);
            return make_isotropy(n, SignMode::Entrywise, {}, pat).cones == isotropy(d).cones;
        }
        if (w.clause != 3 || b != 0 || !w.p || !w.q || !w.t || !w.l || !w.beta || !w.gamma) return false;
        Int p = *w.p, q = *w.q, t = *w.t, l = *w.l;
        if (p % 2 == 0 || gcd(p, q) != 1 || p * q * l != n || t < 0 || t > s) return false;
        if (t == 0 ? p != 1 : (t % 2 == 0 || order_mod(Residue(*w.beta, n)) != p)) return false;
        if (t == s ? q != 1 : ((s - t) % 2 == 0 || order_mod(Residue(*w.gamma, n)) != q)) return false;
        std::vector<Int> pat;
        append(pat, *w.beta, t, n);
        append(pat, *w.gamma, s - t, n);
        if (make_isotropy(n, SignMode::Entrywise, {}, pat) != isotropy(d)) return false;
        if (l % 2 != 0 || (l / 2 - h) % 2 != 0 || (h == 1 && l != 2)) return false;
        if (auto v1 = h1(d); v1 && mod(*v1, l) != l / 2) return false;
        if (h == 2) {
            if (w.m0 != compute_m0(p, l) || w.k != compute_k(p, q, l)) return false;
            return matches_some_twist(d, canonical_f0_invariant(p, q, l, s, t));
        }
        return true;
    }
    }
    return false;
}

} // namespace symx
