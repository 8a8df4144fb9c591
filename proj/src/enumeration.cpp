#include "symx/enumeration.hpp"

#include "symx/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace symx {

bool row_orientable(const ParameterRow& row)
{
    switch (row.type) {
    case ExtensionType::PP:
    case ExtensionType::PM: return true;
    case ExtensionType::MM:
    case ExtensionType::MP: return row.clause == 1;
    }
    return true;
}

ParameterRow row_from_verdict(const SymmetryDatum& d, const ExtendabilityVerdict& v)
{
    if (!v.extendable || !v.witness) throw PreconditionError("verdict is not extendable");
    const Witness& w = *v.witness;
    ParameterRow row;
    row.type = v.type;
    row.clause = w.clause;
    row.n = d.n;
    row.h = d.h;
    row.b = d.b();
    row.s = d.s();
    row.g = euler_genus(d);
    switch (v.type) {
    case ExtensionType::PP:
        row.t = w.t;
        row.p = w.p;
        row.q = w.q;
        break;
    case ExtensionType::PM: break;
    case ExtensionType::MM:
        if (w.clause == 1) row.t = w.t;
        break;
    case ExtensionType::MP:
        if (w.clause == 2) row.l = w.l;
        if (w.clause == 3) {
            row.t = w.t;
            row.p = w.p;
            row.q = w.q;
            row.l = w.l;
        }
        break;
    }
    return row;
}

namespace {

Witness witness_of(const ParameterRow& row)
{
    Witness w;
    w.clause = row.clause;
    w.t = row.t;
    w.p = row.p;
    w.q = row.q;
    w.l = row.l;
    return w;
}

bool realizes(const SymmetryDatum& d, const ParameterRow& row)
{
    if (!is_valid(d)) return false;
    if (try_euler_genus(d) != row.g) return false;
    if (!type_applies(d, row.type)) return false;
    auto v = check(d, row.type);
    return v.extendable && row_from_verdict(d, v) == row;
}

// Calls visit on every tuple of the given length over values, in
// lexicographic order, until visit returns true.
bool for_each_tuple(Int length, const std::vector<Int>& values, const std::function<bool(const std::vector<Int>&)>& visit)
{
    std::vector<Int> idx(static_cast<size_t>(length), 0), tuple(static_cast<size_t>(length));
    if (length > 0 && values.empty()) return false;
    while (true) {
        for (size_t i = 0; i < idx.size(); ++i) tuple[i] = values[static_cast<size_t>(idx[i])];
        if (visit(tuple)) return true;
        Int i = length - 1;
        while (i >= 0 && ++idx[static_cast<size_t>(i)] == static_cast<Int>(values.size())) {
            idx[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return false;
    }
}

std::optional<Int> layout_genus(const ParameterRow& row, const std::vector<Int>& bd, const std::vector<Int>& cn)
{
    SymmetryDatum d;
    d.n = row.n;
    d.orientable = row_orientable(row);
    d.h = row.h;
    d.boundary = bd;
    d.cones = cn;
    return try_euler_genus(d);
}

} // namespace

SymmetryDatum datum_from_parameters(const ParameterRow& row)
{
    if (row.n < 1 || row.h < 0 || row.b < 0 || row.s < 0) throw UnrealizableError("row unrealizable");
    auto [bd, cn] = reference_layout(row.type, witness_of(row), row.n, row.b, row.s);
    if (static_cast<Int>(bd.size()) != row.b || static_cast<Int>(cn.size()) != row.s)
        throw UnrealizableError("row unrealizable");

    SymmetryDatum d;
    d.n = row.n;
    d.orientable = row_orientable(row);
    d.h = row.h;
    d.boundary = bd;
    d.cones = cn;

    const Int n = row.n;
    if (d.orientable) {
        if (d.h == 0) {
            if (realizes(d, row)) return d;
            throw UnrealizableError("row unrealizable");
        }
        for (Int x = 0; x < n; ++x) {
            d.handles.assign(static_cast<size_t>(2 * d.h), 0);
            d.handles[0] = x;
            if (realizes(d, row)) return d;
        }
        throw UnrealizableError("row unrealizable");
    }

    if (n % 2 != 0 || d.h < 1) throw UnrealizableError("row unrealizable");
    Int rest = 0;
    for (Int v : bd) rest += v;
    for (Int v : cn) rest += v;
    std::vector<Int> odd;
    for (Int v = 1; v < n; v += 2) odd.push_back(v);
    bool found = for_each_tuple(d.h, odd, [&](const std::vector<Int>& hs) {
        Int rel = rest;
        for (Int v : hs) rel += 2 * v;
        if (mod(rel, n) != 0) return false;
        d.handles = hs;
        return realizes(d, row);
    });
    if (!found) throw UnrealizableError("row unrealizable");
    return d;
}

Int order_ceiling(Int g)
{
    if (g < 2) throw PreconditionError("the order is unbounded at genus <= 1; give an explicit order range");
    return 8 * g + 4;
}

namespace {

std::vector<ParameterRow> candidate_rows(Int g, ExtensionType type, Int n)
{
    std::vector<ParameterRow> out;
    const Int hmax = g + 1, bmax = 2 * g + 2, smax = 4 * g + 4;
    auto base = [&](int clause, Int h, Int b, Int s) {
        ParameterRow r;
        r.type = type;
        r.clause = clause;
        r.n = n;
        r.h = h;
        r.b = b;
        r.s = s;
        r.g = g;
        return r;
    };
    auto divs = divisors_of(n);

    switch (type) {
    case ExtensionType::PP:
        for (Int h = 0; h <= hmax; ++h)
            for (Int p : divs)
                for (Int q : divs) {
                    if (gcd(p, q) != 1 || n % (p * q) != 0) continue;
                    for (Int s = 0; s <= smax; s += 2)
                        for (Int t = 0; 2 * t <= s; ++t) {
                            Int u = s / 2 - t;
                            if ((t > 0) != (p > 1) || (u > 0) != (q > 1)) continue;
                            if (s > 0 && t == 0) continue;
                            if (t > 0 && u > 0 && p <= q) continue;
                            auto r = base(0, h, 0, s);
                            r.t = t;
                            r.p = p;
                            r.q = q;
                            out.push_back(r);
                        }
                }
        break;
    case ExtensionType::PM:
        if (n % 2 != 0) break;
        for (Int h = 0; h <= hmax; ++h)
            for (Int s = 2; s <= smax; ++s) {
                if (n == 2 && s != 2) continue;
                out.push_back(base(0, h, 0, s));
            }
        break;
    case ExtensionType::MM:
        if (n % 4 == 2) {
            for (Int h = 0; h <= hmax; ++h)
                for (Int b = 1; b <= bmax; ++b)
                    for (Int s = 0; s <= smax; ++s) {
                        if (n == 2) {
                            if (s == 0) out.push_back(base(1, h, b, 0));
                            continue;
                        }
                        for (Int t = (s + 1) / 2; t <= (s + b) / 2; ++t) {
                            auto r = base(1, h, b, s);
                            r.t = t;
                            out.push_back(r);
                        }
                    }
            for (Int h = 1; h <= hmax; ++h)
                for (Int s = 0; s <= smax; ++s) {
                    if (n == 2 ? s != 0 : (h - s) % 2 != 0) continue;
                    out.push_back(base(2, h, 0, s));
                }
        } else if (n % 4 == 0) {
            for (Int h = 1; h <= hmax; ++h)
                for (Int s = 0; s <= smax; ++s) out.push_back(base(3, h, 0, s));
        }
        break;
    case ExtensionType::MP:
        if (n % 2 != 0) break;
        if (n % 4 == 2) {
            for (Int h = 0; h <= hmax; ++h)
                for (Int s = 0; s <= smax; ++s) {
                    if (n == 2 ? s != 0 : s % 2 != 1) continue;
                    out.push_back(base(1, h, 1, s));
                }
            for (Int h = 1; h <= hmax; ++h)
                for (Int s = 0; s <= smax; ++s) {
                    if (s == 0) {
                        auto r = base(2, h, 1, 0);
                        r.l = n / 2;
                        out.push_back(r);
                        continue;
                    }
                    if (s % 2 != 1) continue;
                    for (Int l : divisors_of(n / 2)) {
                        if (l == n / 2) continue;
                        auto r = base(2, h, 1, s);
                        r.l = l;
                        out.push_back(r);
                    }
                }
        }
        for (Int h = 1; h <= hmax; ++h)
            for (Int p : divs) {
                if (p % 2 == 0) continue;
                for (Int q : divs) {
                    if (gcd(p, q) != 1 || n % (p * q) != 0) continue;
                    Int l = n / (p * q);
                    if (l % 2 != 0 || (l / 2 - h) % 2 != 0 || (h == 1 && l != 2)) continue;
                    for (Int s = 0; s <= smax; ++s)
                        for (Int t = 0; t <= s; ++t) {
                            if (t == 0 ? p != 1 : (p == 1 || t % 2 == 0)) continue;
                            if (t == s ? q != 1 : (q == 1 || (s - t) % 2 == 0)) continue;
                            auto r = base(3, h, 0, s);
                            r.t = t;
                            r.p = p;
                            r.q = q;
                            r.l = l;
                            out.push_back(r);
                        }
                }
            }
        break;
    }
    return out;
}

auto row_key(const ParameterRow& r)
{
    return std::make_tuple(r.n, r.h, r.b, r.s, r.t, r.p, r.q, r.l, r.clause);
}

} // namespace

std::vector<ParameterRow> enumerate_extendable(Int g, ExtensionType type, Int n_min, Int n_max)
{
    if (g < 0) throw PreconditionError("genus must be nonnegative");
    std::vector<ParameterRow> out;
    std::set<ConjugacyInvariant> seen;
    for (Int n = std::max<Int>(1, n_min); n <= n_max; ++n) {
        for (auto& row : candidate_rows(g, type, n)) {
            auto [bd, cn] = reference_layout(type, witness_of(row), n, row.b, row.s);
            if (layout_genus(row, bd, cn) != g) continue;
            SymmetryDatum d;
            try {
                d = datum_from_parameters(row);
            } catch (const UnrealizableError&) {
                continue;
            }
            if (seen.insert(twist_key(d)).second) out.push_back(row);
        }
    }
    std::sort(out.begin(), out.end(), [](const ParameterRow& a, const ParameterRow& b) { return row_key(a) < row_key(b); });
    return out;
}

std::vector<ParameterRow> enumerate_extendable(Int g, ExtensionType type)
{
    return enumerate_extendable(g, type, 1, order_ceiling(g));
}

Int census_order_bound()
{
    if (const char* env = std::getenv("SYMX_CENSUS_BOUND")) {
        try {
            Int v = std::stoll(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 12;
}

std::vector<CensusBucket> oracle_census(Int n, Int g_max)
{
    if (n < 1 || g_max < 0) throw PreconditionError("census needs n >= 1 and g_max >= 0");
    if (n > census_order_bound() || g_max > census_genus_bound) throw BoundError("census too large");

    std::map<ConjugacyInvariant, CensusBucket> buckets;
    const Int budget = 2 * g_max - 2;
    Int largest_proper = 1;
    for (Int d : divisors_of(n))
        if (d < n) largest_proper = d;
    const Int min_cone = n - largest_proper;

    std::vector<Int> all, even, odd, cone_any, cone_even;
    for (Int v = 0; v < n; ++v) {
        all.push_back(v);
        (v % 2 == 0 ? even : odd).push_back(v);
        if (v != 0) {
            cone_any.push_back(v);
            if (v % 2 == 0) cone_even.push_back(v);
        }
    }

    for (bool orientable : {true, false}) {
        for (Int h = orientable ? 0 : 1;; ++h) {
            Int hbase = n * (orientable ? 2 * h - 2 : h - 2);
            if (hbase > budget) break;
            for (Int b = 0;; ++b) {
                Int base = hbase + n * b;
                if (base > budget) break;
                if (b > 0 && n % 4 != 2) break;
                bool reversing = !orientable || b > 0;
                if (reversing && n % 2 != 0) break;
                const auto& hvals = !orientable ? odd : (reversing ? even : all);
                const auto& cvals = reversing ? cone_even : cone_any;
                for (Int s = 0; n > 1 ? base + s * min_cone <= budget : s == 0; ++s) {
                    SymmetryDatum d;
                    d.n = n;
                    d.orientable = orientable;
                    d.h = h;
                    Int hlen = orientable ? 2 * h : h;
                    for_each_tuple(hlen, hvals, [&](const std::vector<Int>& hs) {
                        d.handles = hs;
                        for_each_tuple(b, even, [&](const std::vector<Int>& bs) {
                            d.boundary = bs;
                            for_each_tuple(s, cvals, [&](const std::vector<Int>& cs) {
                                d.cones = cs;
                                if (!is_valid(d)) return false;
                                Int g = euler_genus(d);
                                if (g > g_max) return false;
                                auto key = conjugacy_invariant(d);
                                auto [it, fresh] = buckets.try_emplace(key);
                                if (fresh) {
                                    it->second.key = key;
                                    it->second.representative = d;
                                    it->second.genus = g;
                                }
                                ++it->second.count;
                                return false;
                            });
                            return false;
                        });
                        return false;
                    });
                }
            }
        }
    }

    std::vector<CensusBucket> out;
    out.reserve(buckets.size());
    for (auto& [k, v] : buckets) out.push_back(std::move(v));
    return out;
}

bool verify_uniqueness(ExtensionType type, const ParameterRow& row, Int n_bound)
{
    if (row.type != type) throw PreconditionError("row type differs from requested type");
    if (row.n > n_bound) throw BoundError("census too large");
    std::vector<SymmetryDatum> members;
    for (const auto& bucket : oracle_census(row.n, row.g)) {
        const auto& d = bucket.representative;
        if (bucket.genus != row.g || !type_applies(d, type)) continue;
        auto v = check(d, type);
        if (v.extendable && row_from_verdict(d, v) == row) members.push_back(d);
    }
    if (members.empty()) return false;
    return std::all_of(members.begin(), members.end(),
                       [&](const SymmetryDatum& d) { return same_cyclic_group(members.front(), d); });
}

} // namespace symx
