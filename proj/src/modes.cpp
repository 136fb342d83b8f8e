#include "voa/modes.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <vector>

namespace voa {

Rat binom(const Rat& top, long k) {
    if (k < 0) return Rat(0);
    Rat r(1);
    for (long t = 0; t < k; ++t) r *= (top - t) / Rat(t + 1);
    return r;
}

Rat binom(long top, long k) { return binom(Rat(top), k); }

namespace {

std::map<long, int> multiplicities(const std::vector<long>& parts) {
    std::map<long, int> m;
    for (long p : parts) ++m[p];
    return m;
}

// All partitions of d as multiplicity maps.
const std::vector<std::map<long, int>>& partitions_of(long d) {
    static std::vector<std::vector<std::map<long, int>>> cache;
    while ((long)cache.size() <= d) {
        long n = (long)cache.size();
        std::vector<std::map<long, int>> out;
        if (n == 0) {
            out.push_back({});
        } else {
            std::vector<long> stack;
            std::function<void(long, long)> rec = [&](long rem, long maxpart) {
                if (rem == 0) {
                    out.push_back(multiplicities(stack));
                    return;
                }
                for (long k = std::min(rem, maxpart); k >= 1; --k) {
                    stack.push_back(k);
                    rec(rem - k, k);
                    stack.pop_back();
                }
            };
            rec(n, n);
        }
        cache.push_back(std::move(out));
    }
    return cache[d];
}

// h(n) on one untwisted key: at most one resulting key.
// Returns the scaled coefficient; h(0) contributes q*s on the label.
bool heis_untwisted_key(long n, const BasisKey& key, BasisKey& out_key, Scalar& out_scale) {
    if (n == 0) {
        if (key.q == 0) return false;
        out_key = key;
        out_scale = Scalar::s().times(key.q);
        return true;
    }
    if (n < 0) {
        out_key = key;
        out_key.parts.push_back(-n);
        std::sort(out_key.parts.begin(), out_key.parts.end(), std::greater<long>());
        out_scale = Scalar(1);
        return true;
    }
    auto it = std::find(key.parts.begin(), key.parts.end(), n);
    if (it == key.parts.end()) return false;
    long mult = std::count(key.parts.begin(), key.parts.end(), n);
    out_key = key;
    out_key.parts.erase(std::find(out_key.parts.begin(), out_key.parts.end(), n));
    out_scale = Scalar(Rat(n * mult));
    return true;
}

long pairing_exponent(const Rat& q, const Rat& qv, const PMode& p) {
    if (q == 0 || qv == 0) return 0;
    if (p.symbolic)
        throw DomainError("lattice operator on a charged sector needs numeric p");
    Rat e = q * qv * p.value;
    if (e.get_den() != 1)
        throw DomainError("non-integral x-exponent " + e.get_str() + " in lattice operator");
    return e.get_num().get_si();
}

long partition_degree(const BasisKey& k) { return k.degree_numerator(); }

// Coefficient of h(m) in (1/(i-1)!) d^{i-1}/dx^{i-1} h(x).
Rat field_coeff(long i, const Rat& m) {
    Rat c(1);
    for (long t = 1; t <= i - 1; ++t) c *= -(m + t);
    for (long t = 2; t <= i - 1; ++t) c /= t;
    return c;
}

// Degree-d piece of the annihilation exponential exp(-q s sum h(k) x^{-k}/k)
// on a single key; all-or-nothing contractions keep this to a few keys.
void exp_annihilate(const ModuleSpec& spec, const Rat& q, long d, const BasisKey& key,
                    const Scalar& c, Vector& out) {
    if (q == 0) {
        if (d == 0) out.add(key, c);
        return;
    }
    for (auto& nu : partitions_of(d)) {
        Rat frac(1);
        long hcount = 0;
        bool feasible = true;
        auto mult = multiplicities(key.parts);
        for (auto& [k, a] : nu) {
            auto it = mult.find(k);
            if (it == mult.end() || it->second < a) {
                feasible = false;
                break;
            }
            hcount += a;
            for (int t = 0; t < a; ++t) frac /= Rat(k) * (t + 1);
        }
        if (!feasible) continue;
        BasisKey nk = key;
        for (auto& [k, a] : nu)
            for (int t = 0; t < a; ++t) {
                // contraction coefficient k * multiplicity before removal
                long m = std::count(nk.parts.begin(), nk.parts.end(), k);
                frac *= Rat(k * m);
                nk.parts.erase(std::find(nk.parts.begin(), nk.parts.end(), k));
            }
        for (long t = 0; t < hcount; ++t) frac *= -q;
        Scalar coeff = Scalar::s_power(static_cast<int>(hcount)).times(frac);
        out.add(nk, c * coeff);
    }
}

// Degree-d piece of the creation exponential exp(q s sum h(-k) x^{k}/k).
void exp_create(const ModuleSpec& spec, const Rat& q, long d, const BasisKey& key, const Scalar& c,
                Vector& out) {
    if (q == 0) {
        if (d == 0) out.add(key, c);
        return;
    }
    for (auto& nu : partitions_of(d)) {
        Rat frac(1);
        long hcount = 0;
        for (auto& [k, a] : nu) {
            hcount += a;
            for (int t = 0; t < a; ++t) frac /= Rat(k) * (t + 1);
        }
        for (long t = 0; t < hcount; ++t) frac *= q;
        Scalar coeff = Scalar::s_power(static_cast<int>(hcount)).times(frac);
        BasisKey nk = key;
        for (auto& [k, a] : nu)
            for (int t = 0; t < a; ++t) nk.parts.push_back(k);
        std::sort(nk.parts.begin(), nk.parts.end(), std::greater<long>());
        out.add(nk, c * coeff);
    }
}

// Y(e^{q alpha}, x) mode on a single key.
Vector exp_mode_key(const ModuleSpec& spec, const Rat& q, long n, const BasisKey& key) {
    Vector out(spec);
    long N = pairing_exponent(q, key.q, spec.p);
    if (q == 0) {
        if (n == -1) out.add(key, Scalar(1));
        return out;
    }
    long dmax = partition_degree(key);
    for (long dplus = 0; dplus <= dmax; ++dplus) {
        long dminus = -n - 1 - N + dplus;
        if (dminus < 0) continue;
        Vector mid(spec);
        exp_annihilate(spec, q, dplus, key, Scalar(1), mid);
        for (auto& [k2, c2] : mid.terms()) {
            BasisKey shifted = k2;
            shifted.q += q;
            exp_create(spec, q, dminus, shifted, c2, out);
        }
    }
    return out;
}

// Recursion context for one monomial word h(-i_1)...h(-i_k) e^{q alpha}.
struct WordCtx {
    const ModuleSpec& spec;
    std::vector<long> parts;
    Rat qa;
    std::vector<long> rest_deg;  // degree of parts strictly after pos
    std::map<std::tuple<size_t, long, BasisKey>, Vector> memo;
};

const Vector& word_mode_key(WordCtx& ctx, size_t pos, long n, const BasisKey& key) {
    auto mk = std::make_tuple(pos, n, key);
    auto found = ctx.memo.find(mk);
    if (found != ctx.memo.end()) return found->second;

    Vector out(ctx.spec);
    if (pos == ctx.parts.size()) {
        out = exp_mode_key(ctx.spec, ctx.qa, n, key);
    } else {
        long i = ctx.parts[pos];
        // annihilation side: h(m), m >= 0, acting first on the key
        long maxm = key.parts.empty() ? 0 : key.parts.front();
        for (long m = 0; m <= maxm; ++m) {
            Rat fc = field_coeff(i, Rat(m));
            if (fc == 0) continue;
            BasisKey nk;
            Scalar sc;
            if (!heis_untwisted_key(m, key, nk, sc)) continue;
            const Vector& sub = word_mode_key(ctx, pos + 1, n - m - i, nk);
            out += sub * sc.times(fc);
        }
        // creation side: h(m), m <= -1, applied last
        long N = pairing_exponent(ctx.qa, key.q, ctx.spec.p);
        long bound = partition_degree(key) + ctx.rest_deg[pos] - N - 1;
        for (long m = -1;; --m) {
            long sub_n = n - m - i;
            if (sub_n > bound) break;
            Rat fc = field_coeff(i, Rat(m));
            if (fc == 0) continue;
            const Vector& sub = word_mode_key(ctx, pos + 1, sub_n, key);
            if (sub.is_zero()) continue;
            for (auto& [k2, c2] : sub.terms()) {
                BasisKey nk;
                Scalar sc;
                if (heis_untwisted_key(m, k2, nk, sc)) out.add(nk, c2 * sc.times(fc));
            }
        }
    }
    auto [it, inserted] = ctx.memo.emplace(std::move(mk), std::move(out));
    return it->second;
}

}  // namespace

Vector heis_mode(const Rat& n, const Vector& v) {
    Vector out(v.spec());
    bool twisted_sector = v.spec().kind == ModuleSpec::Kind::Twisted;
    if (twisted_sector) {
        if (n.get_den() != 2)
            throw DomainError("twisted sector takes half odd modes, got " + n.get_str());
        long n2 = n.get_num().get_si();
        for (auto& [key, c] : v.terms()) {
            if (n2 < 0) {
                BasisKey nk = key;
                nk.parts.push_back(-n2);
                std::sort(nk.parts.begin(), nk.parts.end(), std::greater<long>());
                out.add(nk, c);
            } else {
                long mult = std::count(key.parts.begin(), key.parts.end(), n2);
                if (!mult) continue;
                BasisKey nk = key;
                nk.parts.erase(std::find(nk.parts.begin(), nk.parts.end(), n2));
                out.add(nk, c.times(Rat(n2 * mult, 2)));
            }
        }
        return out;
    }
    if (n.get_den() != 1)
        throw DomainError("untwisted sector takes integral modes, got " + n.get_str());
    long ni = n.get_num().get_si();
    for (auto& [key, c] : v.terms()) {
        BasisKey nk;
        Scalar sc;
        if (heis_untwisted_key(ni, key, nk, sc)) out.add(nk, c * sc);
    }
    return out;
}

Vector exp_mode(const Rat& q, long n, const Vector& v) {
    if (v.spec().kind == ModuleSpec::Kind::Twisted)
        throw DomainError("lattice operators act on untwisted modules only");
    if (v.spec().p.symbolic && q.get_den() != 1)
        throw DomainError("symbolic p admits only integral lattice operators");
    Vector out(v.spec());
    for (auto& [key, c] : v.terms()) out += exp_mode_key(v.spec(), q, n, key) * c;
    return out;
}

Vector vertex_mode(const Vector& a, long n, const Vector& v) {
    if (a.spec().kind == ModuleSpec::Kind::Twisted)
        throw DomainError("vertex operators are indexed by untwisted elements");
    if (v.spec().kind == ModuleSpec::Kind::Twisted)
        throw DomainError("twisted modules use twisted_mode");
    Vector out(v.spec());
    for (auto& [ka, ca] : a.terms()) {
        WordCtx ctx{v.spec(), ka.parts, ka.q, {}, {}};
        ctx.rest_deg.assign(ka.parts.size() + 1, 0);
        for (size_t t = ka.parts.size(); t-- > 0;)
            ctx.rest_deg[t] = ctx.rest_deg[t + 1] + ka.parts[t];
        // rest_deg[pos] should exclude parts[pos] itself
        for (size_t t = 0; t < ka.parts.size(); ++t) ctx.rest_deg[t] -= ka.parts[t];
        for (auto& [kv, cv] : v.terms()) {
            const Vector& r = word_mode_key(ctx, 0, n, kv);
            if (!r.is_zero()) out += r * (ca * cv);
        }
    }
    return out;
}

std::optional<long> top_mode_bound(const Vector& a, const Vector& v) {
    if (a.is_zero() || v.is_zero()) return std::nullopt;
    long best = 0;
    bool first = true;
    for (auto& [ka, ca] : a.terms())
        for (auto& [kv, cv] : v.terms()) {
            long N = pairing_exponent(ka.q, kv.q, v.spec().p);
            long b = partition_degree(kv) + partition_degree(ka) - N - 1;
            best = first ? b : std::max(best, b);
            first = false;
        }
    return best;
}

Vector commutator_residual(const Vector& a, const Vector& b, long i, long j, const Vector& v) {
    Vector lhs = vertex_mode(a, i, vertex_mode(b, j, v)) - vertex_mode(b, j, vertex_mode(a, i, v));
    auto kmax = top_mode_bound(a, b);
    if (kmax)
        for (long k = 0; k <= *kmax; ++k) {
            Rat c = binom(i, k);
            if (c == 0) continue;
            Vector akb = vertex_mode(a, k, b);
            if (akb.is_zero()) continue;
            lhs = lhs - vertex_mode(akb, i + j - k, v) * Scalar(c);
        }
    return lhs;
}

std::optional<long> epsilon(const Vector& a, const Vector& v) {
    auto start = top_mode_bound(a, v);
    if (!start) return std::nullopt;
    for (long n = *start; n >= *start - 400; --n)
        if (!vertex_mode(a, n, v).is_zero()) return n;
    throw DomainError("epsilon scan exceeded safety window");
}

}  // namespace voa
