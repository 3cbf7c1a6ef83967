#include "prank/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "prank/linalg.hpp"

namespace prank {

namespace {

struct BigField {
    FieldCtxPtr ctx;      // F_{p^(k*ext)}
    Fq root;              // image of the base-field generator g
};

// Embed F_{p^k} into F_{p^(k*ext)} by sending g to a root of the base
// modulus. Non-Conway moduli have no canonical choice; the first root in
// element enumeration order keeps this deterministic.
BigField extend_field(const FieldCtx* base, int ext) {
    BigField bf;
    if (ext == 1) {
        // reuse the base context via a non-owning alias
        bf.ctx = FieldCtxPtr(FieldCtxPtr{}, base);
        bf.root = base->k() == 1 ? fq_zero(base) : element_by_index(base, base->p());
        return bf;
    }
    const unsigned big_k = base->k() * static_cast<unsigned>(ext);
    bf.ctx = field_make(base->p(), big_k);
    const FieldCtx* big = bf.ctx.get();
    if (base->k() == 1) {
        bf.root = fq_zero(big);
        return bf;
    }
    const std::uint64_t q = big->order_u64();
    for (std::uint64_t i = 0; i < q; ++i) {
        Fq cand = element_by_index(big, i);
        Fq val = fq_zero(big);
        Fq power = fq_one(big);
        for (std::size_t j = 0; j < base->modulus().size(); ++j) {
            val += power * Fq(big, base->modulus()[j]);
            power *= cand;
        }
        if (val.is_zero()) {
            bf.root = cand;
            return bf;
        }
    }
    throw internal_error("base modulus has no root in the extension field");
}

Fq embed(const Fq& x, const BigField& bf) {
    const FieldCtx* big = bf.ctx.get();
    Fq val = fq_zero(big);
    Fq power = fq_one(big);
    for (std::uint64_t c : x.coeffs()) {
        val += power * Fq(big, c);
        power *= bf.root;
    }
    return val;
}

MultiPoly embed_poly(const MultiPoly& f, const BigField& bf) {
    MultiPoly r(bf.ctx.get(), f.nvars());
    for (const auto& [e, c] : f.terms()) r.add_term(e, embed(c, bf));
    return r;
}

void check_budget(const FieldCtx* base, int ext) {
    double bits = ext * static_cast<double>(base->k()) * std::log2(static_cast<double>(base->p()));
    if (ext < 1 || bits > 24.000001)
        throw spec_error("enumeration budget exceeded (ext*k*log2(p) must be <= 24)");
}

bool vanishes_all(const std::vector<MultiPoly>& eqs, const std::vector<Fq>& pt) {
    for (const auto& f : eqs)
        if (!f.eval(pt).is_zero()) return false;
    return true;
}

// Discrete-log arithmetic for the enumeration inner loop: elements are
// addressed by their enumeration index; nonzero elements additionally by
// their log base a fixed generator, with a Zech table for addition.
// Avoids the per-point allocations of generic Fq arithmetic.
struct LogTables {
    static constexpr std::uint32_t kZero = 0xffffffffu;

    std::uint64_t Q = 0;
    std::vector<std::uint32_t> log_of_idx;  // index -> log, kZero for 0
    std::vector<std::uint32_t> zech;        // log(1 + g^i), kZero when 1 + g^i = 0

    std::uint32_t add(std::uint32_t la, std::uint32_t lb) const {
        if (la == kZero) return lb;
        if (lb == kZero) return la;
        std::uint32_t z = zech[(lb + Q - 1 - la) % (Q - 1)];
        if (z == kZero) return kZero;
        return static_cast<std::uint32_t>((la + z) % (Q - 1));
    }
};

LogTables build_log_tables(const FieldCtx* big) {
    LogTables t;
    t.Q = big->order_u64();
    const std::uint64_t n = t.Q - 1;

    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);

    Fq gen = fq_one(big);
    for (std::uint64_t i = 1; i < t.Q; ++i) {
        Fq cand = element_by_index(big, i);
        bool primitive = true;
        for (std::uint64_t l : prime_factors)
            if (cand.pow(n / l) == fq_one(big)) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = cand;
            break;
        }
    }

    t.log_of_idx.assign(t.Q, LogTables::kZero);
    std::vector<std::uint32_t> expv(n);
    Fq acc = fq_one(big);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t idx = acc.index();
        expv[i] = static_cast<std::uint32_t>(idx);
        t.log_of_idx[idx] = static_cast<std::uint32_t>(i);
        acc *= gen;
    }

    // index of x + 1: the constant digit of the index moves by one mod p
    const std::uint64_t p = big->p();
    t.zech.assign(n, LogTables::kZero);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t idx = expv[i];
        std::uint64_t bumped = idx - idx % p + (idx % p + 1) % p;
        if (bumped != 0) t.zech[i] = t.log_of_idx[bumped];
    }
    return t;
}

// one equation flattened for the log-domain evaluator
struct CompiledEq {
    struct Term {
        std::uint32_t coeff_log;
        std::array<std::int32_t, 8> exps;
    };
    std::vector<Term> terms;
    int nvars = 0;

    bool vanishes_at(const std::uint32_t* coord_logs, const LogTables& t) const {
        std::uint32_t acc = LogTables::kZero;
        for (const Term& term : terms) {
            std::uint64_t l = term.coeff_log;
            bool dead = false;
            for (int v = 0; v < nvars; ++v) {
                std::int32_t e = term.exps[static_cast<std::size_t>(v)];
                if (e == 0) continue;
                std::uint32_t cl = coord_logs[v];
                if (cl == LogTables::kZero) {
                    dead = true;
                    break;
                }
                l += static_cast<std::uint64_t>(e) * cl % (t.Q - 1);
            }
            if (!dead) acc = t.add(acc, static_cast<std::uint32_t>(l % (t.Q - 1)));
        }
        return acc == LogTables::kZero;
    }
};

CompiledEq compile_eq(const MultiPoly& f, const LogTables& t) {
    CompiledEq ce;
    ce.nvars = f.nvars();
    for (const auto& [e, c] : f.terms()) {
        CompiledEq::Term term;
        term.coeff_log = t.log_of_idx[c.index()];
        term.exps.fill(0);
        for (int v = 0; v < f.nvars(); ++v) term.exps[static_cast<std::size_t>(v)] = e[v];
        ce.terms.push_back(term);
    }
    return ce;
}

// index-coordinate twin of for_each_ambient_point
template <typename Fn>
void for_each_ambient_index_point(const Ambient& amb, std::uint64_t q, Fn&& fn) {
    if (amb.kind == Ambient::Kind::Projective) {
        const int nv = amb.nvars();
        std::vector<std::uint64_t> pt(static_cast<std::size_t>(nv), 0);
        for (int i = nv - 1; i >= 0; --i) {
            std::fill(pt.begin(), pt.end(), 0);
            pt[static_cast<std::size_t>(i)] = 1;  // index 1 is the unit element
            std::uint64_t cells = 1;
            for (int j = 0; j < i; ++j) {
                if (cells > (1ull << 50) / q) throw spec_error("enumeration budget exceeded");
                cells *= q;
            }
            for (std::uint64_t idx = 0; idx < cells; ++idx) {
                std::uint64_t v = idx;
                for (int j = 0; j < i; ++j) {
                    pt[static_cast<std::size_t>(j)] = v % q;
                    v /= q;
                }
                fn(pt);
            }
        }
    } else {
        std::vector<std::uint64_t> pt(4, 0);
        auto reps = [&](auto&& body) {
            for (std::uint64_t t = 0; t <= q; ++t) {
                std::uint64_t first = t < q ? 1 : 0;
                std::uint64_t second = t < q ? t : 1;
                body(first, second);
            }
        };
        reps([&](std::uint64_t x1, std::uint64_t x3) {
            reps([&](std::uint64_t x2, std::uint64_t x4) {
                pt[0] = x1;
                pt[1] = x2;
                pt[2] = x3;
                pt[3] = x4;
                fn(pt);
            });
        });
    }
}

// Visits one representative of every rational point of the ambient and
// calls fn with its coordinates.
template <typename Fn>
void for_each_ambient_point(const Ambient& amb, const FieldCtx* big, Fn&& fn) {
    const std::uint64_t q = big->order_u64();
    if (amb.kind == Ambient::Kind::Projective) {
        const int nv = amb.nvars();
        // charts: x_i = 1, x_j = 0 for j > i, lower coordinates free
        for (int i = nv - 1; i >= 0; --i) {
            std::vector<Fq> pt(static_cast<std::size_t>(nv), fq_zero(big));
            pt[static_cast<std::size_t>(i)] = fq_one(big);
            std::uint64_t cells = 1;
            for (int j = 0; j < i; ++j) {
                if (cells > (1ull << 50) / q) throw spec_error("enumeration budget exceeded");
                cells *= q;
            }
            for (std::uint64_t idx = 0; idx < cells; ++idx) {
                std::uint64_t v = idx;
                for (int j = 0; j < i; ++j) {
                    pt[static_cast<std::size_t>(j)] = element_by_index(big, v % q);
                    v /= q;
                }
                fn(pt);
            }
        }
    } else {
        // (x1:x3) and (x2:x4) each run over P^1 representatives
        std::vector<Fq> pt(4, fq_zero(big));
        auto reps = [&](auto&& body) {
            for (std::uint64_t t = 0; t <= q; ++t) {
                Fq first = t < q ? fq_one(big) : fq_zero(big);
                Fq second = t < q ? element_by_index(big, t) : fq_one(big);
                body(first, second);
            }
        };
        reps([&](const Fq& x1, const Fq& x3) {
            reps([&](const Fq& x2, const Fq& x4) {
                pt[0] = x1;
                pt[1] = x2;
                pt[2] = x3;
                pt[3] = x4;
                fn(pt);
            });
        });
    }
}

}  // namespace

long long count_points(const CurveGeometry& curve, int ext) {
    check_budget(curve.ctx, ext);
    BigField bf = extend_field(curve.ctx, ext);
    LogTables tables = build_log_tables(bf.ctx.get());
    std::vector<CompiledEq> eqs;
    for (const auto& f : curve.equations) eqs.push_back(compile_eq(embed_poly(f, bf), tables));
    const int nv = curve.ambient.nvars();
    std::array<std::uint32_t, 8> logs{};
    long long count = 0;
    for_each_ambient_index_point(
        curve.ambient, tables.Q, [&](const std::vector<std::uint64_t>& pt) {
            for (int v = 0; v < nv; ++v)
                logs[static_cast<std::size_t>(v)] = tables.log_of_idx[pt[static_cast<std::size_t>(v)]];
            for (const CompiledEq& eq : eqs)
                if (!eq.vanishes_at(logs.data(), tables)) return;
            ++count;
        });
    return count;
}

std::vector<long long> zeta_numerator(const std::vector<long long>& counts,
                                      std::uint64_t q, long g) {
    if (static_cast<long>(counts.size()) < g)
        throw spec_error("need N_1..N_g to reconstruct the zeta numerator");
    if (g == 0) return {1};
    // power sums of the Frobenius eigenvalues
    std::vector<long long> S(static_cast<std::size_t>(g) + 1, 0);
    long long qi = 1;
    for (long i = 1; i <= g; ++i) {
        qi *= static_cast<long long>(q);
        long long Ni = counts[static_cast<std::size_t>(i) - 1];
        S[static_cast<std::size_t>(i)] = qi + 1 - Ni;
        long double bound = 2.0L * g * std::pow(static_cast<long double>(q), i / 2.0L);
        if (std::llabs(S[static_cast<std::size_t>(i)]) > static_cast<long long>(bound + 0.5L))
            throw spec_error("Weil bound violated; curve is singular or the count is wrong");
    }
    // Newton's identities: i*e_i = sum_{j=1}^{i} (-1)^(j-1) e_(i-j) S_j
    std::vector<long long> e(static_cast<std::size_t>(g) + 1, 0);
    e[0] = 1;
    for (long i = 1; i <= g; ++i) {
        long long acc = 0;
        for (long j = 1; j <= i; ++j) {
            long long term = e[static_cast<std::size_t>(i - j)] * S[static_cast<std::size_t>(j)];
            acc += (j % 2 == 1) ? term : -term;
        }
        if (acc % i != 0)
            throw spec_error("inconsistent point counts (non-integer zeta coefficient)");
        e[static_cast<std::size_t>(i)] = acc / i;
    }
    std::vector<long long> P(static_cast<std::size_t>(2 * g) + 1, 0);
    for (long i = 0; i <= g; ++i)
        P[static_cast<std::size_t>(i)] = (i % 2 == 0) ? e[static_cast<std::size_t>(i)]
                                                      : -e[static_cast<std::size_t>(i)];
    long long qpow = 1;
    for (long i = g - 1; i >= 0; --i) {
        qpow *= static_cast<long long>(q);
        P[static_cast<std::size_t>(2 * g - i)] = qpow * P[static_cast<std::size_t>(i)];
    }
    return P;
}

int p_rank_from_zeta(const std::vector<long long>& numerator, std::uint64_t p) {
    int deg = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i)
        if (numerator[i] % static_cast<long long>(p) != 0) deg = static_cast<int>(i);
    return deg;
}

ZetaData zeta_data(const CurveGeometry& curve, long g) {
    ZetaData z;
    z.q = curve.ctx->order_u64();
    z.g = g;
    for (long i = 1; i <= g; ++i) z.counts.push_back(count_points(curve, static_cast<int>(i)));
    z.numerator = zeta_numerator(z.counts, z.q, g);
    return z;
}

std::vector<std::string> probe_singular_points(const CurveGeometry& curve, int max_ext) {
    std::vector<std::string> hits;
    const int nv = curve.ambient.nvars();
    const auto codim = static_cast<int>(curve.equations.size());
    for (int ext = 1; ext <= max_ext; ++ext) {
        double bits = ext * static_cast<double>(curve.ctx->k()) *
                      std::log2(static_cast<double>(curve.ctx->p()));
        if (bits > 24.000001) break;  // probe stays within the desk budget
        BigField bf = extend_field(curve.ctx, ext);
        std::vector<MultiPoly> eqs;
        std::vector<std::vector<MultiPoly>> jac;  // per equation, per variable
        for (const auto& f : curve.equations) {
            eqs.push_back(embed_poly(f, bf));
            std::vector<MultiPoly> row;
            for (int v = 0; v < nv; ++v) row.push_back(eqs.back().derivative(v));
            jac.push_back(std::move(row));
        }
        for_each_ambient_point(curve.ambient, bf.ctx.get(), [&](const std::vector<Fq>& pt) {
            if (!vanishes_all(eqs, pt)) return;
            Mat j(bf.ctx.get(), codim, nv);
            for (int r = 0; r < codim; ++r)
                for (int v = 0; v < nv; ++v)
                    j.at(r, v) = jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)].eval(pt);
            if (rank(std::move(j)) < codim) {
                std::ostringstream os;
                os << "singular point over F_q^" << ext << " at (";
                for (int v = 0; v < nv; ++v) os << (v ? ":" : "") << pt[static_cast<std::size_t>(v)].str();
                os << ")";
                hits.push_back(os.str());
            }
        });
        if (!hits.empty()) break;
    }
    return hits;
}

}  // namespace prank
