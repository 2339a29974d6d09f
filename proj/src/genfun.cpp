#include "hz/genfun.hpp"

#include "hz/sheaf.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace hz {

std::vector<Int> eta_power_coefficients(long a, long b, long e, long max_deg) {
    if (a <= 0 || b <= 0 || e < 0) throw DomainError("eta_power_coefficients: bad arguments");
    std::vector<Int> c(static_cast<std::size_t>(std::max(max_deg, -1L) + 1), Int(0));
    if (c.empty()) return c;
    c[0] = 1;
    auto divide_by = [&](long s) {  // multiply by 1/(1 - x^s)
        for (std::size_t d = static_cast<std::size_t>(s); d < c.size(); ++d) c[d] += c[d - s];
    };
    for (long step : {a, b})
        for (long s = step; s <= max_deg; s += step)
            for (long k = 0; k < e; ++k) divide_by(s);
    return c;
}

SeriesWindow rank1_series(const HirzebruchParams& P, PicClass cls, long min2exp) {
    long top2 = (1 + cls.n) * (P.C + 2 * cls.m - cls.n * P.r);  // doubled chi_E of the hull
    SeriesWindow w{min2exp, HalfExpLaurent(min2exp)};
    if (top2 < min2exp) return w;
    auto c = eta_power_coefficients(P.a, P.b, 2, (top2 - min2exp) / 2);
    for (std::size_t d = 0; d < c.size(); ++d) w.series.add_term(top2 - 2 * static_cast<long>(d), Rat(c[d]));
    return w;
}

SeriesWindow vb_to_tf(const SeriesWindow& s, long R, const HirzebruchParams& P) {
    if (R <= 0) throw DomainError("vb_to_tf: rank must be positive");
    SeriesWindow out{s.min2exp, HalfExpLaurent(s.min2exp)};
    if (s.series.empty()) return out;
    long top = s.series.max2exp();
    auto F = eta_power_coefficients(P.a, P.b, 2 * R, (top - s.min2exp) / 2);
    for (const auto& [e, c] : s.series.terms())
        for (std::size_t d = 0; d < F.size(); ++d) {
            long e2 = e - 2 * static_cast<long>(d);
            if (e2 < s.min2exp) break;
            out.series.add_term(e2, c * Rat(F[d]));
        }
    return out;
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::csets: return "csets";
        case Engine::r0: return "r0";
        case Engine::closed: return "closed";
        case Engine::lambda: return "lambda";
    }
    return "?";
}

Engine parse_engine(const std::string& s) {
    if (s == "csets") return Engine::csets;
    if (s == "r0") return Engine::r0;
    if (s == "closed" || s == "closed_p12") return Engine::closed;
    if (s == "lambda") return Engine::lambda;
    throw DomainError("unknown engine: " + s);
}

unsigned default_threads() {
    if (const char* env = std::getenv("ORBIFOLD_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

namespace {

inline bool dv(long d, long x) { return x % d == 0; }
inline bool even(long x) { return (x & 1) == 0; }

// Run body(i, counts) for i in [lo, hi] split round-robin over threads, then merge.
Counts parallel_over(long lo, long hi, unsigned threads, const std::function<void(long, Counts&)>& body) {
    threads = std::max(1u, threads);
    std::vector<Counts> part(threads);
    auto work = [&](unsigned t) {
        for (long i = lo + static_cast<long>(t); i <= hi; i += static_cast<long>(threads)) body(i, part[t]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    Counts out;
    for (const auto& p : part)
        for (const auto& [e, c] : p) out[e] += c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// integer floor/ceil of x/d for d > 0
inline long fdiv(long x, long d) { return x >= 0 ? x / d : -((-x + d - 1) / d); }
inline long cdiv(long x, long d) { return -fdiv(-x, d); }

void add4(Counts& c, long e4, long w, long min2exp) {
    if (!even(e4)) throw std::logic_error("odd quadrupled exponent");
    long e2 = e4 / 2;
    if (e2 >= min2exp) c[e2] += w;
}

}  // namespace

Counts enumerate_csets(const HirzebruchParams& P, PicClass cls, long min2exp, long M, unsigned threads) {
    if (P.r < 0) throw DomainError("rank-2 series need r >= 0");
    const long a = P.a, b = P.b, r = P.r, pq = P.p * P.q, m = cls.m, n = cls.n, C = P.C;
    const long f4 = 2 * (C - r) * n + 4 * C + 4 * m + 2 * m * n - n * n * r;
    return parallel_over(-M, M, threads, [&](long i, Counts& out) {
        if (!even(m + i)) return;
        for (long j = -M; j <= M; ++j) {
            if (!even(n + j)) continue;
            const long eA = f4 - 2 * j * i - r * j * j;
            for (long k = -M; k <= M; ++k) {
                // C6, C7
                if (even(j + k) && -r * (j + k) < 2 * i && i < pq * j && -(i + r * j) < (r + pq) * k && pq * k < i) {
                    long s = 2 * i + r * (j + k);
                    if (dv(2 * b, s)) add4(out, eA, 1, min2exp);
                    if (dv(2 * a, s)) add4(out, eA, 1, min2exp);
                }
                // C8
                if (dv(2 * a, i + k + 2 * r * j) && dv(2 * b, i - k) && -pq * j - 2 * r * j < k && k < pq * j &&
                    pq * j < i)
                    add4(out, eA, 1, min2exp);
                // C9
                if (dv(2 * a, i + k) && dv(2 * b, i - k) && -pq * j < k && k < pq * j && pq * j < i)
                    add4(out, eA, 1, min2exp);
                // C1: i = pq j, -j < l < j
                if (i == pq * j && dv(2 * b, i - k) && k < pq * j) {
                    for (long l = std::max(-j + 1, -M); l <= std::min(j - 1, M); ++l) {
                        if (!even(j - l)) continue;
                        if (dv(2 * a, i + k + r * (j - l)) && -pq * j - r * (j - l) < k) add4(out, eA, -1, min2exp);
                    }
                }
                // C2..C5: k < pq l < i, l < j
                long lo = std::max(fdiv(k, pq) + 1, -M);
                long hi = std::min({cdiv(i, pq) - 1, j - 1, M});
                for (long l = lo; l <= hi; ++l) {
                    if (!even(j - l)) continue;
                    const long eB = f4 - i * j + j * k - k * l - l * i - r * l * l;
                    if (-i - r * (j + l) < k && -pq * j - r * (j + l) < k) {
                        if (dv(2 * b, i - k) && dv(2 * a, i + k + r * (j + l))) add4(out, eB, 1, min2exp);
                        if (dv(2 * a, i - k) && dv(2 * b, i + k + r * (j + l))) add4(out, eB, 1, min2exp);
                    }
                    if (-i + r * (j - l) < k && -pq * j < k) {
                        if (dv(2 * a, i - k) && dv(2 * b, i + k - r * (j - l))) add4(out, eB, 1, min2exp);
                        if (dv(2 * b, i - k) && dv(2 * a, i + k - r * (j - l))) add4(out, eB, 1, min2exp);
                    }
                }
            }
        }
    });
}

Counts enumerate_r0(const HirzebruchParams& P, PicClass cls, long min2exp, long M, unsigned threads) {
    if (P.r != 0) throw DomainError("the r0 engine needs r = 0");
    const long a = P.a, b = P.b, pq = P.p * P.q, m = cls.m, n = cls.n, C = P.C;
    const long f4 = 2 * (n * m + n * C + 2 * C + 2 * m);
    return parallel_over(-M, M, threads, [&](long i, Counts& out) {
        if (!even(m + i)) return;
        for (long j = -M; j <= M; ++j) {
            if (!even(n + j)) continue;
            const long eA = f4 - 2 * j * i;
            for (long k = -M; k <= M; ++k) {
                // C4, C5
                if (even(j + k) && -i < pq * k && pq * k < i && i < pq * j) {
                    if (dv(b, i)) add4(out, eA, 1, min2exp);
                    if (dv(a, i)) add4(out, eA, 1, min2exp);
                }
                // C6
                if (dv(2 * a, i + k) && dv(2 * b, i - k) && -pq * j < k && k < pq * j && pq * j < i)
                    add4(out, eA, 2, min2exp);
                // C1
                if (i == pq * j && dv(2 * b, i - k) && dv(2 * a, i + k) && -pq * j < k && k < pq * j) {
                    for (long l = std::max(-j + 1, -M); l <= std::min(j - 1, M); ++l)
                        if (even(j - l)) add4(out, eA, -1, min2exp);
                }
                // C2, C3
                if (!(-i < k && -pq * j < k)) continue;
                long lo = std::max(fdiv(k, pq) + 1, -M);
                long hi = std::min({cdiv(i, pq) - 1, j - 1, M});
                for (long l = lo; l <= hi; ++l) {
                    if (!even(j - l)) continue;
                    const long eB = f4 - i * j + j * k - k * l - l * i;
                    if (dv(2 * b, i - k) && dv(2 * a, i + k)) add4(out, eB, 2, min2exp);
                    if (dv(2 * a, i - k) && dv(2 * b, i + k)) add4(out, eB, 2, min2exp);
                }
            }
        }
    });
}

Counts enumerate_lambda(const HirzebruchParams& P, PicClass cls, long min2exp, long M, unsigned threads) {
    if (P.r < 0) throw DomainError("rank-2 series need r >= 0");
    const long a = P.a, b = P.b, r = P.r, pq = P.p * P.q, m = cls.m, n = cls.n, C = P.C;
    auto chi2 = [&](long M_, long N_) { return (1 + N_) * (C + 2 * M_ - N_ * r); };
    const auto types = all_incidence_types();
    std::vector<std::vector<std::vector<int>>> blocks;
    for (const auto& t : types) blocks.push_back(incidence_blocks(t));
    return parallel_over(0, M / a, threads, [&](long i1, Counts& out) {
        const long L1 = i1 * a;
        for (long L2 = 0; L2 <= M; ++L2)
            for (long L3 = 0; L3 <= M; L3 += b)
                for (long L4 = 0; L4 <= M; ++L4) {
                    const std::array<long, 4> L{L1, L2, L3, L4};
                    const long sm = m + L1 + L3 + r * L4, sn = n + L2 + L4;
                    if (!even(sm) || !even(sn)) continue;
                    int positive = 0, zero_at = -1;
                    for (int t = 0; t < 4; ++t) {
                        if (L[t] > 0)
                            ++positive;
                        else
                            zero_at = t;
                    }
                    if (positive < 3) continue;
                    const long M1 = sm / 2, N1 = sn / 2;
                    const long base = chi2(M1, N1) + chi2(M1 - L1 - L3 - r * L4, N1 - L2 - L4);
                    const std::array<long, 4> w{L1, pq * L2, L3, (r + pq) * L4};
                    const long total = w[0] + w[1] + w[2] + w[3];
                    for (std::size_t ti = 0; ti < types.size(); ++ti) {
                        const auto& t = types[ti];
                        if (positive == 4 && t.kind == IncidenceKind::type2) continue;
                        if (positive == 3 && (t.kind != IncidenceKind::type2 || t.i != zero_at)) continue;
                        bool stable = true;
                        for (const auto& blk : blocks[ti]) {
                            long s = 0;
                            for (int x : blk) s += w[x];
                            if (!(2 * s < total)) stable = false;
                        }
                        if (!stable) continue;
                        long corr = 0;
                        for (int x = 0; x < 4; ++x) {
                            int y = (x + 1) % 4;
                            bool same = t.kind == IncidenceKind::type3 &&
                                        ((t.i == x && t.j == y) || (t.i == y && t.j == x));
                            if (!same) corr += L[x] * L[y];
                        }
                        long e2 = base - 2 * corr;
                        if (e2 >= min2exp) out[e2] += euler_weight(t);
                    }
                }
    });
}

namespace {

long default_initial_bound(Engine e, const HirzebruchParams& P, PicClass cls, long min2exp) {
    long top2;
    if (e == Engine::r0)
        top2 = cls.n * cls.m + cls.n * P.C + 2 * P.C + 2 * cls.m;
    else
        top2 = fdiv(2 * (P.C - P.r) * cls.n + 4 * P.C + 4 * cls.m + 2 * cls.m * cls.n - cls.n * cls.n * P.r, 2);
    return std::max(8L, top2 - min2exp + 2);
}

HalfExpLaurent to_series(const Counts& c, long min2exp) {
    HalfExpLaurent s(min2exp);
    for (const auto& [e, v] : c) s.add_term(e, Rat(v));
    return s;
}

}  // namespace

EngineRun run_engine(Engine e, const HirzebruchParams& P, PicClass cls, long min2exp, const EnumerationOptions& opt) {
    unsigned threads = opt.threads ? opt.threads : default_threads();
    std::function<Counts(long)> pass;
    switch (e) {
        case Engine::csets:
            if (P.r < 0) throw DomainError("rank-2 series need r >= 0");
            pass = [&](long M) { return enumerate_csets(P, cls, min2exp, M, threads); };
            break;
        case Engine::r0:
            if (P.r != 0) throw DomainError("the r0 engine needs r = 0");
            pass = [&](long M) { return enumerate_r0(P, cls, min2exp, M, threads); };
            break;
        case Engine::lambda:
            if (P.r < 0) throw DomainError("rank-2 series need r >= 0");
            pass = [&](long M) { return enumerate_lambda(P, cls, min2exp, M, threads); };
            break;
        case Engine::closed:
            if (!(P.a == 1 && P.b == 2 && P.r == 0)) throw DomainError("the closed engine covers (a,b,r) = (1,2,0) only");
            break;
    }

    // The closed forms only cover four classes; others come from the tensor shift.
    PicClass base = cls;
    long shift2 = 0;
    if (e == Engine::closed) {
        base = {mod_floor(cls.m, 2L), mod_floor(cls.n, 2L)};
        long si = (cls.m - base.m) / 2, sj = (cls.n - base.n) / 2;
        Rat g = tensor_shift(si, sj, base, P);
        shift2 = 2 * g.get_num().get_si();
        pass = [&, base, shift2](long M) { return enumerate_closed_p12(base, min2exp - shift2, M); };
    }

    EngineRun run;
    run.engine = e;
    long M = opt.initial_bound > 0 ? opt.initial_bound : default_initial_bound(e, P, base, min2exp - shift2);
    for (; M <= opt.max_bound; M *= 2) {
        run.bounds.push_back(M);
        run.passes.push_back(to_series(pass(M), min2exp - shift2).shifted(shift2));
        std::size_t k = run.passes.size();
        if (k >= 3 && run.passes[k - 1] == run.passes[k - 2] && run.passes[k - 2] == run.passes[k - 3]) {
            run.stabilized = true;
            break;
        }
    }
    run.window = {min2exp, run.passes.back()};
    return run;
}

SeriesWindow rank2_vb_csets(const HirzebruchParams& P, PicClass cls, long min2exp) {
    return run_engine(Engine::csets, P, cls, min2exp).window;
}

SeriesWindow rank2_vb_r0(long a, long b, PicClass cls, long min2exp) {
    return run_engine(Engine::r0, derive_params(a, b, 0), cls, min2exp).window;
}

SeriesWindow rank2_vb_closed_p12(PicClass cls, long min2exp) {
    return run_engine(Engine::closed, derive_params(1, 2, 0), cls, min2exp).window;
}

SeriesWindow rank2_vb_lambda(const HirzebruchParams& P, PicClass cls, long min2exp) {
    return run_engine(Engine::lambda, P, cls, min2exp).window;
}

CrosscheckReport compare_runs(const HirzebruchParams& P, PicClass cls, long min2exp, std::vector<EngineRun> runs) {
    CrosscheckReport rep;
    rep.params = P;
    rep.cls = cls;
    rep.min2exp = min2exp;
    rep.runs = std::move(runs);
    if (rep.runs.empty()) return rep;
    long top = min2exp;
    for (const auto& run : rep.runs) top = std::max(top, run.window.series.max2exp());
    for (long e = top; e >= min2exp && !rep.first_disagreement; --e) {
        Rat ref = rep.runs.front().window.series.coeff(e);
        for (std::size_t k = 1; k < rep.runs.size(); ++k) {
            Rat c = rep.runs[k].window.series.coeff(e);
            if (c != ref) {
                rep.first_disagreement = e;
                rep.detail = engine_name(rep.runs.front().engine) + " has " + to_string(ref) + ", " +
                             engine_name(rep.runs[k].engine) + " has " + to_string(c) + " at q^" +
                             to_string(make_rat(Int(e), Int(2)));
                break;
            }
        }
    }
    for (const auto& run : rep.runs)
        if (!run.stabilized) {
            rep.pass = false;
            if (rep.detail.empty()) rep.detail = engine_name(run.engine) + " did not stabilize";
        }
    if (rep.first_disagreement) rep.pass = false;
    if (rep.pass) rep.detail = std::to_string(rep.runs.size()) + " engines agree";
    return rep;
}

CrosscheckReport crosscheck(const HirzebruchParams& P, PicClass cls, long min2exp, bool with_lambda,
                            const EnumerationOptions& opt) {
    if (P.r < 0) throw DomainError("rank-2 series need r >= 0");
    std::vector<EngineRun> runs;
    runs.push_back(run_engine(Engine::csets, P, cls, min2exp, opt));
    if (P.r == 0) runs.push_back(run_engine(Engine::r0, P, cls, min2exp, opt));
    if (P.a == 1 && P.b == 2 && P.r == 0) runs.push_back(run_engine(Engine::closed, P, cls, min2exp, opt));
    if (with_lambda) runs.push_back(run_engine(Engine::lambda, P, cls, min2exp, opt));
    return compare_runs(P, cls, min2exp, std::move(runs));
}

}  // namespace hz
