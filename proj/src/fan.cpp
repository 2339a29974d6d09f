#include "hz/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hz {

IntMatrix StackyFan::free_matrix() const {
    IntMatrix m(lattice.free_rank, rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j)
        for (int i = 0; i < lattice.free_rank; ++i) m(i, j) = rays[j].free[i];
    return m;
}

IntMatrix StackyFan::beta_matrix() const {
    std::size_t t = lattice.torsion.size();
    IntMatrix m(lattice.free_rank + t, rays.size());
    for (std::size_t j = 0; j < rays.size(); ++j) {
        for (int i = 0; i < lattice.free_rank; ++i) m(i, j) = rays[j].free[i];
        for (std::size_t k = 0; k < t; ++k) m(lattice.free_rank + k, j) = rays[j].torsion[k];
    }
    return m;
}

std::vector<Cone> StackyFan::all_cones() const {
    std::set<Cone> out;
    for (const auto& c : cones) {
        std::size_t k = c.size();
        for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
            Cone f;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1UL << i)) f.push_back(c[i]);
            out.insert(f);
        }
    }
    return {out.begin(), out.end()};
}

void validate_fan(const StackyFan& f) {
    int rk = f.lattice.free_rank;
    for (const auto& r : f.rays) {
        if (static_cast<int>(r.free.size()) != rk || r.torsion.size() != f.lattice.torsion.size())
            throw DomainError("ray dimension does not match lattice");
        for (std::size_t k = 0; k < r.torsion.size(); ++k)
            if (r.torsion[k] < 0 || r.torsion[k] >= f.lattice.torsion[k])
                throw DomainError("torsion residue out of range");
    }
    IntMatrix fm = f.free_matrix();
    for (const auto& c : f.cones) {
        if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
            throw DomainError("cone indices must be sorted and distinct");
        for (int i : c)
            if (i < 0 || i >= static_cast<int>(f.rays.size())) throw DomainError("cone index out of range");
        std::vector<std::size_t> idx(c.begin(), c.end());
        if (matrix_rank(fm.select_cols(idx)) != static_cast<int>(c.size()))
            throw DomainError("cone is not simplicial");
    }
    if (matrix_rank(fm) != rk) throw DomainError("ray images have infinite cokernel");
}

namespace {

StackyFan free_fan(int rank, const std::vector<IntVec>& rays, std::vector<Cone> cones) {
    StackyFan f;
    f.lattice.free_rank = rank;
    for (const auto& r : rays) f.rays.push_back({r, {}});
    for (auto& c : cones) std::sort(c.begin(), c.end());
    f.cones = std::move(cones);
    return f;
}

void require_torsion_free(const StackyFan& f) {
    if (!f.lattice.torsion.empty()) throw DomainError("unsupported torsion: base lattice must be free");
}

Int list_gcd(const std::vector<Int>& w) {
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    return g;
}

}  // namespace

StackyFan wps_fan(const std::vector<Int>& w) {
    if (w.size() < 2) throw DomainError("invalid weights: need at least two");
    for (const auto& x : w)
        if (x <= 0) throw DomainError("invalid weights: must be positive");
    if (list_gcd(w) != 1) throw DomainError("invalid weights: gcd is not 1, use the gerbe constructor");
    std::size_t n = w.size() - 1;
    auto lam = suffix_gcds(w);
    IntMatrix B(n, n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        auto row = solve_gcd_chain_row(static_cast<int>(i), w, lam);
        for (std::size_t j = 0; j <= n; ++j) B(i - 1, j) = row[j];
    }
    // minor identities
    Int g = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        Int d = det(B.drop_col(i));
        Int expect = ((n + 1 - (i + 1)) % 2 == 0) ? w[i] : Int(-w[i]);
        if (d != expect) throw std::logic_error("wps_fan: minor identity violated");
        g = gcd(g, d);
    }
    if (g != 1) throw std::logic_error("wps_fan: maximal minors not coprime");

    std::vector<IntVec> rays;
    for (std::size_t j = 0; j <= n; ++j) rays.push_back(B.col(j));
    std::vector<Cone> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        Cone c;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != skip) c.push_back(static_cast<int>(j));
        cones.push_back(c);
    }
    std::reverse(cones.begin(), cones.end());
    auto f = free_fan(static_cast<int>(n), rays, cones);
    validate_fan(f);
    return f;
}

StackyFan wps_gerbe_fan(const std::vector<Int>& w) {
    if (w.size() < 2) throw DomainError("invalid weights: need at least two");
    for (const auto& x : w)
        if (x <= 0) throw DomainError("invalid weights: must be positive");
    Int lam = list_gcd(w);
    if (lam == 1) throw DomainError("invalid weights: gcd is 1, use wps_fan");
    std::vector<Int> wr;
    for (const auto& x : w) wr.push_back(x / lam);
    StackyFan f = wps_fan(wr);

    // colex-minimal c in [0,lam)^{n+1} with sum c_i wr_i = 1 mod lam
    std::size_t N = wr.size();
    std::vector<Int> prefix_gcd(N + 1);  // gcd(wr_1..wr_k, lam)
    prefix_gcd[0] = lam;
    for (std::size_t k = 0; k < N; ++k) prefix_gcd[k + 1] = gcd(prefix_gcd[k], wr[k]);
    std::vector<Int> c(N, Int(0));
    Int target = 1;
    for (std::size_t k = N; k-- > 0;) {
        for (Int v = 0; v < lam; ++v) {
            Int rest = mod_floor(Int(target - v * wr[k]), lam);
            if (k == 0 ? rest == 0 : mod_floor(rest, prefix_gcd[k]) == 0) {
                c[k] = v;
                target = rest;
                break;
            }
        }
    }
    f.lattice.torsion = {lam};
    for (std::size_t j = 0; j < N; ++j) f.rays[j].torsion = {c[j]};
    validate_fan(f);
    return f;
}

StackyFan line_bundle_total_space(const StackyFan& base, const std::vector<Int>& coeffs) {
    require_torsion_free(base);
    if (coeffs.size() != base.n_rays()) throw DomainError("divisor coefficient count must equal ray count");
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < base.n_rays(); ++i) {
        IntVec v = base.rays[i].free;
        v.push_back(-coeffs[i]);
        rays.push_back(v);
    }
    IntVec top(base.lattice.free_rank + 1, Int(0));
    top.back() = 1;
    rays.push_back(top);
    int extra = static_cast<int>(base.n_rays());
    std::vector<Cone> cones;
    for (auto c : base.cones) {
        c.push_back(extra);
        cones.push_back(c);
    }
    auto f = free_fan(base.lattice.free_rank + 1, rays, cones);
    validate_fan(f);
    return f;
}

StackyFan projective_bundle(const StackyFan& base, const std::vector<std::vector<Int>>& D) {
    require_torsion_free(base);
    if (D.size() < 2) throw DomainError("projective bundle needs at least two divisors");
    std::size_t r = D.size() - 1, n = base.n_rays();
    for (const auto& d : D)
        if (d.size() != n) throw DomainError("divisor coefficient count must equal ray count");
    int rk = base.lattice.free_rank;
    std::vector<IntVec> rays;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec v = base.rays[j].free;
        for (std::size_t i = 1; i <= r; ++i) v.push_back(D[i][j] - D[0][j]);
        rays.push_back(v);
    }
    for (std::size_t i = 0; i <= r; ++i) {
        IntVec v(rk + r, Int(0));
        for (std::size_t k = 1; k <= r; ++k)
            if (i == 0)
                v[rk + k - 1] = -1;
            else if (k == i)
                v[rk + k - 1] = 1;
        rays.push_back(v);
    }
    std::vector<Cone> cones;
    for (const auto& s : base.cones)
        for (std::size_t i = 0; i <= r; ++i) {
            Cone c = s;
            for (std::size_t k = 0; k <= r; ++k)
                if (k != i) c.push_back(static_cast<int>(n + k));
            cones.push_back(c);
        }
    auto f = free_fan(rk + static_cast<int>(r), rays, cones);
    validate_fan(f);
    return f;
}

void canonical_st(long a, long b, long r, long& s, long& t) {
    if (a <= 0 || b <= 0) throw DomainError("a and b must be positive");
    Int g, x, y;
    xgcd(Int(a), Int(b), g, x, y);
    if (g != 1) throw DomainError("non-coprime (a,b): gcd(a,b) must be 1");
    Int sv = mod_floor(Int(Int(r) * x), Int(b));
    s = sv.get_si();
    t = (r - s * a) / b;
}

StackyFan hirzebruch_fan(long a, long b, long r) {
    long s, t;
    canonical_st(a, b, r, s, t);
    auto f = free_fan(2, {{Int(b), Int(s)}, {Int(0), Int(1)}, {Int(-a), Int(t)}, {Int(0), Int(-1)}},
                      {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    validate_fan(f);
    return f;
}

bool fans_equivalent(const StackyFan& x, const StackyFan& y) {
    if (!(x.lattice == y.lattice) || x.n_rays() != y.n_rays() || x.cones.size() != y.cones.size()) return false;
    std::map<std::pair<IntVec, IntVec>, int> where;
    for (std::size_t i = 0; i < y.n_rays(); ++i) where[{y.rays[i].free, y.rays[i].torsion}] = static_cast<int>(i);
    if (where.size() != y.n_rays()) return false;
    std::vector<int> perm;
    for (const auto& r : x.rays) {
        auto it = where.find({r.free, r.torsion});
        if (it == where.end()) return false;
        perm.push_back(it->second);
    }
    std::set<Cone> xc, yc(y.cones.begin(), y.cones.end());
    for (const auto& c : x.cones) {
        Cone m;
        for (int i : c) m.push_back(perm[i]);
        std::sort(m.begin(), m.end());
        xc.insert(m);
    }
    return xc == yc;
}

bool check_split(const StackyFan& whole, const StackyFan& p1, const StackyFan& p2,
                 const std::vector<IntMatrix>& A, SplitMode mode) {
    int r1 = p1.lattice.free_rank, r2 = p2.lattice.free_rank;
    std::size_t n1 = p1.n_rays(), n2 = p2.n_rays();
    if (whole.lattice.free_rank != r1 + r2 || whole.n_rays() != n1 + n2)
        throw DomainError("dimension mismatch between fan and its parts");
    std::vector<Int> tors = p1.lattice.torsion;
    tors.insert(tors.end(), p2.lattice.torsion.begin(), p2.lattice.torsion.end());
    if (whole.lattice.torsion != tors) throw DomainError("dimension mismatch: torsion of parts");
    std::size_t want = mode == SplitMode::global ? 1 : p2.cones.size();
    if (A.size() != want) throw DomainError("dimension mismatch: wrong number of splitting matrices");
    for (const auto& m : A)
        if (static_cast<int>(m.rows()) != r1 || static_cast<int>(m.cols()) != r2)
            throw DomainError("dimension mismatch: splitting matrix shape");

    std::size_t t1 = p1.lattice.torsion.size();
    for (std::size_t i = 0; i < n1; ++i) {
        const auto& w = whole.rays[i];
        IntVec fr = p1.rays[i].free, tr = p1.rays[i].torsion;
        fr.resize(r1 + r2, Int(0));
        tr.resize(tors.size(), Int(0));
        if (w.free != fr || w.torsion != tr) return false;
    }
    auto g_image = [&](std::size_t i, const IntMatrix& M) {
        const auto& b = p2.rays[i];
        IntVec fr = M * b.free;
        fr.insert(fr.end(), b.free.begin(), b.free.end());
        IntVec tr(t1, Int(0));
        tr.insert(tr.end(), b.torsion.begin(), b.torsion.end());
        const auto& w = whole.rays[n1 + i];
        return w.free == fr && w.torsion == tr;
    };
    if (mode == SplitMode::global) {
        for (std::size_t i = 0; i < n2; ++i)
            if (!g_image(i, A[0])) return false;
    } else {
        for (std::size_t j = 0; j < p2.cones.size(); ++j)
            for (int i : p2.cones[j])
                if (!g_image(static_cast<std::size_t>(i), A[j])) return false;
    }

    std::set<Cone> sums;
    for (const auto& c1 : p1.all_cones())
        for (const auto& c2 : p2.all_cones()) {
            Cone c = c1;
            for (int i : c2) c.push_back(i + static_cast<int>(n1));
            sums.insert(c);
        }
    auto wc = whole.all_cones();
    return std::set<Cone>(wc.begin(), wc.end()) == sums;
}

}  // namespace hz
