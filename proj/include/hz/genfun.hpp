/**
 * @file genfun.hpp
 * @brief Generating functions: rank-1 product, vb to tf conversion, rank-2 engines.
 *
 * Exponents are stored doubled (see HalfExpLaurent). A window with min2exp = w
 * is exact for every exponent e with 2e >= w.
 */
#pragma once

#include "hz/hirzebruch.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hz {

struct SeriesWindow {
    long min2exp = 0;
    HalfExpLaurent series;
};

// coefficients of prod_k (1-x^{ak})^{-e} (1-x^{bk})^{-e} up to x^{max_deg}
std::vector<Int> eta_power_coefficients(long a, long b, long e, long max_deg);

SeriesWindow rank1_series(const HirzebruchParams& P, PicClass cls, long min2exp);
SeriesWindow vb_to_tf(const SeriesWindow& s, long R, const HirzebruchParams& P);

enum class Engine { csets, r0, closed, lambda };
std::string engine_name(Engine e);
Engine parse_engine(const std::string& s);

using Counts = std::map<long, long>;  // doubled exponent -> signed count

// Single enumeration passes with a fixed bound M on every summation index.
Counts enumerate_csets(const HirzebruchParams& P, PicClass cls, long min2exp, long M, unsigned threads = 1);
Counts enumerate_r0(const HirzebruchParams& P, PicClass cls, long min2exp, long M, unsigned threads = 1);
Counts enumerate_lambda(const HirzebruchParams& P, PicClass cls, long min2exp, long M, unsigned threads = 1);
// (a,b,r) = (1,2,0); cls must be one of (0,0),(1,0),(0,1),(1,1); M bounds t and u
Counts enumerate_closed_p12(PicClass cls, long min2exp, long M);

struct EnumerationOptions {
    long initial_bound = 0;  // 0: derived from the window depth
    long max_bound = 1L << 12;
    unsigned threads = 0;  // 0: default_threads()
};

struct EngineRun {
    Engine engine = Engine::csets;
    SeriesWindow window;
    std::vector<long> bounds;            // successive doublings
    std::vector<HalfExpLaurent> passes;  // window at each bound
    bool stabilized = false;             // last three passes agree
};

// ORBIFOLD_THREADS if set, else hardware concurrency
unsigned default_threads();

EngineRun run_engine(Engine e, const HirzebruchParams& P, PicClass cls, long min2exp,
                     const EnumerationOptions& opt = {});

SeriesWindow rank2_vb_csets(const HirzebruchParams& P, PicClass cls, long min2exp);
SeriesWindow rank2_vb_r0(long a, long b, PicClass cls, long min2exp);
SeriesWindow rank2_vb_closed_p12(PicClass cls, long min2exp);
SeriesWindow rank2_vb_lambda(const HirzebruchParams& P, PicClass cls, long min2exp);

struct CrosscheckReport {
    HirzebruchParams params;
    PicClass cls;
    long min2exp = 0;
    std::vector<EngineRun> runs;
    bool pass = true;
    std::optional<long> first_disagreement;  // doubled exponent, scanning from the top
    std::string detail;
};

CrosscheckReport compare_runs(const HirzebruchParams& P, PicClass cls, long min2exp, std::vector<EngineRun> runs);
CrosscheckReport crosscheck(const HirzebruchParams& P, PicClass cls, long min2exp, bool with_lambda = false,
                            const EnumerationOptions& opt = {});

}  // namespace hz
