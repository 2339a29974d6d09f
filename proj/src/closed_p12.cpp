// Nested closed-form sums for P(1,2) x P^1, one function per reduced class.
// Every term has the shape c * q^{shift} * sum_{s=lo}^{hi-1} q^{-A s} * [1/(1-q^{-B})],
// expanded as finite or truncated geometric sums. Exponents are doubled throughout.
#include "hz/genfun.hpp"

namespace hz {

namespace {

struct Sink {
    long min2;
    Counts& out;

    void put(long e2, long c) {
        if (e2 >= min2) out[e2] += c;
    }

    // c q^{shift} (q^{-A lo} - q^{-A hi}) / (1 - q^{-A}); A = 0 is the limit hi - lo
    void tail(long c, long shift2, long A, long lo, long hi) {
        for (long s = lo; s < hi; ++s) {
            long e = shift2 - 2 * A * s;
            if (A > 0 && e < min2) break;
            put(e, c);
        }
    }

    // c q^{shift} / (1 - q^{-B})
    void inv(long c, long shift2, long B) {
        for (long e = shift2; e >= min2; e -= 2 * B) put(e, c);
    }

    // c q^{shift} (q^{-A lo} - q^{-A hi}) / ((1 - q^{-A}) (1 - q^{-B}))
    void tail_inv(long c, long shift2, long A, long lo, long hi, long B) {
        for (long s = lo; s < hi; ++s) {
            long e = shift2 - 2 * A * s;
            if (e < min2) break;
            inv(c, e, B);
        }
    }
};

void case00(Sink& S, long T) {
    for (long t = 1; t <= T; ++t) {
        S.put(2 * (4 - 4 * t * t), -(2 * t - 1) * (2 * t - 1));
        for (long u = 1; u <= T; ++u)
            for (long p = 1; p <= 2 * t; ++p) {
                S.tail(4, 2 * (4 - (4 * t + 4) * (t - p + 1) - 2 * p - 2 * u), 2 * u + 2 * p, p, 2 * t + 1);
                S.tail(4, 2 * (4 - (4 * t + 2) * (t - p + 1)), 2 * u + 2 * p - 2, p, 2 * t + 1);
            }
        for (long p = 1; p <= 2 * t; ++p)
            S.tail_inv(4, 2 * (4 - (4 * t + 4) * (t - p + 1) - 2 * p), 2 * p, p, 2 * t + 1, 4 * t + 4 - 2 * p);
        for (long p = 1; p <= 2 * t - 1; ++p)
            S.tail_inv(4, 2 * (4 - 2 * t * (2 * t - 2 * p + 1)), 2 * p, p, 2 * t, 4 * t - 2 * p);
        S.inv(2 * (2 * t - 1), 2 * (4 - 4 * t * (t + 1)), 4 * t);
        S.inv(2 * (2 * t - 1), 2 * (4 - (4 * t - 2) * t), 4 * t - 2);
        S.inv(2 * (2 * t - 1), 2 * (4 - 4 * t * (t + 1)), 4 * t);
        S.inv(2 * (2 * t - 1), 2 * (4 - 2 * t * (2 * t + 1)), 4 * t);
    }
}

void case10(Sink& S, long T) {
    for (long t = 1; t <= T; ++t) {
        for (long u = 1; u <= T; ++u) {
            for (long p = 1; p <= 2 * t; ++p) {
                long A = 2 * u + 2 * p - 2;
                S.tail(2, 2 * (5 - (4 * t + 1) * (t - p + 1)), A, p, 2 * t + 1);
                S.tail(2, 2 * (5 - (4 * t + 2) * (t - p + 1) + t + u), A, p, 2 * t + 1);
                S.tail(2, 2 * (5 - (4 * t + 2) * (t - p + 1) - t - u), A, p, 2 * t + 1);
            }
            for (long p = 1; p <= 2 * t - 1; ++p)
                S.tail(2, 2 * (5 - (4 * t - 1) * (t - p)), 2 * u + 2 * p - 2, p, 2 * t);
        }
        for (long p = 1; p <= 2 * t - 1; ++p) {
            long B = 4 * t - 2 * p;
            S.tail_inv(2, 2 * (5 - (4 * t + 1) * (t - p) - 2 * p), 2 * p, p, 2 * t, B);
            S.tail_inv(2, 2 * (5 - (4 * t + 1) * (t - p) - p), 2 * p, p, 2 * t, B);
            S.tail_inv(2, 2 * (5 - (4 * t + 3) * (t - p) - 2 * p), 2 * p, p, 2 * t, B);
            S.tail_inv(2, 2 * (5 - (4 * t + 3) * (t - p) - 3 * p), 2 * p, p, 2 * t, B);
        }
        S.inv(2 * t, 2 * (5 - (4 * t + 1) * (t + 1)), 4 * t + 1);
        S.inv(2 * t, 2 * (5 - (4 * t - 1) * t), 4 * t - 1);
        S.inv(4 * t, 2 * (5 - (4 * t + 1) * t), 2 * t);
    }
}

void case01(Sink& S, long T) {
    for (long t = 1; t <= T; ++t) {
        S.put(2 * (6 - (2 * t + 1) * (2 * t + 1)), -4 * t * t);
        for (long u = 1; u <= T; ++u)
            for (long p = 1; p <= 2 * t - 1; ++p) {
                S.tail(4, 2 * (6 - 2 * t * (2 * t - 2 * p + 1)), 2 * u + 2 * p - 2, p, 2 * t);
                S.tail(4, 2 * (5 - 4 * t * (t - p + 1) - 2 * u), 2 * u + 2 * p, p, 2 * t);
            }
        for (long p = 1; p <= 2 * t; ++p)
            S.tail_inv(4, 2 * (6 - (4 * t + 2) * (t - p + 1)), 2 * p, p, 2 * t + 1, 4 * t + 2 - 2 * p);
        for (long p = 1; p <= 2 * t - 1; ++p)
            S.tail_inv(4, 2 * (5 - 4 * t * (t - p + 1)), 2 * p, p, 2 * t, 4 * t + 2 - 2 * p);
        S.inv(4 * t - 1, 2 * (6 - 2 * t * (2 * t + 1)), 4 * t);
        S.inv(4 * t - 3, 2 * (6 - (2 * t - 1) * (2 * t + 1)), 4 * t - 2);
        S.inv(2 * (2 * t - 1), 2 * (6 - 2 * t * (2 * t - 1)), 4 * t - 2);
        S.inv(4 * t, 2 * (6 - (2 * t + 1) * (2 * t + 3)), 4 * t + 2);
    }
}

void case11(Sink& S, long T) {
    for (long t = 1; t <= T; ++t) {
        for (long u = 1; u <= T; ++u) {
            for (long p = 1; p <= 2 * t; ++p)
                S.tail(2, 2 * (7 - (4 * t + 3) * (t - p) - 2 * p), 2 * u + 2 * p - 2, p, 2 * t + 1);
            for (long p = 1; p <= 2 * t - 1; ++p) {
                long A = 2 * u + 2 * p - 2;
                S.tail(2, 2 * (7 - (4 * t - 1) * (t - p + 1) - u + p), A, p, 2 * t);
                S.tail(2, 2 * (8 - (4 * t - 1) * (t - p) - 2 * p), A, p, 2 * t);
                S.tail(2, 2 * (7 - (4 * t + 1) * (t - p) - p + u), A, p, 2 * t);
            }
        }
        for (long p = 1; p <= 2 * t; ++p) {
            long B = 4 * t + 2 - 2 * p;
            S.tail_inv(2, 2 * (8 - (4 * t + 3) * (t - p + 1)), 2 * p, p, 2 * t + 1, B);
            S.tail_inv(2, 2 * (8 - (4 * t + 3) * (t - p + 1) - p), 2 * p, p, 2 * t + 1, B);
            S.tail_inv(2, 2 * (7 - (4 * t + 1) * (t - p + 1)), 2 * p, p, 2 * t + 1, B);
            S.tail_inv(2, 2 * (7 - (4 * t + 1) * (t - p + 1) + p), 2 * p, p, 2 * t + 1, B);
        }
        S.inv(2 * t, 15 - (2 * t + 1) * (4 * t + 1), 4 * t + 1);
        S.inv(2 * t, 15 - (2 * t + 1) * (4 * t - 1), 4 * t - 1);
        S.inv(2 * (2 * t - 1), 15 - (2 * t - 1) * (4 * t + 1), 4 * t - 2);
        S.inv(2 * (2 * t - 1), 15 - (2 * t - 1) * (4 * t - 1), 4 * t - 2);
    }
}

}  // namespace

Counts enumerate_closed_p12(PicClass cls, long min2exp, long M) {
    Counts out;
    Sink S{min2exp, out};
    if (cls == PicClass{0, 0})
        case00(S, M);
    else if (cls == PicClass{1, 0})
        case10(S, M);
    else if (cls == PicClass{0, 1})
        case01(S, M);
    else if (cls == PicClass{1, 1})
        case11(S, M);
    else
        throw DomainError("closed forms cover the classes (0,0), (1,0), (0,1), (1,1) only");
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace hz
