#include "dynbv/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace dynbv {

CategoryProfile profile_A(long r, long k) {
    if (r < 1 || k < 1) throw std::invalid_argument("profile_A needs r,k >= 1");
    CategoryProfile p;
    p.n_strings = 3;
    p.offspring = 2;
    p.cats = {
        {{1, 0, 1}, static_cast<int>(r)},  // extra zeros of x^(1-r)
        {{0, 1, 0}, 1},                    // its extra one
        {{1, 1, 0}, static_cast<int>(k)},  // extra zeros of x^(1-k)
        {{0, 0, 1}, 1},                    // its extra one
    };
    return p;
}

CategoryProfile profile_B(long r, long k) {
    if (r < 1 || k < 1) throw std::invalid_argument("profile_B needs r,k >= 1");
    CategoryProfile p;
    p.n_strings = 3;
    p.offspring = 2;
    p.cats = {
        {{1, 0, 0}, static_cast<int>(r)},  // extra zeros shared by x^(1-r), x^(2-r-k)
        {{0, 1, 1}, 1},                    // the extra one they share
        {{0, 0, 1}, 1},                    // second extra one of x^(2-r-k)
        {{1, 1, 0}, static_cast<int>(k)},  // its k extra zeros
    };
    return p;
}

CategoryProfile profile_pair(long r) {
    if (r < 1) throw std::invalid_argument("profile_pair needs r >= 1");
    CategoryProfile p;
    p.n_strings = 2;
    p.offspring = 1;
    p.cats = {
        {{1, 0, 0}, static_cast<int>(r)},
        {{0, 1, 0}, 1},
    };
    return p;
}

namespace {

class DiscardEnumerator {
public:
    explicit DiscardEnumerator(const CategoryProfile& profile) : profile_(profile) {}

    std::array<Rational, 3> run() {
        std::uint32_t all = (1u << profile_.n_strings) - 1;
        std::vector<int> counts;
        counts.reserve(profile_.cats.size());
        for (const auto& c : profile_.cats) counts.push_back(c.count);
        return rec(counts, all);
    }

private:
    std::uint64_t key(const std::vector<int>& counts, std::uint32_t alive) const {
        std::uint64_t k = alive;
        for (int c : counts) k = (k << 5) | static_cast<std::uint64_t>(c);
        return k;
    }

    std::array<Rational, 3> rec(std::vector<int>& counts, std::uint32_t alive) {
        const std::uint64_t k = key(counts, alive);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;

        // categories that can still split the tied set
        int total = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0) continue;
            if (splits(i, alive)) total += counts[i];
        }
        std::array<Rational, 3> out{};
        if (total == 0) {
            // remaining strings are identical; the offspring loses the tie
            int idx = (profile_.offspring >= 0 && ((alive >> profile_.offspring) & 1))
                          ? profile_.offspring
                          : std::countr_zero(alive);
            out[static_cast<std::size_t>(idx)] = 1;
            memo_.emplace(k, out);
            return out;
        }
        for (std::size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] == 0 || !splits(i, alive)) continue;
            std::uint32_t zeros = 0;
            for (int s = 0; s < profile_.n_strings; ++s)
                if (((alive >> s) & 1) && profile_.cats[i].bits[static_cast<std::size_t>(s)] == 0)
                    zeros |= 1u << s;
            const Rational p(counts[i], total);
            if ((zeros & (zeros - 1)) == 0) {
                out[static_cast<std::size_t>(std::countr_zero(zeros))] += p;
            } else {
                --counts[i];
                auto sub = rec(counts, zeros);
                ++counts[i];
                for (int s = 0; s < 3; ++s) out[static_cast<std::size_t>(s)] += p * sub[static_cast<std::size_t>(s)];
            }
        }
        memo_.emplace(k, out);
        return out;
    }

    bool splits(std::size_t cat, std::uint32_t alive) const {
        bool saw0 = false, saw1 = false;
        for (int s = 0; s < profile_.n_strings; ++s) {
            if (!((alive >> s) & 1)) continue;
            (profile_.cats[cat].bits[static_cast<std::size_t>(s)] ? saw1 : saw0) = true;
        }
        return saw0 && saw1;
    }

    const CategoryProfile& profile_;
    std::unordered_map<std::uint64_t, std::array<Rational, 3>> memo_;
};

}  // namespace

std::vector<Rational> exact_discard_distribution(const CategoryProfile& profile) {
    if (profile.n_strings < 2 || profile.n_strings > 3)
        throw std::invalid_argument("profile must describe 2 or 3 strings");
    int total = 0;
    for (const auto& c : profile.cats) {
        if (c.count < 0) throw std::invalid_argument("negative category count");
        total += c.count;
    }
    if (total > 12) throw std::invalid_argument("too many differing positions (d > 12)");
    DiscardEnumerator en(profile);
    auto arr = en.run();
    return std::vector<Rational>(arr.begin(), arr.begin() + profile.n_strings);
}

// ---------------------------------------------------------------------------
// Exact tiny chain
// ---------------------------------------------------------------------------

namespace {

// Pair population lumped to joint pattern counts (n00, n01, n10, n11);
// the member order is immaterial, so (n01, n10) is stored sorted.
struct PairState {
    std::array<int, 4> c{};  // 00, 01, 10, 11

    void canonicalize() {
        if (c[1] > c[2]) std::swap(c[1], c[2]);
    }
    bool degenerate() const { return c[1] == 0 && c[2] == 0; }
    int zero_count_first() const { return c[0] + c[1]; }
    bool operator<(const PairState& o) const { return c < o.c; }
    bool operator==(const PairState& o) const { return c == o.c; }
};

struct Fnv {
    std::uint64_t h = 1469598103934665603ULL;
    void feed(const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    }
};

class TinyChain {
public:
    TinyChain(int n, const Rational& q) : n_(n), q_(q) {
        binom_.resize(static_cast<std::size_t>(n) + 1);
        for (int cnt = 0; cnt <= n; ++cnt) {
            auto& row = binom_[static_cast<std::size_t>(cnt)];
            row.resize(static_cast<std::size_t>(cnt) + 1);
            for (int j = 0; j <= cnt; ++j) {
                Rational w = 1;
                // C(cnt, j) q^j (1-q)^(cnt-j)
                for (int i = 0; i < j; ++i) w *= Rational(cnt - i, i + 1);
                for (int i = 0; i < j; ++i) w *= q_;
                for (int i = 0; i < cnt - j; ++i) w *= 1 - q_;
                row[static_cast<std::size_t>(j)] = w;
            }
        }
    }

    /// One-generation kernel from a pair state.
    std::map<PairState, Rational> step(const PairState& s) const {
        std::map<PairState, Rational> out;
        std::array<std::array<int, 2>, 4> pat{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
        for (int parent = 0; parent < 2; ++parent) {
            // flip counts per pair category
            std::array<int, 4> j{};
            enumerate_splits(s, 0, j, Rational(1, 2), [&](const std::array<int, 4>& flips,
                                                          const Rational& pr) {
                // triple categories: (a, b, offspring bit)
                CategoryProfile prof;
                prof.n_strings = 3;
                prof.offspring = 2;
                std::array<std::array<int, 2>, 4> counts{};  // per pair cat: [unflipped, flipped]
                for (int i = 0; i < 4; ++i) {
                    const int pb = pat[static_cast<std::size_t>(i)][static_cast<std::size_t>(parent)];
                    const int cnt = s.c[static_cast<std::size_t>(i)];
                    const int fl = flips[static_cast<std::size_t>(i)];
                    counts[static_cast<std::size_t>(i)] = {cnt - fl, fl};
                    const auto a = static_cast<std::uint8_t>(pat[static_cast<std::size_t>(i)][0]);
                    const auto b = static_cast<std::uint8_t>(pat[static_cast<std::size_t>(i)][1]);
                    if (cnt - fl > 0 && !constant(a, b, static_cast<std::uint8_t>(pb)))
                        prof.cats.push_back({{a, b, static_cast<std::uint8_t>(pb)}, cnt - fl});
                    if (fl > 0 && !constant(a, b, static_cast<std::uint8_t>(1 - pb)))
                        prof.cats.push_back({{a, b, static_cast<std::uint8_t>(1 - pb)}, fl});
                }
                auto discard = exact_discard_distribution(prof);
                for (int d = 0; d < 3; ++d) {
                    if (discard[static_cast<std::size_t>(d)] == 0) continue;
                    PairState nxt = next_state(s, flips, parent, d);
                    out[nxt] += pr * discard[static_cast<std::size_t>(d)];
                }
            });
        }
        return out;
    }

private:
    static bool constant(std::uint8_t a, std::uint8_t b, std::uint8_t y) {
        return a == b && b == y;
    }

    template <class Fn>
    void enumerate_splits(const PairState& s, int cat, std::array<int, 4>& j, Rational pr,
                          const Fn& fn) const {
        if (cat == 4) {
            fn(j, pr);
            return;
        }
        const int cnt = s.c[static_cast<std::size_t>(cat)];
        for (int f = 0; f <= cnt; ++f) {
            j[static_cast<std::size_t>(cat)] = f;
            enumerate_splits(s, cat + 1, j,
                             pr * binom_[static_cast<std::size_t>(cnt)][static_cast<std::size_t>(f)],
                             fn);
        }
        j[static_cast<std::size_t>(cat)] = 0;
    }

    static PairState next_state(const PairState& s, const std::array<int, 4>& flips, int parent,
                                int discarded) {
        std::array<std::array<int, 2>, 4> pat{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
        PairState nxt{};
        for (int i = 0; i < 4; ++i) {
            const int a = pat[static_cast<std::size_t>(i)][0];
            const int b = pat[static_cast<std::size_t>(i)][1];
            const int pb = pat[static_cast<std::size_t>(i)][static_cast<std::size_t>(parent)];
            const int cnt = s.c[static_cast<std::size_t>(i)];
            const int fl = flips[static_cast<std::size_t>(i)];
            auto add = [&](int y, int count) {
                if (count == 0) return;
                int first, second;
                if (discarded == 0) {
                    first = b;
                    second = y;
                } else if (discarded == 1) {
                    first = a;
                    second = y;
                } else {
                    first = a;
                    second = b;
                }
                nxt.c[static_cast<std::size_t>((first << 1) | second)] += count;
            };
            add(pb, cnt - fl);
            add(1 - pb, fl);
        }
        nxt.canonicalize();
        return nxt;
    }

    int n_;
    Rational q_;
    std::vector<std::vector<Rational>> binom_;
};

Rational mu1_exact_drift(int n, int m, const Rational& q) {
    // single generation: flip j0 of m zeros and j1 of n-m ones; the offspring
    // wins iff the top differing position is a flipped zero: j0/(j0+j1)
    auto binom_pmf = [&](int cnt, int j) {
        Rational w = 1;
        for (int i = 0; i < j; ++i) w *= Rational(cnt - i, i + 1) * q;
        for (int i = 0; i < cnt - j; ++i) w *= 1 - q;
        return w;
    };
    Rational drift = 0;
    for (int j0 = 0; j0 <= m; ++j0) {
        for (int j1 = 0; j1 <= n - m; ++j1) {
            if (j0 + j1 == 0) continue;
            drift += binom_pmf(m, j0) * binom_pmf(n - m, j1) * Rational(j0, j0 + j1) *
                     Rational(j0 - j1, 1);
        }
    }
    return drift;
}

}  // namespace

ExactChainResult exact_tiny_chain_drift(int n, int mu, long c_num, long c_den, int m) {
    if (n < 1 || n > 5) throw std::invalid_argument("tiny chain supports n in 1..5");
    if (mu != 1 && mu != 2) throw std::invalid_argument("tiny chain supports mu in {1,2}");
    if (m < 0 || m > n) throw std::invalid_argument("m must be in [0,n]");
    if (c_den <= 0 || c_num <= 0) throw std::invalid_argument("c must be a positive rational");
    const Rational c(c_num, c_den);
    if (c >= n) throw std::invalid_argument("c must be below n");
    const Rational q = c / n;

    ExactChainResult res;
    if (mu == 1) {
        res.drift = mu1_exact_drift(n, m, q);
        res.expected_phi_next = Rational(m) - res.drift;
        res.state_count = 0;
        Fnv f;
        f.feed("mu1:" + std::to_string(n) + ":" + std::to_string(m) + ":" + to_string(q) + ":" +
               to_string(res.drift));
        res.transition_digest = f.h;
        return res;
    }

    TinyChain chain(n, q);
    PairState start{};
    start.c = {m, 0, 0, n - m};

    // reachability from the start; absorbing (degenerate) states keep no kernel
    std::map<PairState, std::map<PairState, Rational>> kernel;
    std::vector<PairState> frontier{start};
    kernel[start] = chain.step(start);
    for (auto& [nxt, pr] : kernel[start])
        if (!nxt.degenerate() && !kernel.count(nxt)) frontier.push_back(nxt);
    for (std::size_t fi = 1; fi < frontier.size(); ++fi) {
        PairState s = frontier[fi];
        if (kernel.count(s)) continue;
        kernel[s] = chain.step(s);
        for (auto& [nxt, pr] : kernel[s])
            if (!nxt.degenerate() && !kernel.count(nxt)) frontier.push_back(nxt);
    }

    // v(s) = sum_t P(s->t) u(t), u absorbing = zero count; solve for the
    // non-degenerate states (the start re-enters via its own kernel row)
    std::vector<PairState> trans;
    for (auto& [s, row] : kernel)
        if (!s.degenerate()) trans.push_back(s);
    std::map<PairState, std::size_t> index;
    for (std::size_t i = 0; i < trans.size(); ++i) index[trans[i]] = i;
    const std::size_t N = trans.size();
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N, Rational(0)));
    std::vector<Rational> b(N, Rational(0));
    for (std::size_t i = 0; i < N; ++i) {
        A[i][i] = 1;
        for (auto& [nxt, pr] : kernel[trans[i]]) {
            if (nxt.degenerate())
                b[i] += pr * nxt.zero_count_first();
            else
                A[i][index[nxt]] -= pr;
        }
    }
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && A[piv][col] == 0) ++piv;
        if (piv == N) throw std::runtime_error("singular tiny-chain system");
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        const Rational inv = 1 / A[col][col];
        for (auto& x : A[col]) x *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < N; ++row) {
            if (row == col || A[row][col] == 0) continue;
            const Rational f = A[row][col];
            for (std::size_t x = 0; x < N; ++x) A[row][x] -= f * A[col][x];
            b[row] -= f * b[col];
        }
    }

    Rational ephi = 0;
    for (auto& [nxt, pr] : kernel[start])
        ephi += pr * (nxt.degenerate() ? Rational(nxt.zero_count_first()) : b[index[nxt]]);

    res.expected_phi_next = ephi;
    res.drift = Rational(m) - ephi;
    res.state_count = N;
    Fnv f;
    for (auto& [s, row] : kernel) {
        for (auto& [t, pr] : row) {
            f.feed(std::to_string(s.c[0]) + "," + std::to_string(s.c[1]) + "," +
                   std::to_string(s.c[2]) + "," + std::to_string(s.c[3]) + "->" +
                   std::to_string(t.c[0]) + "," + std::to_string(t.c[1]) + "," +
                   std::to_string(t.c[2]) + "," + std::to_string(t.c[3]) + ":" + to_string(pr) +
                   ";");
        }
    }
    res.transition_digest = f.h;
    return res;
}

bool conditional_symmetry_check(long r, bool perturbed) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    // Items in priority order: the extra one-bit of x^(1-r) (index slot i),
    // the mutation marker (slot j), and r exchangeable extra zero-bits in the
    // remaining slots. All (i, j) placements are equally likely under the
    // uniform order; the perturbation doubles the weight when the one-bit
    // ranks first overall.
    Rational total = 0, pa = 0, pb = 0, pab = 0;
    const long slots = r + 2;
    for (long i = 0; i < slots; ++i) {
        for (long j = 0; j < slots; ++j) {
            if (i == j) continue;
            Rational w = 1;
            if (perturbed && i == 0) w = 2;
            const bool a = (i == 0) || (i == 1 && j == 0);  // one-bit before all zeros
            const bool event_b = j != 0;                    // marker not first overall
            total += w;
            if (a) pa += w;
            if (event_b) pb += w;
            if (a && event_b) pab += w;
        }
    }
    pa /= total;
    pb /= total;
    pab /= total;
    return pab == pa * pb;
}

}  // namespace dynbv
