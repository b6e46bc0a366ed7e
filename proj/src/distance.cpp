// Copyright 2026 The qcw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qcw/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "qcw/parallel.hpp"
#include "qcw/rng.hpp"

namespace qcw {

Rational TypeEstimate::mean_hits() const {
    if (distinct == 0) return Rational(0);
    Rational r(static_cast<long>(hits), static_cast<long>(distinct));
    r.canonicalize();
    return r;
}

double TypeEstimate::failure_bound() const {
    // Rounded up to the smallest positive double when exp underflows, so the
    // value stays a valid bound inside (0, 1].
    return std::max(std::exp(-mean_hits().get_d()), std::numeric_limits<double>::denorm_min());
}

namespace {

BinaryVector unpermute(const BinaryVector &v, const std::vector<size_t> &perm) {
    BinaryVector out(v.size());
    for (size_t j : v.support()) out.set(perm[j], true);
    return out;
}

/// Minimal-weight non-stabilizer words found in one trial.
struct TrialResult {
    size_t weight = SIZE_MAX;
    std::vector<BinaryVector> words;
};

TrialResult run_trial(const BinaryMatrix &gen_t, const RowSpace &stab, uint64_t seed, bool pairs) {
    Rng rng(seed);
    size_t n = gen_t.rows();
    auto perm = rng.permutation(n);
    BinaryMatrix permuted(gen_t.cols(), n);
    for (size_t j = 0; j < n; j++) {
        for (size_t i : gen_t.row(perm[j]).support()) permuted.set(i, j, true);
    }
    BinaryMatrix red = row_reduce(permuted).reduced;
    size_t rows = red.rows(), words = red.words_per_row();
    // Candidates (i, j): row i alone when j == i, else rows i + j; bucketed by weight.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> bucket(n + 1);
    for (size_t i = 0; i < rows; i++) {
        bucket[red.row_weight(i)].emplace_back(i, i);
        if (!pairs) continue;
        auto ri = red.row_words(i);
        for (size_t j = i + 1; j < rows; j++) {
            auto rj = red.row_words(j);
            size_t w = 0;
            for (size_t k = 0; k < words; k++) w += std::popcount(ri[k] ^ rj[k]);
            bucket[w].emplace_back(i, j);
        }
    }
    TrialResult res;
    BinaryVector v(n);
    for (size_t w = 1; w <= n && res.words.empty(); w++) {
        for (auto [i, j] : bucket[w]) {
            auto vw = v.words();
            auto ri = red.row_words(i);
            for (size_t k = 0; k < words; k++) vw[k] = ri[k];
            if (j != i) {
                auto rj = red.row_words(j);
                for (size_t k = 0; k < words; k++) vw[k] ^= rj[k];
            }
            BinaryVector word = unpermute(v, perm);
            if (stab.contains(word)) continue;
            res.weight = w;
            res.words.push_back(std::move(word));
        }
    }
    return res;
}

TypeEstimate estimate_type(const BinaryMatrix &h, const BinaryMatrix &s, const EstimateOptions &opts,
                           uint64_t type_tag) {
    BinaryMatrix gen_t = nullspace(h).transpose();
    RowSpace stab(s);
    TypeEstimate est;
    est.d_upper = SIZE_MAX;
    std::set<BinaryVector> seen;
    const size_t chunk = 256;
    for (size_t start = 0; start < opts.trials; start += chunk) {
        size_t cnt = std::min(chunk, opts.trials - start);
        std::vector<TrialResult> results(cnt);
        parallel_for(cnt, opts.workers, [&](size_t i) {
            results[i] = run_trial(gen_t, stab, substream_seed(opts.seed, {type_tag, start + i}), opts.pairs);
        });
        for (auto &r : results) {
            if (r.weight == SIZE_MAX || r.weight > est.d_upper) continue;
            if (r.weight < est.d_upper) {
                est.d_upper = r.weight;
                est.hits = 0;
                seen.clear();
                est.witness = r.words.front();
            }
            for (auto &w : r.words) {
                est.hits++;
                seen.insert(w);
            }
        }
        if (opts.stop_at && est.d_upper <= opts.stop_at) break;
    }
    est.distinct = seen.size();
    return est;
}

uint64_t binomial_sum(size_t n, size_t w) {
    uint64_t total = 0, c = 1;
    for (size_t i = 0; i <= w && i <= n; i++) {
        total += c;
        if (total > (uint64_t{1} << 62)) return UINT64_MAX;
        c = c * (n - i) / (i + 1);
    }
    return total;
}

/// Calls fn(support, syndrome words) for every support of size <= maxw.
void for_each_support(const std::vector<std::vector<uint64_t>> &cols, size_t words, size_t maxw,
                      const std::function<void(const std::vector<uint32_t> &, const std::vector<uint64_t> &)> &fn) {
    std::vector<uint32_t> sup;
    std::vector<std::vector<uint64_t>> syn(maxw + 1, std::vector<uint64_t>(words, 0));
    std::function<void(size_t)> rec = [&](size_t from) {
        fn(sup, syn[sup.size()]);
        if (sup.size() == maxw) return;
        for (size_t j = from; j < cols.size(); j++) {
            size_t d = sup.size();
            for (size_t w = 0; w < words; w++) syn[d + 1][w] = syn[d][w] ^ cols[j][w];
            sup.push_back(static_cast<uint32_t>(j));
            rec(j + 1);
            sup.pop_back();
        }
    };
    rec(0);
}

uint64_t hash_words(const std::vector<uint64_t> &w) {
    uint64_t h = 0x84222325cbf29ce4ULL;
    for (uint64_t x : w) h = splitmix64(h ^ x);
    return h;
}

}  // namespace

DistanceEstimate estimate_distance(const CssCode &c, const EstimateOptions &opts) {
    if (c.k() == 0) throw std::invalid_argument("code encodes no logical qubits");
    DistanceEstimate e;
    e.trials = opts.trials;
    e.x = estimate_type(c.hx(), c.hz(), opts, 1);
    e.z = estimate_type(c.hz(), c.hx(), opts, 2);
    return e;
}

Certificate certify_type(const BinaryMatrix &h, const BinaryMatrix &s, size_t t, const CertifyOptions &opts) {
    if (t > opts.cap) {
        throw std::invalid_argument("claimed distance " + std::to_string(t) + " exceeds the certification cap " +
                                    std::to_string(opts.cap));
    }
    Certificate cert;
    cert.claimed_d = t;
    cert.verified = true;
    if (t <= 1) return cert;
    size_t n = h.cols();
    size_t maxw = t - 1;
    size_t small = maxw / 2, big = maxw - small;
    uint64_t table = binomial_sum(n, small), probes = binomial_sum(n, big);
    if (table == UINT64_MAX || probes == UINT64_MAX || table + probes > opts.budget) {
        throw BudgetExceeded("certification at t=" + std::to_string(t) + " on n=" + std::to_string(n) +
                                 " needs more than the enumeration budget",
                             table == UINT64_MAX || probes == UINT64_MAX ? UINT64_MAX : table + probes);
    }
    size_t words = (h.rows() + 63) / 64;
    std::vector<std::vector<uint64_t>> cols(n, std::vector<uint64_t>(words, 0));
    for (size_t j = 0; j < n; j++) {
        for (size_t i = 0; i < h.rows(); i++) {
            if (h.get(i, j)) cols[j][i / 64] |= uint64_t{1} << (i % 64);
        }
    }
    struct Entry {
        uint64_t hash;
        uint32_t index;
    };
    std::vector<Entry> entries;
    std::vector<uint32_t> supports;  // `small` slots per entry, UINT32_MAX padded
    std::vector<uint64_t> syndromes;
    entries.reserve(table);
    for_each_support(cols, words, small, [&](const std::vector<uint32_t> &sup, const std::vector<uint64_t> &syn) {
        entries.push_back({hash_words(syn), static_cast<uint32_t>(entries.size())});
        for (size_t i = 0; i < small; i++) supports.push_back(i < sup.size() ? sup[i] : UINT32_MAX);
        syndromes.insert(syndromes.end(), syn.begin(), syn.end());
    });
    std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
        return a.hash != b.hash ? a.hash < b.hash : a.index < b.index;
    });
    RowSpace stab(s);
    size_t best = SIZE_MAX;
    for_each_support(cols, words, big, [&](const std::vector<uint32_t> &sup, const std::vector<uint64_t> &syn) {
        if (best == 1) return;
        uint64_t hv = hash_words(syn);
        auto lo = std::lower_bound(entries.begin(), entries.end(), hv,
                                   [](const Entry &e, uint64_t v) { return e.hash < v; });
        for (auto it = lo; it != entries.end() && it->hash == hv; ++it) {
            if (!std::equal(syn.begin(), syn.end(), syndromes.begin() + it->index * words)) continue;
            BinaryVector x(n);
            for (uint32_t j : sup) x.flip(j);
            for (size_t i = 0; i < small; i++) {
                uint32_t j = supports[it->index * small + i];
                if (j != UINT32_MAX) x.flip(j);
            }
            size_t w = x.weight();
            if (w == 0 || w >= best || stab.contains(x)) continue;
            best = w;
            cert.witness = x;
        }
    });
    cert.enumerated = table + probes;
    cert.verified = !cert.witness.has_value();
    return cert;
}

Certificate certify_distance(const CssCode &c, size_t t, const CertifyOptions &opts) {
    Certificate cx = certify_type(c.hx(), c.hz(), t, opts);
    Certificate cz = certify_type(c.hz(), c.hx(), t, opts);
    Certificate out;
    out.claimed_d = t;
    out.enumerated = cx.enumerated + cz.enumerated;
    out.verified = cx.verified && cz.verified;
    if (cx.witness && (!cz.witness || cx.witness->weight() <= cz.witness->weight())) {
        out.witness = cx.witness;
        out.witness_is_x = true;
    } else if (cz.witness) {
        out.witness = cz.witness;
    }
    return out;
}

size_t exact_distance(const CssCode &c, const CertifyOptions &opts) {
    if (c.k() == 0) throw std::invalid_argument("code encodes no logical qubits");
    for (size_t t = 2;; t++) {
        Certificate cert = certify_distance(c, t, opts);
        if (!cert.verified) return cert.witness->weight();
    }
}

// ---------------------------------------------------------------------------
// Weight-3 falsifier. Paulis on n <= 16 qubits pack as x | z << 16.

namespace {

using Packed = uint32_t;

bool sym_commute(Packed a, Packed b) {
    uint32_t ax = a & 0xffff, az = a >> 16, bx = b & 0xffff, bz = b >> 16;
    return (std::popcount((ax & bz) ^ (az & bx)) & 1) == 0;
}

int pauli_weight(Packed a) { return std::popcount((a & 0xffff) | (a >> 16)); }

/// Incremental GF(2) basis over packed symplectic vectors.
struct PackedBasis {
    std::vector<Packed> rows;  // each with a distinct leading bit
    Packed reduce(Packed v) const {
        for (Packed r : rows) v = std::min(v, v ^ r);
        return v;
    }
    bool insert(Packed v) {
        v = reduce(v);
        if (!v) return false;
        rows.push_back(v);
        std::sort(rows.begin(), rows.end(), std::greater<>());
        return true;
    }
};

std::vector<Packed> paulis_up_to(size_t n, int wmax) {
    std::vector<Packed> out;
    uint32_t full = (1u << n) - 1;
    for (uint32_t x = 0; x <= full; x++) {
        for (uint32_t z = 0; z <= full; z++) {
            Packed p = x | (z << 16);
            int w = pauli_weight(p);
            if (w >= 1 && w <= wmax) out.push_back(p);
        }
    }
    return out;
}

/// True when no Pauli in `light` commutes with the group without lying in it.
bool no_light_logical(const std::vector<Packed> &gens, const PackedBasis &basis, const std::vector<Packed> &light) {
    for (Packed p : light) {
        bool comm = true;
        for (Packed g : gens) {
            if (!sym_commute(p, g)) {
                comm = false;
                break;
            }
        }
        if (comm && basis.reduce(p) != 0) return false;
    }
    return true;
}

StabilizerCode to_code(size_t n, const std::vector<Packed> &gens) {
    std::vector<PauliOperator> ops;
    for (Packed g : gens) {
        PauliOperator p(n);
        for (size_t i = 0; i < n; i++) {
            p.x.set(i, (g >> i) & 1);
            p.z.set(i, (g >> (16 + i)) & 1);
        }
        ops.push_back(p);
    }
    return StabilizerCode(n, ops);
}

}  // namespace

bool stabilizer_distance_at_least3(const StabilizerCode &c) {
    size_t n = c.n();
    BinaryMatrix sym = symplectic_matrix(c.checks(), n);
    RowSpace group(sym);
    auto test = [&](const PauliOperator &p) {
        for (const auto &g : c.checks()) {
            if (!p.commutes(g)) return true;
        }
        BinaryVector v(2 * n);
        for (size_t i = 0; i < n; i++) {
            v.set(i, p.x.get(i));
            v.set(n + i, p.z.get(i));
        }
        return group.contains(v);
    };
    const char letters[3] = {'X', 'Y', 'Z'};
    auto make = [&](std::initializer_list<std::pair<size_t, char>> parts) {
        std::string s(n, 'I');
        for (auto [q, l] : parts) s[q] = l;
        return PauliOperator::from_string(s);
    };
    for (size_t i = 0; i < n; i++) {
        for (char a : letters) {
            if (!test(make({{i, a}}))) return false;
            for (size_t j = i + 1; j < n; j++) {
                for (char b : letters) {
                    if (!test(make({{i, a}, {j, b}}))) return false;
                }
            }
        }
    }
    return true;
}

FalsifierReport falsify_weight3(const FalsifierOptions &opts) {
    if (opts.n_exhaustive > 6) throw std::invalid_argument("exhaustive mode supports n <= 6");
    if (opts.random_n > 16) throw std::invalid_argument("randomized mode supports n <= 16");
    FalsifierReport rep;
    rep.n_max = std::max(opts.n_exhaustive, opts.random_trials ? opts.random_n : size_t{0});

    for (size_t n = 1; n <= opts.n_exhaustive; n++) {
        auto checks = paulis_up_to(n, 3);
        auto light = paulis_up_to(n, 2);
        for (size_t r = 1; r < n; r++) {
            for (int w0 = 1; w0 <= 3 && w0 <= static_cast<int>(n); w0++) {
                Packed first = ((1u << w0) - 1) << 16;  // Z^{⊗w0}
                std::vector<Packed> gens{first};
                PackedBasis basis;
                basis.insert(first);
                std::function<void(size_t)> rec = [&](size_t from) {
                    if (gens.size() == r) {
                        rep.exhaustive_codes++;
                        rep.codes_with_logicals++;
                        if (no_light_logical(gens, basis, light)) rep.counterexamples.push_back({to_code(n, gens), n - r});
                        return;
                    }
                    for (size_t i = from; i < checks.size(); i++) {
                        Packed p = checks[i];
                        bool ok = true;
                        for (Packed g : gens) {
                            if (!sym_commute(p, g)) {
                                ok = false;
                                break;
                            }
                        }
                        if (!ok) continue;
                        PackedBasis saved = basis;
                        if (!basis.insert(p)) continue;
                        gens.push_back(p);
                        rec(i + 1);
                        gens.pop_back();
                        basis = std::move(saved);
                    }
                };
                rec(0);
            }
        }
    }

    if (opts.random_trials) {
        size_t n = opts.random_n;
        auto checks = paulis_up_to(n, 3);
        auto light = paulis_up_to(n, 2);
        Rng rng(substream_seed(opts.seed, {3}));
        for (uint64_t t = 0; t < opts.random_trials; t++) {
            size_t target = 1 + rng.below(n - 1);
            std::vector<Packed> gens;
            PackedBasis basis;
            for (int attempt = 0; attempt < 400 && gens.size() < target; attempt++) {
                Packed p = checks[rng.below(checks.size())];
                bool ok = true;
                for (Packed g : gens) {
                    if (!sym_commute(p, g)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && basis.insert(p)) gens.push_back(p);
            }
            rep.random_codes++;
            if (gens.empty() || gens.size() >= n) continue;
            rep.codes_with_logicals++;
            if (no_light_logical(gens, basis, light)) rep.counterexamples.push_back({to_code(n, gens), n - gens.size()});
        }
    }
    return rep;
}

}  // namespace qcw
